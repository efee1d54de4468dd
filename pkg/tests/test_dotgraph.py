"""Sequence, sawtooth, and region machinery against independent oracles."""

import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvekit.curves import (
    enumerate_disjoint_curves,
    reference_arcs,
    skeleton_pushoff,
)
from curvekit.dotgraph import (
    DotGraph,
    IntersectionSequence,
    Region,
    build_dot_graph,
    common_regions,
    extend,
    find_regions,
    intersection_sequence,
    sawtooth,
    stack,
)
from curvekit.errors import MisalignedError, NotConsecutiveError
from curvekit.ladder import Ladder
from curvekit.surface import W, build_complex, decomposition

L10 = Ladder((1, 5, 9, 3, 2, 6, 10, 4, 7, 6), (10, 4, 8, 2, 1, 5, 9, 3, 8, 7))


def is_sawtooth(entries):
    return all(b <= a + 1 for a, b in zip(entries, entries[1:]))


def ext_seq(entries, arc=1):
    return IntersectionSequence(arc, tuple(entries), extended=True)


@pytest.fixture(scope="module")
def cx10():
    return build_complex(L10)


@pytest.fixture(scope="module")
def arcs(cx10):
    return reference_arcs(decomposition(cx10))


# -- sawtooth ----------------------------------------------------------------


def test_sawtooth_worked_example():
    out = sawtooth(ext_seq((0, 1, 2, 0, 3, 4, 0)))
    assert out.entries == (0, 1, 2, 3, 4, 0, 0)


def test_sawtooth_fixed_point():
    seq = IntersectionSequence(1, (1, 2, 3))
    assert sawtooth(seq).entries == (1, 2, 3)


def test_sawtooth_confluence_exhaustive():
    # Swaps of adjacent entries differing by >= 2 are reversible, so each
    # reachability class is an undirected component; the normal form is
    # well defined iff each class holds exactly one sawtooth member.
    for length in range(1, 8):
        seen = set()
        for start in itertools.product(range(5), repeat=length):
            if start in seen:
                continue
            comp = {start}
            frontier = [start]
            while frontier:
                cur = frontier.pop()
                for i in range(length - 1):
                    if abs(cur[i] - cur[i + 1]) >= 2:
                        nxt = cur[:i] + (cur[i + 1], cur[i]) + cur[i + 2 :]
                        if nxt not in comp:
                            comp.add(nxt)
                            frontier.append(nxt)
            seen |= comp
            forms = [s for s in comp if is_sawtooth(s)]
            assert len(forms) == 1, (start, forms)
            assert sawtooth(ext_seq(start)).entries == forms[0]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 6), max_size=12))
def test_sawtooth_invariants(entries):
    seq = IntersectionSequence(
        1, tuple(entries), provenance=tuple(range(len(entries))), extended=True
    )
    out = sawtooth(seq)
    assert sorted(out.entries) == sorted(entries)
    assert is_sawtooth(out.entries)
    # entries that differ by at most 1 never swap past each other, and
    # provenance stays glued to its entry
    where = {p: i for i, p in enumerate(out.provenance)}
    for i in range(len(entries)):
        assert entries[i] == out.entries[where[i]]
        for j in range(i + 1, len(entries)):
            if abs(entries[i] - entries[j]) <= 1:
                assert where[i] < where[j]


# -- extension ---------------------------------------------------------------


def test_extend_examples():
    a = IntersectionSequence(1, (1, 2))
    b = IntersectionSequence(2, (3, 4))
    assert extend(a, b).entries == (0, 1, 2, 0, 3, 4, 0)
    b2 = IntersectionSequence(2, (1, 2, 3, 4))
    assert extend(a, b2).entries == (0, 1, 2, 0, 1, 2, 3, 4, 0)
    empty1 = IntersectionSequence(3, ())
    empty2 = IntersectionSequence(4, ())
    assert extend(empty1, empty2).entries == (0, 0, 0)


def test_extend_requires_consecutive_arcs():
    a = IntersectionSequence(1, (1,))
    c = IntersectionSequence(3, (1,))
    with pytest.raises(NotConsecutiveError):
        extend(a, c)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 5), max_size=6), st.lists(st.integers(1, 5), max_size=6))
def test_extension_has_three_zeros(xs, ys):
    out = extend(
        IntersectionSequence(1, tuple(xs)), IntersectionSequence(2, tuple(ys))
    )
    assert out.entries.count(0) == 3
    assert out.extended


# -- dot graphs --------------------------------------------------------------


def test_runs_of_joined_example():
    joined = extend(
        IntersectionSequence(1, (1, 2)), IntersectionSequence(2, (1, 2, 3, 4))
    )
    g = build_dot_graph(joined)
    assert g.sequence.entries == (0, 1, 2, 0, 1, 2, 3, 4, 0)
    assert g.runs[:2] == ((1, 3), (4, 8))
    assert g.run_span(g.runs[0]) == (0, 2)
    assert g.run_span(g.runs[1]) == (0, 4)
    assert all(g.run_span(r) == (0, 0) for r in g.runs[2:])


def test_empty_graph():
    g = build_dot_graph(IntersectionSequence(1, ()))
    assert g.points == () and g.runs == ()
    assert find_regions(g) == []


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 6), max_size=14))
def test_run_decomposition_matches_naive_scanner(entries):
    g = build_dot_graph(ext_seq(entries))
    ys = g.sequence.entries
    # oracle: union x with x+1 whenever the step ascends by exactly 1
    parent = list(range(len(ys)))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for i in range(len(ys) - 1):
        if ys[i + 1] == ys[i] + 1:
            parent[find(i + 1)] = find(i)
    groups = {}
    for i in range(len(ys)):
        groups.setdefault(find(i), []).append(i + 1)
    expected = sorted((g[0], g[-1]) for g in groups.values())
    assert sorted(g.runs) == expected


def test_dot_graph_exports():
    g = build_dot_graph(ext_seq((0, 1, 2, 0, 0)))
    obj = json.loads(g.to_json())
    assert obj["points"] == [[1, 0], [2, 1], [3, 2], [4, 0], [5, 0]]
    text = g.render_text()
    lines = text.splitlines()
    assert len(lines) == 3  # heights 2, 1, 0
    assert lines[0].startswith(" 2 |")
    assert lines[-1].count("*") == 3


# -- regions -----------------------------------------------------------------


def region_kinds(entries):
    return [r.kind for r in find_regions(build_dot_graph(ext_seq(entries)))]


def test_box_between_equal_runs():
    regs = find_regions(build_dot_graph(IntersectionSequence(1, (1, 2, 1, 2))))
    assert len(regs) == 1
    box = regs[0]
    assert box.kind == "BOX"
    assert box.empty and box.unpierced
    assert box.horizontal_edges == ((1, 1, 3), (2, 2, 4))


def test_box_with_interior_point_is_not_empty():
    regs = find_regions(build_dot_graph(IntersectionSequence(1, (1, 2, 3, 2, 1, 2, 3))))
    boxes = [r for r in regs if r.kind == "BOX" and r.left_run == (1, 3)]
    assert boxes == [
        Region("BOX", (1, 3), (5, 7), ((1, 1, 5), (3, 3, 7)), False, True)
    ]


def test_box_pierced_on_horizontal_edge():
    regs = find_regions(build_dot_graph(IntersectionSequence(1, (1, 2, 1, 1, 2))))
    boxes = [r for r in regs if r.kind == "BOX"]
    assert len(boxes) == 1
    assert boxes[0].empty and not boxes[0].unpierced


def test_degenerate_00_detection():
    one_sided = extend(IntersectionSequence(1, (1, 2)), IntersectionSequence(2, ()))
    kinds = [r.kind for r in find_regions(build_dot_graph(one_sided))]
    assert kinds.count("DEGENERATE_00") == 1
    other = extend(IntersectionSequence(1, ()), IntersectionSequence(2, (3, 4)))
    g = build_dot_graph(other)
    assert g.sequence.entries == (3, 4, 0, 0, 0)
    kinds = [r.kind for r in find_regions(g)]
    assert kinds.count("DEGENERATE_00") == 2
    degs = [r for r in find_regions(g) if r.kind == "DEGENERATE_00"]
    assert all(r.empty and r.unpierced for r in degs)


def test_hexagons_and_acute_flags():
    # shared bottom: taller left run leaves the acute outside wedge
    regs = find_regions(build_dot_graph(IntersectionSequence(1, (1, 2, 3, 1, 2))))
    hexes = [r for r in regs if r.kind.startswith("HEX")]
    assert [(r.kind, r.acute_exterior) for r in hexes] == [("HEX1", True)]
    assert hexes[0].empty and hexes[0].unpierced

    regs = find_regions(build_dot_graph(IntersectionSequence(1, (1, 2, 1, 2, 3))))
    hexes = [r for r in regs if r.kind.startswith("HEX")]
    assert [(r.kind, r.acute_exterior) for r in hexes] == [("HEX1", False)]

    # shared top: deeper right run leaves the acute wedge
    regs = find_regions(build_dot_graph(IntersectionSequence(1, (2, 3, 1, 2, 3))))
    hexes = [r for r in regs if r.kind.startswith("HEX")]
    assert [(r.kind, r.acute_exterior) for r in hexes] == [("HEX2", True)]

    regs = find_regions(build_dot_graph(IntersectionSequence(1, (1, 2, 3, 2, 3))))
    hexes = [r for r in regs if r.kind.startswith("HEX")]
    assert [(r.kind, r.acute_exterior) for r in hexes] == [("HEX2", False)]


def test_find_regions_is_deterministic():
    g = build_dot_graph(ext_seq((0, 1, 2, 0, 1, 2, 0)))
    assert find_regions(g) == find_regions(g)
    assert len(set(find_regions(g))) == len(find_regions(g))


# -- stacking ----------------------------------------------------------------


def good_layer():
    return build_dot_graph(
        extend(IntersectionSequence(1, (1, 2)), IntersectionSequence(2, (1, 2)))
    )


def bad_layer():
    # the lone BOX candidate is pierced on its bottom edge
    return build_dot_graph(ext_seq((1, 2, 1, 1, 2)))


def test_stack_of_witnessed_layers():
    s = stack([good_layer() for _ in range(4)])
    assert s.layer_count == 4
    assert s.spacing == 3  # largest curve index 2, plus one
    regs = common_regions(s)
    assert len(regs) == 4
    assert all(r.empty and r.unpierced for r in regs)


def test_stack_with_one_bare_layer_has_no_common_region():
    layers = [good_layer(), good_layer(), bad_layer()]
    assert common_regions(stack(layers)) == []


def test_single_layer_stack_reduces_to_find_regions():
    g = good_layer()
    expected = [r for r in find_regions(g) if r.empty and r.unpierced]
    assert common_regions(stack([g])) == expected


def test_stack_rejects_mixed_or_plain_layers():
    with pytest.raises(MisalignedError):
        stack([good_layer(), build_dot_graph(ext_seq((1, 2), arc=5))])
    with pytest.raises(MisalignedError):
        stack([build_dot_graph(IntersectionSequence(1, (1, 2)))])
    with pytest.raises(ValueError):
        stack([])


# -- sequences from carried curves -------------------------------------------


def naive_sequence(path, arc):
    """Crossing order recomputed from raw segment data, bypassing Overlay."""
    cx = path[0].complex_
    orbit = cx.faces[arc.face]
    r_north = orbit.index((arc.index, W))
    crossings = []
    for cid, curve in enumerate(path):
        pts = curve.edge_points()
        nseg = len(curve.segments)
        for s, (f, entry, exit_) in enumerate(curve.segments):
            if f != arc.face:
                continue
            ends = []
            if entry[0] == r_north:
                ends.append(s)
            if exit_[0] == r_north:
                ends.append((s + 1) % nseg)
            if len(ends) == 1:
                edge, cpos = pts[ends[0]]
                assert edge == ("w", arc.index)
                crossings.append((cpos, cid, ends[0]))
    crossings.sort()
    return tuple(cid + 1 for _, cid, _ in crossings)


@pytest.fixture(scope="module")
def three_curves(cx10):
    stream = enumerate_disjoint_curves(cx10, "v", 2)
    extra = [next(stream), next(stream)]
    return [skeleton_pushoff(cx10, "v")] + extra


def test_sequences_match_brute_force(cx10, arcs, three_curves):
    total = 0
    for arc in arcs:
        seq = intersection_sequence(three_curves, arc)
        assert seq.entries == naive_sequence(three_curves, arc)
        assert seq.arc_count == cx10.n
        for e, p in zip(seq.entries, seq.provenance):
            assert p is three_curves[e - 1]
        total += len(seq)
    assert total > 0


def test_single_curve_sequences_are_all_ones(arcs, three_curves):
    path = [three_curves[1]]
    for arc in arcs:
        seq = intersection_sequence(path, arc)
        assert set(seq.entries) <= {1}
        assert len(seq) == len(naive_sequence(path, arc))


def test_curve_missing_the_arc_gives_empty_sequence(cx10, arcs):
    pw = skeleton_pushoff(cx10, "w")  # crosses only v-arcs
    for arc in arcs:
        assert intersection_sequence([pw], arc).entries == ()
    assert intersection_sequence([], arcs[0]).entries == ()


def test_extend_wraps_cyclically(arcs, three_curves):
    seqs = [intersection_sequence(three_curves, a) for a in arcs]
    joined = extend(seqs[-1], seqs[0])
    assert joined.entries.count(0) == 3
    with pytest.raises(NotConsecutiveError):
        extend(seqs[0], seqs[2])
