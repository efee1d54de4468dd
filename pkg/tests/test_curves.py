"""Carried curves: complements, push-offs, enumeration, reduction."""

import itertools
import random

import pytest

from curvekit.curves import (
    Overlay,
    complement,
    enumerate_disjoint_curves,
    extract_ladder,
    intersection_number,
    parallel_copy,
    reduce_bigons,
    reference_arcs,
    skeleton_pushoff,
)
from curvekit.errors import BigonFoundError, UnsupportedDecompositionError
from curvekit.ladder import Ladder, canonical_form, random_ladder
from curvekit.surface import build_complex, decomposition

L10 = Ladder((1, 5, 9, 3, 2, 6, 10, 4, 7, 6), (10, 4, 8, 2, 1, 5, 9, 3, 8, 7))
TORUS = Ladder((1,), (1,))


def random_complex(n, rng):
    """A buildable random complex; skips pairs with bigon faces."""
    while True:
        try:
            return build_complex(random_ladder(n, rng))
        except BigonFoundError:
            continue


@pytest.fixture(scope="module")
def cx10():
    return build_complex(L10)


@pytest.fixture(scope="module")
def pushoffs(cx10):
    return skeleton_pushoff(cx10, "v"), skeleton_pushoff(cx10, "w")


# -- complements ------------------------------------------------------------


def test_filling_pair_cuts_to_discs(cx10):
    rep = complement(cx10, ["v", "w"])
    assert rep.fills
    assert len(rep.components) == 8
    assert all(c.kind == "disc" for c in rep.components)


def test_every_valid_ladder_cuts_to_faces():
    rng = random.Random(7)
    for n in (1, 3, 4, 5, 6):
        for _ in range(3):
            cx = random_complex(n, rng)
            rep = complement(cx, ["v", "w"])
            assert rep.fills
            assert len(rep.components) == cx.n + 2 - 2 * cx.genus


def test_single_curve_complement(cx10):
    for which in ("v", "w"):
        rep = complement(cx10, [which])
        assert len(rep.components) == 1
        comp = rep.components[0]
        # Cutting a genus-2 surface along one nonseparating curve leaves
        # genus 1 with two boundary circles.
        assert (comp.euler, comp.boundaries, comp.genus) == (-2, 2, 1)
        assert comp.kind == "other"


def test_torus_cut_along_v_is_annulus():
    rep = complement(build_complex(TORUS), ["v"])
    assert [c.kind for c in rep.components] == ["annulus"]


def test_pushoff_cobounds_annulus_with_skeleton(cx10, pushoffs):
    pv, _pw = pushoffs
    rep = complement(cx10, ["v", pv])
    kinds = sorted(c.kind for c in rep.components)
    assert kinds == ["annulus", "other"]
    annulus = next(c for c in rep.components if c.kind == "annulus")
    flavors = set()
    for circle in annulus.boundary_sources:
        flavors.add(frozenset(s[0] for s in circle))
    assert flavors == {frozenset({"v"}), frozenset({"curve"})}


# -- intersection numbers ----------------------------------------------------


def test_skeleton_intersection_number(cx10, pushoffs):
    pv, pw = pushoffs
    assert intersection_number(pv, pw) == 10
    assert intersection_number(pw, pv) == 10


def test_parallel_copy_is_disjoint(cx10, pushoffs):
    for c in pushoffs:
        assert intersection_number(c, parallel_copy(c)) == 0


def test_reduction_is_idempotent(cx10, pushoffs):
    pv, pw = pushoffs
    r1, r2 = reduce_bigons(pv, pw)
    assert reduce_bigons(r1, r2) == (r1, r2)


def test_freeze_roundtrip(cx10, pushoffs):
    for c in pushoffs:
        again = Overlay.from_curves(cx10, [c]).freeze(0)
        assert again == c


# -- reference arcs ----------------------------------------------------------


def test_reference_arcs_one_per_w_arc(cx10):
    arcs = reference_arcs(decomposition(cx10))
    assert [a.index for a in arcs] == list(range(1, 11))
    for a in arcs:
        d1, d2 = a.v_sides
        assert d1 != d2
        assert cx10.dart_edge(d1)[0] == "v"
        assert cx10.dart_edge(d2)[0] == "v"
        assert cx10.face_north_of_w(a.index) == a.face


def test_reference_arcs_refuse_large_faces():
    rng = random.Random(3)
    while True:
        dec = decomposition(random_complex(6, rng))
        if any(dec.counts[2:]):
            break
    with pytest.raises(UnsupportedDecompositionError):
        reference_arcs(dec)


# -- enumeration -------------------------------------------------------------


def test_bound_zero_is_empty(cx10):
    assert list(enumerate_disjoint_curves(cx10, "v", 0)) == []


def test_torus_stream_is_empty():
    # Every essential curve disjoint from v on the torus is isotopic to v.
    cx = build_complex(TORUS)
    assert list(enumerate_disjoint_curves(cx, "v", 2)) == []


def test_stream_regression(cx10):
    assert len(list(enumerate_disjoint_curves(cx10, "v", 2))) == 28
    assert len(list(enumerate_disjoint_curves(cx10, "w", 2))) == 28


def test_stream_curves_avoid_base(cx10, pushoffs):
    pv, _ = pushoffs
    stream = list(enumerate_disjoint_curves(cx10, "v", 1))
    assert len(stream) == 6
    for c in stream:
        assert all(e[0] == "w" for e, _ in c.edge_points())
        assert intersection_number(c, pv) == 0


def _naive_stream(cx, base, bound):
    """Independent enumeration: brute-force pairings filtered afterwards."""
    other = "w" if base == "v" else "v"
    n = cx.n
    edges = [(other, t) for t in range(1, n + 1)]

    def pairings(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for i in range(len(rest)):
            for sub in pairings(rest[:i] + rest[i + 1 :]):
                yield [(first, rest[i])] + sub

    out = []
    for combo in itertools.product(range(bound + 1), repeat=n):
        if not any(combo):
            continue
        vector = dict(zip(edges, combo))
        slots_per_face = []
        for f, orbit in enumerate(cx.faces):
            slots = []
            for r, dart in enumerate(orbit):
                kind, idx, coh = cx.dart_edge(dart)
                if kind != other:
                    continue
                m = vector[(kind, idx)]
                ks = range(m) if coh else range(m - 1, -1, -1)
                slots.extend((r, (kind, idx), k, dart) for k in ks)
            slots_per_face.append(slots)
        if any(len(s) % 2 for s in slots_per_face):
            continue

        def face_options(slots):
            opts = []
            for m in pairings(list(range(len(slots)))):
                good = True
                for a, b in m:
                    if slots[a][0] == slots[b][0]:
                        good = False
                for (a, b), (c, d) in itertools.combinations(
                    (tuple(sorted(p)) for p in m), 2
                ):
                    if (a < c < b) != (a < d < b):
                        good = False
                if good:
                    opts.append(m)
            return opts

        all_opts = [face_options(s) for s in slots_per_face]
        if any(not o for o, s in zip(all_opts, slots_per_face) if s):
            pass
        for choice in itertools.product(*all_opts):
            ov = Overlay(cx)
            pid_at = {}
            for edge in edges:
                for k in range(vector[edge]):
                    pid_at[(edge, k)] = ov.new_point(edge, k, 0)
            for slots, match in zip(slots_per_face, choice):
                for a, b in match:
                    _r1, e1, k1, d1 = slots[a]
                    _r2, e2, k2, d2 = slots[b]
                    ov.connect((pid_at[(e1, k1)], d1), (pid_at[(e2, k2)], d2))
            if len(ov.links) != 2 * len(ov.points):
                continue
            if ov.component_count() != 1:
                continue
            curve = ov.freeze(0)
            rep = complement(cx, [base, curve])
            keep = True
            for comp in rep.components:
                for circle in comp.boundary_sources:
                    pure = all(s == ("curve", 0) for s in circle)
                    if comp.kind == "disc" and pure and len(circle) == len(curve):
                        keep = False
                if comp.kind == "annulus":
                    tags = []
                    for circle in comp.boundary_sources:
                        if all(s == ("curve", 0) for s in circle):
                            tags.append("c")
                        elif all(s[0] == base for s in circle) and len(
                            set(circle)
                        ) == cx.n:
                            tags.append("base")
                        else:
                            tags.append("mixed")
                    if sorted(tags) == ["base", "c"]:
                        keep = False
            if keep:
                out.append(curve)
    return out


def test_enumeration_matches_naive_oracle():
    rng = random.Random(11)
    cases = [build_complex(TORUS)] + [random_complex(n, rng) for n in (3, 4, 5, 6)]
    for cx in cases:
        for base in ("v", "w"):
            fast = list(enumerate_disjoint_curves(cx, base, 1))
            slow = _naive_stream(cx, base, 1)
            assert set(fast) == set(slow), (cx.ladder, base)
            assert len(fast) == len(slow)


# -- extraction --------------------------------------------------------------


def _pair_orbit(ladder):
    """Canonical ladders reachable by re-choosing directions on v and w.

    Reversing v renumbers the arc labels backwards; reversing the direction
    of travel along w flips the column order and swaps the two sides.
    """
    n = ladder.n
    rev_v = Ladder(
        tuple((n - x) % n + 1 for x in ladder.top),
        tuple((n - x) % n + 1 for x in ladder.bottom),
    )
    out = set()
    for lad in (ladder, rev_v):
        for cand in (lad, Ladder(tuple(reversed(lad.bottom)), tuple(reversed(lad.top)))):
            out.add(canonical_form(cand).canonical_ladder)
    return out


def test_extracting_the_pushoff_recovers_the_ladder(cx10, pushoffs):
    pv, _ = pushoffs
    lad, witness = extract_ladder(cx10, pv)
    assert _pair_orbit(lad) & _pair_orbit(L10)
    assert len(witness) == 10


def test_extracted_candidate_pairs_keep_genus(cx10):
    seen = 0
    for c in enumerate_disjoint_curves(cx10, "v", 2):
        if not complement(cx10, ["w", c]).fills:
            continue
        lad, witness = extract_ladder(cx10, c)
        sub = build_complex(lad)
        assert sub.genus == cx10.genus
        assert lad.n == len(c)
        assert len(witness) == len(c)
        seen += 1
        if seen == 5:
            break
    assert seen == 5
