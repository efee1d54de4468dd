"""Intersection sequences, sawtooth form, and dot graphs.

A reference arc runs parallel to one w-arc.  Crossings of the carried
curves with the arc, read off in order, give a sequence of curve indices;
sawtooth form rearranges it by swapping adjacent entries that differ by
at least 2 (curves that already intersect), after which ascending steps
are exactly +1 and the graph of the sequence decomposes into slope-1
runs.  Horizontal edges between runs enclose regions whose emptiness
drives the surgery machinery.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .curves import Overlay, ReferenceArc, TransverseCurve, _dart_pos
from .errors import MisalignedError, NotConsecutiveError
from .surface import W

__all__ = [
    "IntersectionSequence",
    "DotGraph",
    "Region",
    "StackedDotGraph",
    "intersection_sequence",
    "sawtooth",
    "extend",
    "build_dot_graph",
    "find_regions",
    "stack",
    "common_regions",
]


@dataclass(frozen=True)
class IntersectionSequence:
    """Crossings along one reference arc, as curve indices in arc order.

    entries[i] = j means the (i+1)-th crossing lies on the j-th curve of
    the path (1-based); extended sequences also carry 0 entries for the
    base curve.  provenance holds one opaque source per entry (the curve
    object, or None for 0 entries) and travels with the entries through
    sawtooth reordering; it does not take part in equality.
    """

    arc_index: int
    entries: tuple[int, ...]
    provenance: tuple = field(default=None, compare=False, repr=False)
    extended: bool = False
    arc_count: int | None = field(default=None, compare=False)

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if self.provenance is None:
            object.__setattr__(self, "provenance", entries)
        else:
            object.__setattr__(self, "provenance", tuple(self.provenance))
        if len(self.provenance) != len(entries):
            raise ValueError("provenance length must match entries")
        low = 0 if self.extended else 1
        for e in entries:
            if e < low:
                raise ValueError(f"entry {e} below {low}")

    def __len__(self) -> int:
        return len(self.entries)


def _is_sawtooth(entries: tuple[int, ...]) -> bool:
    # ascending steps must be exactly +1, i.e. no adjacent jump of >= 2
    return all(b <= a + 1 for a, b in zip(entries, entries[1:]))


def intersection_sequence(
    path: list[TransverseCurve], arc: ReferenceArc
) -> IntersectionSequence:
    """Crossing sequence of the path's curves along one reference arc.

    The arc is traversed in the canonical direction of its w-edge; the
    curves are carried jointly so crossings of different curves interleave
    consistently across all arcs.  A chord returning to the arc's own side
    of the w-edge stays between the arc and the edge and contributes no
    crossing.
    """
    if not path:
        return IntersectionSequence(arc.index, (), (), arc_count=None)
    cx = path[0].complex_
    ov = Overlay.from_curves(cx, list(path))
    north = (arc.index, W)
    if _dart_pos(cx)[north][0] != arc.face:
        raise ValueError("arc does not belong to this complex")
    entries = []
    prov = []
    for pid in ov.edge_order.get(("w", arc.index), []):
        qid, qdart = ov.links[(pid, north)]
        if ov.points[qid] == ("w", arc.index) and qdart == north:
            continue
        cid = ov.curve_of[pid]
        entries.append(cid + 1)
        prov.append(path[cid])
    return IntersectionSequence(
        arc.index, tuple(entries), tuple(prov), arc_count=cx.n
    )


def sawtooth(seq: IntersectionSequence) -> IntersectionSequence:
    """Sawtooth normal form: repeatedly swap the leftmost adjacent pair
    that ascends by 2 or more.  Entries differing by at most 1 never swap,
    so their relative order survives.  The exhaustive small-size test in
    the suite certifies the result is independent of swap strategy."""
    entries = list(seq.entries)
    prov = list(seq.provenance)
    while True:
        for i in range(len(entries) - 1):
            if entries[i + 1] >= entries[i] + 2:
                entries[i], entries[i + 1] = entries[i + 1], entries[i]
                prov[i], prov[i + 1] = prov[i + 1], prov[i]
                break
        else:
            break
    return replace(seq, entries=tuple(entries), provenance=tuple(prov))


def extend(
    first: IntersectionSequence, second: IntersectionSequence
) -> IntersectionSequence:
    """Join the sequences of two consecutive arcs as (0, first, 0, second, 0).

    The three 0 entries are the base curve's crossings of the joined arc.
    """
    if first.extended or second.extended:
        raise ValueError("extend takes plain sequences")
    n = first.arc_count if first.arc_count is not None else second.arc_count
    if (
        first.arc_count is not None
        and second.arc_count is not None
        and first.arc_count != second.arc_count
    ):
        raise NotConsecutiveError("sequences come from different arc systems")
    a, b = first.arc_index, second.arc_index
    if n is not None:
        ok = b == a % n + 1
    else:
        # cyclic labels with unknown period: accept +1 and the wrap to 1
        ok = b == a + 1 or (b == 1 and a > 1)
    if not ok:
        raise NotConsecutiveError(f"arcs {a} and {b} are not consecutive")
    entries = (0,) + first.entries + (0,) + second.entries + (0,)
    prov = (None,) + first.provenance + (None,) + second.provenance + (None,)
    assert entries.count(0) == 3, "extension must create exactly three 0s"
    return IntersectionSequence(a, entries, prov, extended=True, arc_count=n)


# --------------------------------------------------------------------------
# Dot graphs


@dataclass(frozen=True)
class DotGraph:
    """Points (x, entries[x]) of a sawtooth sequence, 1-based in x, with
    the maximal slope-1 runs precomputed as inclusive (start_x, end_x)."""

    sequence: IntersectionSequence
    points: tuple[tuple[int, int], ...]
    runs: tuple[tuple[int, int], ...]

    def height(self, x: int) -> int:
        return self.sequence.entries[x - 1]

    def run_span(self, run: tuple[int, int]) -> tuple[int, int]:
        """(bottom, top) heights of a run."""
        return self.height(run[0]), self.height(run[1])

    @property
    def regions(self) -> list["Region"]:
        return find_regions(self)

    def to_json_obj(self) -> dict:
        return {
            "arc": self.sequence.arc_index,
            "points": [[x, y] for x, y in self.points],
            "runs": [[a, b] for a, b in self.runs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    def render_text(self) -> str:
        """Plain-text plot, one row per height, top row first."""
        if not self.points:
            return "(empty)\n"
        top = max(y for _, y in self.points)
        width = len(self.points)
        rows = []
        for y in range(top, -1, -1):
            cells = ["*" if self.height(x) == y else "." for x in range(1, width + 1)]
            rows.append(f"{y:2d} | " + " ".join(cells))
        return "\n".join(rows) + "\n"


def build_dot_graph(seq: IntersectionSequence) -> DotGraph:
    """Graph of the sequence; sawtooth form is applied first if needed."""
    if not _is_sawtooth(seq.entries):
        seq = sawtooth(seq)
    entries = seq.entries
    points = tuple((i + 1, e) for i, e in enumerate(entries))
    runs = []
    i = 0
    while i < len(entries):
        j = i
        while j + 1 < len(entries) and entries[j + 1] == entries[j] + 1:
            j += 1
        runs.append((i + 1, j + 1))
        i = j + 1
    return DotGraph(seq, points, tuple(runs))


# --------------------------------------------------------------------------
# Regions


@dataclass(frozen=True)
class Region:
    """A candidate surgery region between two runs of a dot graph.

    kind BOX: the runs span the same heights, closed top-to-top and
    bottom-to-bottom by horizontal edges.  kind HEX1 / HEX2: the spans
    share exactly their bottom resp. top height; the far end closes with
    a horizontal edge where the shorter run stops, the longer run's
    remainder staying on the boundary.  This hexagon encoding is a
    provisional reading (see the module tests); acute_exterior marks the
    hexagons whose closure junction leaves a 45-degree outside wedge,
    which the surgery layer refuses.  kind DEGENERATE_00: two adjacent
    height-0 entries of an extended sequence.

    empty: no graph point strictly inside.  unpierced: no graph point on
    the open interior of a horizontal edge; corner contact never pierces.
    """

    kind: str
    left_run: tuple[int, int]
    right_run: tuple[int, int]
    horizontal_edges: tuple[tuple[int, int, int], ...]
    empty: bool
    unpierced: bool
    acute_exterior: bool = False


def _classify_pair(g: DotGraph, left: tuple[int, int], right: tuple[int, int]):
    la, lb = g.run_span(left)
    ra, rb = g.run_span(right)
    if lb == la or rb == ra:
        return None
    if (la, lb) == (ra, rb):
        kind, lo, hi, acute = "BOX", la, lb, False
        edges = ((la, left[0], right[0]), (lb, left[1], right[1]))
    elif la == ra and lb != rb:
        kind, lo, hi = "HEX1", la, min(lb, rb)
        acute = lb > rb
        edges = (
            (la, left[0], right[0]),
            (hi, left[0] + (hi - la), right[0] + (hi - ra)),
        )
    elif lb == rb and la != ra:
        kind, lo, hi = "HEX2", max(la, ra), lb
        acute = la > ra
        edges = (
            (lb, left[1], right[1]),
            (lo, left[0] + (lo - la), right[0] + (lo - ra)),
        )
    else:
        return None

    def x_left(y):
        return left[0] + (y - la)

    def x_right(y):
        return right[0] + (y - ra)

    empty = True
    pierced = False
    for x, y in g.points:
        if lo < y < hi and x_left(y) < x < x_right(y):
            empty = False
        for ey, x0, x1 in edges:
            if y == ey and x0 < x < x1:
                pierced = True
    return Region(kind, left, right, edges, empty, not pierced, acute)


def find_regions(g: DotGraph) -> list[Region]:
    """All candidate regions between run pairs, plus degenerate 0,0 pairs.

    Every pair is reported with its flags; callers filter on empty and
    unpierced.  The scan is order-independent: regions depend only on the
    run pair, never on discovery order.
    """
    out = []
    for i in range(len(g.runs)):
        for j in range(i + 1, len(g.runs)):
            reg = _classify_pair(g, g.runs[i], g.runs[j])
            if reg is not None:
                out.append(reg)
    entries = g.sequence.entries
    for x in range(1, len(entries)):
        if entries[x - 1] == 0 and entries[x] == 0:
            out.append(
                Region(
                    "DEGENERATE_00",
                    (x, x),
                    (x + 1, x + 1),
                    ((0, x, x + 1),),
                    True,
                    True,
                )
            )
    return out


# --------------------------------------------------------------------------
# Stacks


@dataclass(frozen=True)
class StackedDotGraph:
    """Extended dot graphs of one arc pair, one layer per geodesic.

    spacing = r + 1 where r is the largest curve index meeting the joined
    arcs over all layers; aligning the three 0 columns spacing apart lines
    the layers up without touching any layer's own data.
    """

    layers: tuple[DotGraph, ...]
    spacing: int

    @property
    def layer_count(self) -> int:
        return len(self.layers)


def stack(layers: list[DotGraph]) -> StackedDotGraph:
    if not layers:
        raise ValueError("a stack needs at least one layer")
    for g in layers:
        if not g.sequence.extended:
            raise MisalignedError("every layer must be an extended sequence")
    first = layers[0].sequence
    for g in layers[1:]:
        s = g.sequence
        if s.arc_index != first.arc_index:
            raise MisalignedError(
                f"layers mix arcs {first.arc_index} and {s.arc_index}"
            )
        if (
            s.arc_count is not None
            and first.arc_count is not None
            and s.arc_count != first.arc_count
        ):
            raise MisalignedError("layers come from different arc systems")
    r = max((max(g.sequence.entries, default=0) for g in layers), default=0)
    return StackedDotGraph(tuple(layers), r + 1)


def common_regions(stacked: StackedDotGraph) -> list[Region]:
    """Empty, unpierced regions of every layer, concatenated in layer
    order; empty when any single layer has none.  The stack has a region
    exactly when each layer does; coincidence of the regions' positions
    across layers is not required."""
    per_layer = []
    for g in stacked.layers:
        good = [r for r in find_regions(g) if r.empty and r.unpierced]
        if not good:
            return []
        per_layer.append(good)
    return [r for good in per_layer for r in good]
