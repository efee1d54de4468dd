"""Surface reconstruction from a ladder.

The pair (v, w) cuts the closed oriented surface into even-sided polygons.
We rebuild that structure as a ribbon graph: one 4-valent vertex per
column, counterclockwise rotation (w-west, v-bottom, w-east, v-top), and
an edge involution pairing the two ends of every v-arc and w-arc.  Faces
are the orbits of rotation-after-involution; each orbit traverses one
polygon boundary with the polygon on its right.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BigonFoundError, InternalInvariantError
from .ladder import Ladder, canonical_form, pred1, succ1

__all__ = [
    "W",
    "B",
    "E",
    "T",
    "SurfaceComplex",
    "Decomposition",
    "Bicorn",
    "build_complex",
    "decomposition",
    "check_nonseparating",
    "find_bicorns",
    "swap_roles",
    "equivalent",
]

# Slot codes, in counterclockwise rotation order at each vertex.
W, B, E, T = 0, 1, 2, 3

Dart = tuple[int, int]  # (column 1..n, slot)


@dataclass(frozen=True)
class Bicorn:
    """A v-arc and a w-arc sharing both endpoint columns.

    pushoff_marker is the row ("top" or "bottom") holding the v-arc's label
    at its own junction column: the side of w the pushed-off closed curve
    peels away from.  alignment is "aligned" when the v-arc runs in the
    same direction as the w-arc, "anti" otherwise.
    """

    v_arc: int
    w_arc: int
    pushoff_marker: str
    alignment: str


class SurfaceComplex:
    """Faces, edges and darts of the reconstructed surface.

    Built by build_complex; treat as immutable.
    """

    def __init__(self, ladder: Ladder):
        ladder.validate()
        self.ladder = ladder
        self.n = ladder.n
        n = self.n

        self.junctions = ladder.junction_values()
        self.junction_col = {k: j + 1 for j, k in enumerate(self.junctions)}

        # v-arc x runs from the column where {x-1, x} meet to the column
        # where {x, x+1} meet; record its two (column, slot) ends in that
        # order for direction bookkeeping.
        self._v_slots: dict[int, tuple[Dart, ...]] = {}
        for x in range(1, n + 1):
            slots = [
                (j, T if row == "top" else B)
                for j, row in ladder.label_slots(x)
            ]
            if n == 1:
                start, end = slots[0], slots[1]
            else:
                start_col = self.junction_col[pred1(x, n)]
                if slots[0][0] != start_col:
                    slots.reverse()
                start, end = slots
                if start[0] != start_col or end[0] != self.junction_col[x]:
                    raise InternalInvariantError(f"v-arc {x} endpoint mismatch")
            self._v_slots[x] = (start, end)

        self._iota: dict[Dart, Dart] = {}
        for j in range(1, n + 1):
            self._iota[(j, W)] = (pred1(j, n), E)
            self._iota[(j, E)] = (succ1(j, n), W)
        for x in range(1, n + 1):
            a, b = self._v_slots[x]
            self._iota[a] = b
            self._iota[b] = a

        # Face tracing: phi = rotate(iota(dart)); orbits are faces.
        faces: list[tuple[Dart, ...]] = []
        face_of: dict[Dart, int] = {}
        for j in range(1, n + 1):
            for s in (W, B, E, T):
                start = (j, s)
                if start in face_of:
                    continue
                orbit = []
                d = start
                while True:
                    orbit.append(d)
                    face_of[d] = len(faces)
                    jj, ss = self._iota[d]
                    d = (jj, (ss + 1) % 4)
                    if d == start:
                        break
                if len(orbit) == 2:
                    raise BigonFoundError(
                        f"face through column {start[0]} is a bigon"
                    )
                if len(orbit) % 2 or len(orbit) < 4:
                    raise InternalInvariantError(
                        f"face of length {len(orbit)}"
                    )
                # Canonical orbit start for determinism.
                lo = orbit.index(min(orbit))
                faces.append(tuple(orbit[lo:] + orbit[:lo]))
        self.faces: tuple[tuple[Dart, ...], ...] = tuple(faces)
        self.face_of = face_of

        f = len(self.faces)
        chi = n - 2 * n + f
        if (2 - chi) % 2:
            raise InternalInvariantError(f"odd Euler characteristic {chi}")
        self.genus = (2 - chi) // 2
        if self.genus < 0:
            raise InternalInvariantError(f"negative genus from chi={chi}")

    # -- dart/edge geometry -------------------------------------------------

    def iota(self, d: Dart) -> Dart:
        """The other end of the edge carrying dart d."""
        return self._iota[d]

    def v_slots(self, x: int) -> tuple[Dart, Dart]:
        """(start, end) darts of v-arc x; x runs start -> end."""
        a, b = self._v_slots[x]
        return a, b

    def dart_edge(self, d: Dart) -> tuple[str, int, bool]:
        """(kind, index, coherent) of the edge a face orbit crosses at d.

        kind "w": index t means the arc between columns t-1 and t; kind
        "v": index is the arc label.  coherent is True when the crossing
        runs along the edge's canonical direction (w: column t-1 -> t;
        v: arc start -> end).
        """
        j, s = d
        if s == W:
            return "w", j, False
        if s == E:
            return "w", succ1(j, self.n), True
        x = self.ladder.top_at(j) if s == T else self.ladder.bottom_at(j)
        start, _end = self._v_slots[x]
        return "v", x, d == start

    def w_darts(self, t: int) -> tuple[Dart, Dart]:
        """The two darts of w-arc t: (west end, east end)."""
        return (pred1(t, self.n), E), (t, W)

    def face_north_of_w(self, t: int) -> int:
        """Face on the top side of w-arc t."""
        return self.face_of[(t, W)]

    def face_south_of_w(self, t: int) -> int:
        """Face on the bottom side of w-arc t."""
        return self.face_of[(pred1(t, self.n), E)]

    def v_side_faces(self, x: int) -> tuple[int, int]:
        """Faces on the two sides of v-arc x (start-dart side, end-dart side)."""
        a, b = self._v_slots[x]
        return self.face_of[a], self.face_of[b]

    def face_sides(self, f: int) -> tuple[tuple[str, int, bool], ...]:
        """Edge crossings of face f's boundary orbit, in orbit order."""
        return tuple(self.dart_edge(d) for d in self.faces[f])

    def face_size(self, f: int) -> int:
        return len(self.faces[f])


def build_complex(ladder: Ladder) -> SurfaceComplex:
    """Reconstruct the closed oriented surface of a valid ladder."""
    return SurfaceComplex(ladder)


@dataclass(frozen=True)
class Decomposition:
    """Polygon census of a surface complex.

    counts[k-2] is the number of 2k-gons, k = 2 .. max(2, 4g-2); the vector
    therefore reads (F_4, F_6, ..., F_{8g-4}).  face_edges lists, per face,
    the bordering edges in boundary order (kind, index), keeping multiplicity.
    """

    counts: tuple[int, ...]
    genus: int
    i: int
    face_edges: tuple[tuple[tuple[str, int], ...], ...] = ()
    complex_: "SurfaceComplex | None" = field(
        default=None, compare=False, repr=False
    )

    def census(self, two_k: int) -> int:
        """Number of faces with two_k sides."""
        idx = two_k // 2 - 2
        if two_k % 2 or idx < 0:
            raise ValueError(f"not an even face size: {two_k}")
        return self.counts[idx] if idx < len(self.counts) else 0

    @property
    def vector(self) -> tuple[int, ...]:
        """counts with trailing zeros trimmed (at least one entry)."""
        out = list(self.counts)
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return tuple(out)

    @property
    def hempel_bound(self) -> float:
        """Upper bound 2*log2(i) + 2 for any distance this pair realizes."""
        return 2 * math.log2(self.i) + 2 if self.i > 0 else 2.0

    def only_small_faces(self) -> bool:
        """True when every face is a 4-gon or 6-gon."""
        return all(c == 0 for c in self.counts[2:])


def decomposition(complex_: SurfaceComplex) -> Decomposition:
    """Count faces by size and check the Euler-count identities."""
    g, n = complex_.genus, complex_.n
    top_k = max(2, 4 * g - 2)
    counts = [0] * (top_k - 1)
    for f in range(len(complex_.faces)):
        size = complex_.face_size(f)
        k = size // 2
        if k > top_k:
            raise InternalInvariantError(
                f"face with {size} sides exceeds the {2 * top_k}-gon bound"
            )
        counts[k - 2] += 1
    incidence = tuple(
        tuple((kind, idx) for kind, idx, _ in complex_.face_sides(f))
        for f in range(len(complex_.faces))
    )
    dec = Decomposition(tuple(counts), g, n, incidence, complex_)

    # The census identities are hard invariants of every emitted value.
    if 4 * g - 4 != sum((k - 2) * dec.census(2 * k) for k in range(3, top_k + 1)):
        raise InternalInvariantError("face census fails the genus identity")
    if 2 * n != sum(k * dec.census(2 * k) for k in range(2, top_k + 1)):
        raise InternalInvariantError("face census fails the edge-count identity")
    odd = sum(k * dec.census(2 * k) for k in range(3, top_k + 1))
    if odd % 2 or n != dec.census(4) + odd // 2:
        raise InternalInvariantError("face census fails the crossing identity")
    if dec.only_small_faces() and dec.census(4) != n - 6 * g + 6:
        raise InternalInvariantError("4/6-gon census fails the rectangle count")
    return dec


def _connected(groups: int, links: list[tuple[int, int]]) -> bool:
    parent = list(range(groups))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in links:
        parent[find(a)] = find(b)
    return len({find(i) for i in range(groups)}) <= 1


def check_nonseparating(complex_: SurfaceComplex, which: str) -> bool:
    """True iff cutting along the named curve ("v" or "w") stays connected.

    Cutting along v severs the gluings across v-arcs, so the cut surface is
    connected exactly when the faces hang together through w-arcs alone
    (and symmetrically for w).
    """
    if which not in ("v", "w"):
        raise ValueError(f"which must be 'v' or 'w', got {which!r}")
    links = []
    for idx in range(1, complex_.n + 1):
        if which == "v":
            links.append(
                (complex_.face_north_of_w(idx), complex_.face_south_of_w(idx))
            )
        else:
            links.append(complex_.v_side_faces(idx))
    return _connected(len(complex_.faces), links)


def find_bicorns(complex_: SurfaceComplex) -> list[Bicorn]:
    """All (v-arc, w-arc) pairs with identical endpoint column sets."""
    lad, n = complex_.ladder, complex_.n
    out = []
    for a in range(1, n + 1):
        start = complex_.junction_col[pred1(a, n)] if n > 1 else 1
        end = complex_.junction_col[a]
        ends = {start, end}
        for b in range(1, n + 1):
            if {pred1(b, n), b} != ends:
                continue
            # w-arc b runs column b-1 -> b; aligned when v-arc a does too.
            alignment = "aligned" if end == b else "anti"
            if n == 1:
                alignment = "aligned"
            row = next(
                row for j, row in lad.label_slots(a) if j == end
            )
            out.append(Bicorn(a, b, row, alignment))
    out.sort(key=lambda bc: (bc.v_arc, bc.w_arc))
    return out


def swap_roles(ladder: Ladder) -> Ladder:
    """The ladder of the pair with v and w exchanged.

    Columns reorder along v (junction order); the labels become w-arc
    indices, the row determined by which side of v each w-arc leaves from.
    """
    n = ladder.n
    complex_ = SurfaceComplex(ladder)
    top, bottom = [], []
    for k in range(1, n + 1):
        j = complex_.junction_col[k]
        # v runs upward through column j when arc k enters from below.
        upward = ladder.bottom_at(j) == k
        west, east = j, succ1(j, n)
        top.append(west if upward else east)
        bottom.append(east if upward else west)
    swapped = Ladder(tuple(top), tuple(bottom))
    swapped.validate()
    return swapped


def equivalent(
    d1: "Decomposition | Ladder",
    d2: "Decomposition | Ladder",
    *,
    include_mirror: bool = False,
    include_swap: bool = False,
) -> bool:
    """Same decomposition up to cyclic relabeling of both curves.

    Accepts decompositions (with their source complex attached) or bare
    ladders.  Mirror (orientation reversal) and v/w role swap are opt-in
    widenings of the equivalence; both default off.
    """

    def crack(d):
        if isinstance(d, Ladder):
            return decomposition(SurfaceComplex(d))
        if d.complex_ is None:
            raise ValueError("decomposition lacks its source complex")
        return d

    dec1, dec2 = crack(d1), crack(d2)
    ladder1 = dec1.complex_.ladder
    ladder2 = dec2.complex_.ladder
    if dec1.vector != dec2.vector or dec1.genus != dec2.genus:
        return False

    candidates = [ladder2]
    if include_swap:
        candidates.append(swap_roles(ladder2))
    if include_mirror:
        candidates.extend(Ladder(c.bottom, c.top) for c in list(candidates))
    target = canonical_form(ladder1).canonical_ladder
    return any(
        canonical_form(c).canonical_ladder == target for c in candidates
    )
