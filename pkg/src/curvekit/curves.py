"""Transverse curve machinery over a reconstructed surface.

Curves other than the defining pair are stored combinatorially: crossing
points on edges of the complex, in a shared per-edge order, joined by
chords inside faces.  Chords of one simple curve never cross; chords of
different curves cross exactly when their endpoints interleave on a face
boundary, so geometric intersection counts are a function of the stored
positions.  Cutting the surface along any subset of the stored curves is a
finite cell computation, and minimal position is reached by sliding one
curve across empty bigon components.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import InternalInvariantError, UnsupportedDecompositionError
from .ladder import Ladder, pred1, succ1
from .surface import Decomposition, SurfaceComplex, E, T, W, build_complex

__all__ = [
    "TransverseCurve",
    "ReferenceArc",
    "ComplementComponent",
    "ComplementReport",
    "Overlay",
    "complement",
    "reference_arcs",
    "enumerate_disjoint_curves",
    "skeleton_pushoff",
    "parallel_copy",
    "reduce_bigons",
    "intersection_number",
    "extract_ladder",
]

Edge = tuple[str, int]  # ("w", arc index) or ("v", arc label)
Dart = tuple[int, int]


def _edge_darts(cx: SurfaceComplex, edge: Edge) -> tuple[Dart, Dart]:
    """(tail, head) darts of an edge; the tail dart's face is the right
    side of the edge's canonical direction, the head dart's its left."""
    kind, idx = edge
    if kind == "w":
        return (pred1(idx, cx.n), E), (idx, W)
    return cx.v_slots(idx)


def _dart_pos(cx: SurfaceComplex) -> dict[Dart, tuple[int, int]]:
    """dart -> (face, orbit position), cached on the complex."""
    cached = getattr(cx, "_dart_pos_cache", None)
    if cached is None:
        cached = {}
        for f, orbit in enumerate(cx.faces):
            for r, d in enumerate(orbit):
                cached[d] = (f, r)
        cx._dart_pos_cache = cached
    return cached


# --------------------------------------------------------------------------
# Frozen curve snapshots


@dataclass(frozen=True)
class TransverseCurve:
    """A simple closed curve carried by the complex, up to isotopy.

    segments walk the curve once: (face, entry, exit) with entry/exit given
    as (side orbit position, index along that side in face-walk order, side
    point count).  Indices count every point present on the edge when the
    curve was frozen, so jointly frozen curves keep their relative
    positions.
    """

    segments: tuple[tuple[int, tuple[int, int, int], tuple[int, int, int]], ...]
    complex_: SurfaceComplex = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.segments)

    def edge_points(self) -> tuple[tuple[Edge, int], ...]:
        """(edge, canonical position) of each crossing, in walk order."""
        cx = self.complex_
        out = []
        for f, entry, _exit in self.segments:
            r, k, m = entry
            dart = cx.faces[f][r]
            kind, idx, coh = cx.dart_edge(dart)
            out.append(((kind, idx), k if coh else m - 1 - k))
        return tuple(out)

    def crossings_on(self, edge: Edge) -> int:
        return sum(1 for e, _ in self.edge_points() if e == edge)

    def to_json_obj(self) -> list[dict]:
        """Ordered segment records for reports."""
        cx = self.complex_
        recs = []
        for f, entry, exit_ in self.segments:
            din = cx.faces[f][entry[0]]
            dout = cx.faces[f][exit_[0]]
            ek = cx.dart_edge(din)
            xk = cx.dart_edge(dout)
            recs.append(
                {
                    "face": f,
                    "entry_edge": [ek[0], ek[1]],
                    "entry_slot": entry[1],
                    "exit_edge": [xk[0], xk[1]],
                    "exit_slot": exit_[1],
                }
            )
        return recs


# --------------------------------------------------------------------------
# Mutable multi-curve workspace


class Overlay:
    """Curves positioned over one complex, sharing per-edge point orders."""

    def __init__(self, cx: SurfaceComplex):
        self.cx = cx
        self.points: dict[int, Edge] = {}
        self.curve_of: dict[int, int] = {}
        self.edge_order: dict[Edge, list[int]] = {}
        self.links: dict[tuple[int, Dart], tuple[int, Dart]] = {}
        self._next = 0

    # -- construction ------------------------------------------------------

    def new_point(self, edge: Edge, index: int, cid: int) -> int:
        pid = self._next
        self._next += 1
        self.points[pid] = edge
        self.curve_of[pid] = cid
        self.edge_order.setdefault(edge, []).insert(index, pid)
        return pid

    def remove_point(self, pid: int) -> None:
        edge = self.points.pop(pid)
        self.curve_of.pop(pid)
        self.edge_order[edge].remove(pid)
        for dart in _edge_darts(self.cx, edge):
            partner = self.links.pop((pid, dart), None)
            if partner is not None:
                self.links.pop(partner, None)

    def connect(self, a: tuple[int, Dart], b: tuple[int, Dart]) -> None:
        """Add the chord with endpoints a, b; both must face one face."""
        pos = _dart_pos(self.cx)
        if pos[a[1]][0] != pos[b[1]][0]:
            raise InternalInvariantError("chord endpoints in different faces")
        self.links[a] = b
        self.links[b] = a

    def position(self, pid: int) -> int:
        return self.edge_order[self.points[pid]].index(pid)

    # -- traversal ---------------------------------------------------------

    def walk(self, cid: int) -> list[tuple[int, Dart, Dart]]:
        """Cyclic point sequence of one curve as (pid, in dart, out dart).

        The out dart carries the chord toward the next listed point.
        """
        pids = sorted(p for p, c in self.curve_of.items() if c == cid)
        if not pids:
            raise InternalInvariantError(f"curve {cid} has no points")
        start = pids[0]
        d1, d2 = _edge_darts(self.cx, self.points[start])
        seq = []
        pid, din, dout = start, d1, d2
        while True:
            seq.append((pid, din, dout))
            nxt, dart = self.links[(pid, dout)]
            darts = _edge_darts(self.cx, self.points[nxt])
            pid, din = nxt, dart
            dout = darts[0] if dart == darts[1] else darts[1]
            if pid == start and din == d1:
                break
            if len(seq) > 2 * len(pids) + 1:
                raise InternalInvariantError("curve walk does not close")
        if len(seq) != len(pids):
            raise InternalInvariantError(f"curve {cid} is not a single circle")
        return seq

    def component_count(self) -> int:
        seen: set[int] = set()
        comps = 0
        for pid in sorted(self.points):
            if pid in seen:
                continue
            comps += 1
            d1, d2 = _edge_darts(self.cx, self.points[pid])
            cur, dout = pid, d2
            while True:
                seen.add(cur)
                nxt, dart = self.links[(cur, dout)]
                darts = _edge_darts(self.cx, self.points[nxt])
                cur = nxt
                dout = darts[0] if dart == darts[1] else darts[1]
                if cur == pid and dout == d2:
                    break
                if len(seen) > len(self.points):
                    raise InternalInvariantError("point traversal runaway")
        return comps

    # -- chords and crossings ------------------------------------------------

    def chords_by_face(self) -> dict[int, list[tuple[tuple[int, Dart], tuple[int, Dart]]]]:
        pos = _dart_pos(self.cx)
        out: dict[int, list] = {}
        seen = set()
        for a, b in self.links.items():
            key = (a, b) if a <= b else (b, a)
            if key in seen:
                continue
            seen.add(key)
            out.setdefault(pos[a[1]][0], []).append(key)
        for lst in out.values():
            lst.sort()
        return out

    def count_crossings(self) -> int:
        total = 0
        for f, chords in self.chords_by_face().items():
            circ = _FaceCircle(self, f)
            for i in range(len(chords)):
                for j in range(i + 1, len(chords)):
                    if circ.interleaved(chords[i], chords[j]):
                        if (
                            self.curve_of[chords[i][0][0]]
                            == self.curve_of[chords[j][0][0]]
                        ):
                            raise InternalInvariantError(
                                "self-crossing chords in one curve"
                            )
                        total += 1
        return total

    # -- freeze / thaw -------------------------------------------------------

    def freeze(self, cid: int) -> TransverseCurve:
        cx = self.cx
        pos = _dart_pos(cx)
        seq = self.walk(cid)

        def side_index(pid: int, dart: Dart) -> tuple[int, int, int]:
            f, r = pos[dart]
            _kind, _idx, coh = cx.dart_edge(dart)
            order = self.edge_order[self.points[pid]]
            k = order.index(pid)
            return r, k if coh else len(order) - 1 - k, len(order)

        def segments_for(walked):
            segs = []
            for (p, _din, dout), (q, din2, _dout2) in zip(
                walked, walked[1:] + walked[:1]
            ):
                f = pos[dout][0]
                if pos[din2][0] != f:
                    raise InternalInvariantError("segment face mismatch")
                segs.append((f, side_index(p, dout), side_index(q, din2)))
            return segs

        rev = [(p, dout, din) for p, din, dout in reversed(seq)]
        best = None
        for cand in (segments_for(seq), segments_for(rev)):
            for s in range(len(cand)):
                rot = tuple(cand[s:] + cand[:s])
                if best is None or rot < best:
                    best = rot
        return TransverseCurve(best, cx)

    @classmethod
    def from_curves(
        cls, cx: SurfaceComplex, curves: list[TransverseCurve]
    ) -> "Overlay":
        ov = cls(cx)
        staged: dict[Edge, list[tuple[int, int, int, int]]] = {}
        walks: list[list[tuple[Edge, int]]] = []
        for cid, curve in enumerate(curves):
            if curve.complex_ is not cx and curve.complex_.ladder != cx.ladder:
                raise InternalInvariantError("curve carried by another complex")
            pts = curve.edge_points()
            walks.append(list(pts))
            for k, (edge, cpos) in enumerate(pts):
                staged.setdefault(edge, []).append((cpos, cid, k, 0))
        pid_of: dict[tuple[int, int], int] = {}
        for edge in sorted(staged):
            for cpos, cid, k, _ in sorted(staged[edge]):
                pid = ov.new_point(edge, len(ov.edge_order.get(edge, [])), cid)
                pid_of[(cid, k)] = pid
        for cid, curve in enumerate(curves):
            n = len(walks[cid])
            for k in range(n):
                # Segment k runs from point k to point k+1 through one face;
                # its entry side dart belongs to point k, its exit to k+1.
                f, entry, exit_ = curve.segments[k]
                dout_this = cx.faces[f][entry[0]]
                din_next = cx.faces[f][exit_[0]]
                ov.connect(
                    (pid_of[(cid, k)], dout_this),
                    (pid_of[(cid, (k + 1) % n)], din_next),
                )
        return ov


# --------------------------------------------------------------------------
# Per-face circle coordinates


class _FaceCircle:
    """Walk-order coordinates of corners and points around one face."""

    def __init__(self, ov: Overlay, f: int):
        cx = ov.cx
        self.face = f
        self.nodes: list[tuple] = []
        self.side_of_seg: list[int] = []
        self.seg_interval: list[tuple[Edge, int]] = []
        self.pos_of: dict[tuple[int, Dart], int] = {}
        orbit = cx.faces[f]
        for r, dart in enumerate(orbit):
            self.nodes.append(("c", f, r))
            kind, idx, coh = cx.dart_edge(dart)
            pts = ov.edge_order.get((kind, idx), [])
            seq = list(pts) if coh else list(reversed(pts))
            m = len(seq)
            for j, pid in enumerate(seq):
                self.pos_of[(pid, dart)] = len(self.nodes)
                self.nodes.append(("p", pid, dart))
            for j in range(m + 1):
                self.side_of_seg.append(r)
                canon = j if coh else m - j
                self.seg_interval.append(((kind, idx), canon))
        # Segment t runs from node t to node t+1; the per-side loop above
        # appended side/interval entries in exactly that order.
        if len(self.side_of_seg) != len(self.nodes):
            raise InternalInvariantError("face circle bookkeeping skew")

    def interleaved(self, chord1, chord2) -> bool:
        a1, a2 = sorted(self.pos_of[end] for end in chord1)
        b1, b2 = (self.pos_of[end] for end in chord2)
        return (a1 < b1 < a2) != (a1 < b2 < a2)


# --------------------------------------------------------------------------
# Arrangement of chords inside one face, traced into cells


class _FaceArrangement:
    def __init__(self, ov: Overlay, f: int):
        self.ov = ov
        self.f = f
        self.circle = _FaceCircle(ov, f)
        self.chords = ov.chords_by_face().get(f, [])
        C = len(self.circle.nodes)

        # Interior crossings: pairs of interleaved chords.
        self.cross_of_chord: dict[int, list[int]] = {i: [] for i in range(len(self.chords))}
        crossings: dict[tuple[int, int], tuple] = {}
        for i in range(len(self.chords)):
            for j in range(i + 1, len(self.chords)):
                if self.circle.interleaved(self.chords[i], self.chords[j]):
                    crossings[(i, j)] = ("x", f, i, j)
                    self.cross_of_chord[i].append(j)
                    self.cross_of_chord[j].append(i)
        self.crossings = crossings

        # Node list per chord, endpoints included, crossings in order.
        # Chords crossing one chord are pairwise disjoint here (at most two
        # curves, none self-crossing), so each has exactly one endpoint in
        # the walk arc from B back to A; distance from B along the walk
        # orders the crossings from the B end.
        self.chord_nodes: dict[int, list[tuple]] = {}
        for i, chord in enumerate(self.chords):
            ends = sorted(chord, key=lambda end: self.circle.pos_of[end])
            pa = self.circle.pos_of[ends[0]]
            pb = self.circle.pos_of[ends[1]]

            def lkey(j: int) -> int:
                for end in self.chords[j]:
                    p = self.circle.pos_of[end]
                    if not pa < p < pb:
                        return (p - pb) % C
                raise InternalInvariantError("crossing chord without L end")

            others = self.cross_of_chord[i]
            for j1 in others:
                for j2 in others:
                    if j1 < j2 and self.circle.interleaved(
                        self.chords[j1], self.chords[j2]
                    ):
                        raise InternalInvariantError(
                            "crossing chords of one chord themselves cross"
                        )
            from_b = sorted(others, key=lkey)
            mid = [crossings[(min(i, j), max(i, j))] for j in reversed(from_b)]
            self.chord_nodes[i] = (
                [("p", ends[0][0], ends[0][1])]
                + mid
                + [("p", ends[1][0], ends[1][1])]
            )

        # Arcs: boundary segments and chord pieces.
        self.arcs: dict[tuple, tuple[tuple, tuple]] = {}
        for t in range(C):
            self.arcs[("s", t)] = (
                tuple(self.circle.nodes[t]),
                tuple(self.circle.nodes[(t + 1) % C]),
            )
        for i, nodes in self.chord_nodes.items():
            for p in range(len(nodes) - 1):
                self.arcs[("q", i, p)] = (tuple(nodes[p]), tuple(nodes[p + 1]))

        # Rotation system (counterclockwise dart order at every node).
        rot: dict[tuple, list[tuple]] = {}
        for t, node in enumerate(self.circle.nodes):
            node = tuple(node)
            forward = (("s", t), 0)
            backward = (("s", (t - 1) % C), 1)
            if node[0] == "c":
                rot[node] = [forward, backward]
            else:
                pid, dart = node[1], node[2]
                cid = self._chord_index_at(pid, dart)
                nodes_i = self.chord_nodes[cid]
                if tuple(nodes_i[0]) == node:
                    cd = (("q", cid, 0), 0)
                elif tuple(nodes_i[-1]) == node:
                    cd = (("q", cid, len(nodes_i) - 2), 1)
                else:
                    raise InternalInvariantError("endpoint not terminal")
                rot[node] = [forward, cd, backward]
        for (i, j), xnode in crossings.items():
            rot[xnode] = self._crossing_rotation(i, j, xnode)
        self.rotation = rot

        # Trace cells.
        nxt: dict[tuple, tuple] = {}
        for node, darts in rot.items():
            for a, b in zip(darts, darts[1:] + darts[:1]):
                nxt[a] = b
        self._sigma = nxt
        all_darts = [(a, e) for a in sorted(self.arcs) for e in (0, 1)]
        orbits = []
        seen: set[tuple] = set()
        for d in all_darts:
            if d in seen:
                continue
            orbit = []
            cur = d
            while True:
                orbit.append(cur)
                seen.add(cur)
                arc, end = cur
                other = (arc, 1 - end)
                cur = nxt[other]
                if cur == d:
                    break
                if len(orbit) > 4 * len(all_darts):
                    raise InternalInvariantError("cell trace runaway")
            orbits.append(orbit)
        # With counterclockwise rotations, rotate-after-flip collects the
        # forward boundary darts into the single unbounded region.
        outer = None
        for k, orbit in enumerate(orbits):
            if (("s", 0), 0) in orbit:
                outer = k
        if outer is None:
            raise InternalInvariantError("no outer face found")
        if set(orbits[outer]) != {(("s", t), 0) for t in range(C)}:
            raise InternalInvariantError("outer face is not the forward circle")
        self.cells = [o for k, o in enumerate(orbits) if k != outer]
        V = len(rot)
        Ecount = len(self.arcs)
        if V - Ecount + len(self.cells) + 1 != 2:
            raise InternalInvariantError("face arrangement fails Euler check")

    def _chord_index_at(self, pid: int, dart: Dart) -> int:
        for i, chord in enumerate(self.chords):
            if (pid, dart) in chord:
                return i
        raise InternalInvariantError("no chord at endpoint")

    def _crossing_rotation(self, i: int, j: int, xnode: tuple) -> list[tuple]:
        C = len(self.circle.nodes)
        ends_i = sorted(self.chords[i], key=lambda e: self.circle.pos_of[e])
        pa = self.circle.pos_of[ends_i[0]]
        pb = self.circle.pos_of[ends_i[1]]
        ki = self.chord_nodes[i].index(xnode)
        kj = self.chord_nodes[j].index(xnode)
        toward_a = (("q", i, ki - 1), 1)
        toward_b = (("q", i, ki), 0)
        # R is chord j's endpoint inside the walk arc from A to B.
        endj_first = tuple(self.chord_nodes[j][0])
        pj = self.circle.pos_of[(endj_first[1], endj_first[2])]
        first_is_r = pa < pj < pb
        toward_first = (("q", j, kj - 1), 1)
        toward_last = (("q", j, kj), 0)
        toward_r = toward_first if first_is_r else toward_last
        toward_l = toward_last if first_is_r else toward_first
        return [toward_a, toward_r, toward_b, toward_l]

    def atom_info(self, dart: tuple) -> dict:
        """Describe the piece a cell-walk dart traverses."""
        (arc, end) = dart
        tail, head = self.arcs[arc]
        if arc[0] == "s":
            if end != 1:
                raise InternalInvariantError("interior cell walks a segment forward")
            t = arc[1]
            edge, interval = self.circle.seg_interval[t]
            return {
                "kind": "seg",
                "edge": edge,
                "interval": interval,
                "start_node": head,
                "end_node": tail,
            }
        i = arc[1]
        chord = self.chords[i]
        cid = self.ov.curve_of[chord[0][0]]
        start, stop = (tail, head) if end == 0 else (head, tail)
        return {
            "kind": "chord",
            "face": self.f,
            "chord_index": i,
            "chord": chord,
            "curve": cid,
            "piece": arc[2],
            "start_node": start,
            "end_node": stop,
        }


# --------------------------------------------------------------------------
# Complement of a curve set


@dataclass(frozen=True)
class ComplementComponent:
    euler: int
    boundaries: int
    kind: str
    genus: int
    boundary_sources: tuple[tuple[tuple, ...], ...]


@dataclass(frozen=True)
class ComplementReport:
    components: tuple[ComplementComponent, ...]

    @property
    def fills(self) -> bool:
        return all(c.kind == "disc" for c in self.components)


class _Detail:
    """Cut-surface cell structure shared by complement and bigon surgery."""

    def __init__(self, ov: Overlay, cut_v: bool, cut_w: bool):
        cx = ov.cx
        self.ov = ov
        self.cut_v = cut_v
        self.cut_w = cut_w
        self.arrangements = [_FaceArrangement(ov, f) for f in range(len(cx.faces))]
        self.cells = []  # (face, orbit darts)
        for f, arr in enumerate(self.arrangements):
            for orbit in arr.cells:
                self.cells.append((f, orbit))
        self.atoms = []  # per cell: list of atom dicts
        for f, orbit in self.cells:
            arr = self.arrangements[f]
            self.atoms.append([arr.atom_info(d) for d in orbit])

        # Glue boundary segments of uncut edges across face sides.
        buckets: dict[tuple, list[tuple[int, int]]] = {}
        for ci, atoms in enumerate(self.atoms):
            for ai, atom in enumerate(atoms):
                if atom["kind"] == "seg":
                    key = (atom["edge"], atom["interval"])
                    buckets.setdefault(key, []).append((ci, ai))
        self.glued: list[tuple[tuple[int, int], tuple[int, int]]] = []
        self.unglued: list[tuple[int, int]] = []
        for key in sorted(buckets):
            sides = buckets[key]
            if len(sides) != 2:
                raise InternalInvariantError("edge interval without two sides")
            kind = key[0][0]
            if (kind == "v" and cut_v) or (kind == "w" and cut_w):
                self.unglued.extend(sides)
            else:
                self.glued.append((sides[0], sides[1]))
        for ci, atoms in enumerate(self.atoms):
            for ai, atom in enumerate(atoms):
                if atom["kind"] == "chord":
                    self.unglued.append((ci, ai))

        # Components of cells.
        self._cell_parent = list(range(len(self.cells)))
        for (c1, _), (c2, _) in self.glued:
            self._union_cell(c1, c2)

        # Corner incidences: (cell, k) is the corner before atom k.
        self._corner_parent: dict[tuple[int, int], tuple[int, int]] = {}
        for ci, atoms in enumerate(self.atoms):
            for ai in range(len(atoms)):
                self._corner_parent[(ci, ai)] = (ci, ai)
        for (c1, a1), (c2, a2) in self.glued:
            n1, n2 = len(self.atoms[c1]), len(self.atoms[c2])
            self._union_corner((c1, a1), (c2, (a2 + 1) % n2))
            self._union_corner((c1, (a1 + 1) % n1), (c2, a2))

        self._build_components()

    # -- union-find helpers ---------------------------------------------------

    def _find_cell(self, c: int) -> int:
        while self._cell_parent[c] != c:
            self._cell_parent[c] = self._cell_parent[self._cell_parent[c]]
            c = self._cell_parent[c]
        return c

    def _union_cell(self, a: int, b: int) -> None:
        self._cell_parent[self._find_cell(a)] = self._find_cell(b)

    def _find_corner(self, x: tuple[int, int]) -> tuple[int, int]:
        while self._corner_parent[x] != x:
            self._corner_parent[x] = self._corner_parent[self._corner_parent[x]]
            x = self._corner_parent[x]
        return x

    def _union_corner(self, a, b) -> None:
        self._corner_parent[self._find_corner(a)] = self._find_corner(b)

    # -- assembly ---------------------------------------------------------

    def corner_node(self, inc: tuple[int, int]) -> tuple:
        ci, ai = inc
        return tuple(self.atoms[ci][ai]["start_node"])

    def _build_components(self) -> None:
        comp_of_cell = {c: self._find_cell(c) for c in range(len(self.cells))}
        comp_ids = sorted(set(comp_of_cell.values()))
        index = {c: k for k, c in enumerate(comp_ids)}
        self.comp_of_cell = {c: index[r] for c, r in comp_of_cell.items()}
        ncomp = len(comp_ids)

        fcount = [0] * ncomp
        for c in range(len(self.cells)):
            fcount[self.comp_of_cell[c]] += 1
        ecount = [0] * ncomp
        for (c1, _), _ in self.glued:
            ecount[self.comp_of_cell[c1]] += 1
        for ci, _ in self.unglued:
            ecount[self.comp_of_cell[ci]] += 1

        classes: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for inc in self._corner_parent:
            classes.setdefault(self._find_corner(inc), []).append(inc)
        vcount = [0] * ncomp
        self.class_members = classes
        for root, members in classes.items():
            comps = {self.comp_of_cell[ci] for ci, _ in members}
            if len(comps) != 1:
                raise InternalInvariantError("corner class spans components")
            vcount[comps.pop()] += 1

        self.chi = [
            vcount[k] - ecount[k] + fcount[k] for k in range(ncomp)
        ]
        # Cutting along a union of curves with x crossings raises the total
        # Euler characteristic by x: the cut graph itself has chi = -x.
        x_cross = self.ov.count_crossings()
        if self.cut_v and self.cut_w:
            x_cross += self.ov.cx.n
        for edge in self.ov.points.values():
            if (edge[0] == "v" and self.cut_v) or (
                edge[0] == "w" and self.cut_w
            ):
                x_cross += 1
        total = sum(self.chi)
        if total != 2 - 2 * self.ov.cx.genus + x_cross:
            raise InternalInvariantError(
                f"component Euler characteristics sum to {total}, "
                f"expected {2 - 2 * self.ov.cx.genus + x_cross}"
            )

        # Boundary circles from unglued atom sides.
        start_at: dict[tuple[int, int], tuple[int, int]] = {}
        for ci, ai in self.unglued:
            key = self._find_corner((ci, ai))
            if key in start_at:
                raise InternalInvariantError("boundary corner with two outgoing arcs")
            start_at[key] = (ci, ai)
        ends: dict[tuple[int, int], int] = {}
        for ci, ai in self.unglued:
            n = len(self.atoms[ci])
            key = self._find_corner((ci, (ai + 1) % n))
            ends[key] = ends.get(key, 0) + 1
        for key in set(start_at) | set(ends):
            if key not in start_at or ends.get(key, 0) != 1:
                raise InternalInvariantError("boundary corner valence is not two")

        self.circles: list[list[tuple[int, int]]] = []
        visited: set[tuple[int, int]] = set()
        for seed in sorted(self.unglued):
            if seed in visited:
                continue
            circle = []
            cur = seed
            while True:
                circle.append(cur)
                visited.add(cur)
                ci, ai = cur
                n = len(self.atoms[ci])
                cur = start_at[self._find_corner((ci, (ai + 1) % n))]
                if cur == seed:
                    break
                if len(circle) > len(self.unglued):
                    raise InternalInvariantError("boundary circle runaway")
            self.circles.append(circle)
        self.circles_of_comp: dict[int, list[int]] = {}
        for k, circle in enumerate(self.circles):
            comp = self.comp_of_cell[circle[0][0]]
            self.circles_of_comp.setdefault(comp, []).append(k)
        self.ncomp = ncomp

    def atom_source(self, inc: tuple[int, int]) -> tuple:
        atom = self.atoms[inc[0]][inc[1]]
        if atom["kind"] == "seg":
            return atom["edge"]
        return ("curve", atom["curve"])

    def report(self) -> ComplementReport:
        comps = []
        for k in range(self.ncomp):
            circles = self.circles_of_comp.get(k, [])
            b = len(circles)
            chi = self.chi[k]
            genus2 = 2 - chi - b
            if genus2 % 2 or genus2 < 0:
                raise InternalInvariantError("component genus is not integral")
            genus = genus2 // 2
            if chi == 1 and b == 1:
                kind = "disc"
            elif chi == 0 and b == 2 and genus == 0:
                kind = "annulus"
            else:
                kind = "other"
            sources = tuple(
                tuple(self.atom_source(inc) for inc in self.circles[c])
                for c in sorted(circles)
            )
            comps.append(ComplementComponent(chi, b, kind, genus, sources))
        return ComplementReport(tuple(comps))


def _overlay_for(
    cx: SurfaceComplex, curveset
) -> tuple[Overlay, bool, bool, list[TransverseCurve]]:
    cut_v = cut_w = False
    carried = []
    for item in curveset:
        if item == "v":
            cut_v = True
        elif item == "w":
            cut_w = True
        elif isinstance(item, TransverseCurve):
            carried.append(item)
        else:
            raise ValueError(f"not a curve or skeleton name: {item!r}")
    ov = Overlay.from_curves(cx, carried)
    return ov, cut_v, cut_w, carried


def complement(complex_: SurfaceComplex, curveset) -> ComplementReport:
    """Cut the surface along every named curve and classify the pieces.

    curveset mixes the skeleton names "v"/"w" with carried TransverseCurves;
    the pair (v, w) fills exactly when every component is a disc.
    """
    ov, cut_v, cut_w, _ = _overlay_for(complex_, curveset)
    return _Detail(ov, cut_v, cut_w).report()


# --------------------------------------------------------------------------
# Reference arcs


@dataclass(frozen=True)
class ReferenceArc:
    """Arc parallel to one w-arc, joining the two v-sides flanking it
    inside the face north of the arc.  Crossing counts with a carried,
    bigon-reduced curve equal the curve's count on that w-edge."""

    index: int
    face: int
    v_sides: tuple[Dart, Dart]


def reference_arcs(dec: Decomposition) -> list[ReferenceArc]:
    """One reference arc per w-arc, indexed 1..i cyclically."""
    if any(dec.counts[2:]):
        raise UnsupportedDecompositionError(
            "reference arcs need a 4/6-gon decomposition"
        )
    cx = dec.complex_
    if cx is None:
        raise ValueError("decomposition lacks its source complex")
    pos = _dart_pos(cx)
    out = []
    for k in range(1, cx.n + 1):
        f, r = pos[(k, W)]
        orbit = cx.faces[f]
        before = orbit[(r - 1) % len(orbit)]
        after = orbit[(r + 1) % len(orbit)]
        for d in (before, after):
            if cx.dart_edge(d)[0] != "v":
                raise InternalInvariantError("w-side not flanked by v-sides")
        out.append(ReferenceArc(k, f, (before, after)))
    return out


# --------------------------------------------------------------------------
# Enumeration of curves disjoint from one skeleton curve


def _noncrossing_matchings(tags: list[int]):
    """All perfect non-crossing matchings of circle points with no pair
    inside one tag group, as lists of index pairs; deterministic order."""
    n = len(tags)
    if n % 2:
        return
    if n == 0:
        yield []
        return
    idx = list(range(n))

    def rec(seq):
        if not seq:
            yield []
            return
        first = seq[0]
        for j in range(1, len(seq), 2):
            other = seq[j]
            if tags[first] == tags[other]:
                continue
            left, right = seq[1:j], seq[j + 1 :]
            for ml in rec(left):
                for mr in rec(right):
                    yield [(first, other)] + ml + mr

    yield from rec(idx)


def _essential_and_new(cx: SurfaceComplex, curve: TransverseCurve, base: str) -> bool:
    rep = complement(cx, [base, curve])
    npoints = len(curve.segments)
    for comp in rep.components:
        for circle in comp.boundary_sources:
            pure_curve = all(s == ("curve", 0) for s in circle)
            if comp.kind == "disc" and pure_curve and len(circle) == npoints:
                return False  # bounds a disc: inessential
        if comp.kind == "annulus" and len(comp.boundary_sources) == 2:
            kinds = []
            for circle in comp.boundary_sources:
                if all(s == ("curve", 0) for s in circle):
                    kinds.append("c")
                elif all(s[0] == base for s in circle) and len(
                    {s for s in circle}
                ) == cx.n:
                    kinds.append("base")
                else:
                    kinds.append("mixed")
            if sorted(kinds) == ["base", "c"]:
                return False  # isotopic to the base curve
    return True


def enumerate_disjoint_curves(
    complex_: SurfaceComplex, base: str, per_arc_bound: int
):
    """Essential simple closed curves disjoint from the base curve,
    crossing each opposite-curve arc at most per_arc_bound times; ordered
    by (total crossings, count vector, matching choice).

    Curves are emitted in normal position: no chord returns to the side it
    entered through.  Every isotopy class whose taut representative fits
    the bound appears; a class may recur in a looser position.
    """
    if base not in ("v", "w"):
        raise ValueError(f"base must be 'v' or 'w', got {base!r}")
    if per_arc_bound < 0:
        raise ValueError("per_arc_bound must be non-negative")
    cx = complex_
    n = cx.n
    other = "w" if base == "v" else "v"
    edges = [(other, t) for t in range(1, n + 1)]
    pos = _dart_pos(cx)

    # For every face, the boundary slots on crossable sides, as
    # (orbit position, edge) in walk order.
    face_sides: dict[int, list[tuple[int, Edge]]] = {}
    for f, orbit in enumerate(cx.faces):
        sides = []
        for r, dart in enumerate(orbit):
            kind, idx, _coh = cx.dart_edge(dart)
            if kind == other:
                sides.append((r, (kind, idx)))
        face_sides[f] = sides

    def face_matchings(vector: dict[Edge, int], f: int):
        tags, slots = [], []
        for r, edge in face_sides[f]:
            for k in range(vector[edge]):
                tags.append(r)
                slots.append((r, edge, k))
        out = []
        for m in _noncrossing_matchings(tags):
            out.append([(slots[a], slots[b]) for a, b in m])
        return out

    def feasible(vector) -> bool:
        for f in face_sides:
            if sum(vector[e] for _r, e in face_sides[f]) % 2:
                return False
        return True

    for total in range(1, n * per_arc_bound + 1):
        for combo in itertools.product(range(per_arc_bound + 1), repeat=n):
            if sum(combo) != total:
                continue
            vector = {edges[t]: combo[t] for t in range(n)}
            if not feasible(vector):
                continue
            per_face = []
            dead = False
            for f in sorted(face_sides):
                ms = face_matchings(vector, f)
                if not ms and any(vector[e] for _r, e in face_sides[f]):
                    dead = True
                    break
                per_face.append((f, ms if ms else [[]]))
            if dead:
                continue
            for choice in itertools.product(*(ms for _f, ms in per_face)):
                ov = Overlay(cx)
                pid_at: dict[tuple[Edge, int], int] = {}
                for edge in edges:
                    for k in range(vector[edge]):
                        pid_at[(edge, k)] = ov.new_point(edge, k, 0)
                ok = True
                for (f, _ms), matching in zip(per_face, choice):
                    for (r1, e1, k1), (r2, e2, k2) in matching:
                        d1 = cx.faces[f][r1]
                        d2 = cx.faces[f][r2]
                        c1 = cx.dart_edge(d1)[2]
                        c2 = cx.dart_edge(d2)[2]
                        m1, m2 = vector[e1], vector[e2]
                        p1 = pid_at[(e1, k1 if c1 else m1 - 1 - k1)]
                        p2 = pid_at[(e2, k2 if c2 else m2 - 1 - k2)]
                        key1, key2 = (p1, d1), (p2, d2)
                        if key1 in ov.links or key2 in ov.links:
                            ok = False
                            break
                        ov.connect(key1, key2)
                    if not ok:
                        break
                if not ok or len(ov.links) != 2 * len(ov.points):
                    continue
                if ov.component_count() != 1:
                    continue
                curve = ov.freeze(0)
                if _essential_and_new(cx, curve, base):
                    yield curve


# --------------------------------------------------------------------------
# Push-offs of the skeleton curves


def skeleton_pushoff(complex_: SurfaceComplex, which: str) -> TransverseCurve:
    """The curve isotopic to v or w, pushed off to its own left."""
    cx = complex_
    n = cx.n
    ov = Overlay(cx)
    if which == "v":
        # v passes column j upward when arc k enters from below; the left
        # copy then crosses the west w-edge near that edge's head, else
        # the east w-edge near its tail.  The chord along arc a runs in
        # the face on the arc's left, the one holding its end dart.
        spots: dict[int, tuple[int, Dart, Dart]] = {}
        for k in range(1, n + 1):
            j = cx.junction_col[k]
            upward = cx.ladder.bottom_at(j) == k
            if upward:
                edge = ("w", j)
                index = len(ov.edge_order.get(edge, []))
                in_dart, out_dart = (pred1(j, n), E), (j, W)
            else:
                edge = ("w", succ1(j, n))
                index = 0
                in_dart, out_dart = (succ1(j, n), W), (j, E)
            spots[k] = (ov.new_point(edge, index, 0), in_dart, out_dart)
        for a in range(1, n + 1):
            p1, _in1, out1 = spots[pred1(a, n)]
            p2, in2, _out2 = spots[a]
            face = cx.face_of[cx.v_slots(a)[1]]
            if cx.face_of[out1] != face or cx.face_of[in2] != face:
                raise InternalInvariantError("pushoff chord faces disagree")
            ov.connect((p1, out1), (p2, in2))
    elif which == "w":
        # The left copy of west-to-east w runs just north of it, crossing
        # each column's top v-arc near that arc's slot.  A point's own
        # slot dart faces east there, the arc's other dart faces west.
        spots = {}
        for j in range(1, n + 1):
            x = cx.ladder.top_at(j)
            edge = ("v", x)
            start_d, end_d = cx.v_slots(x)
            if (j, T) == end_d:
                index = len(ov.edge_order.get(edge, []))
                other = start_d
            elif (j, T) == start_d:
                index = 0
                other = end_d
            else:
                raise InternalInvariantError("top label slot mismatch")
            spots[j] = (ov.new_point(edge, index, 0), other, (j, T))
        for t in range(1, n + 1):
            p1, _west1, east1 = spots[pred1(t, n)]
            p2, west2, _east2 = spots[t]
            face = cx.face_north_of_w(t)
            if cx.face_of[east1] != face or cx.face_of[west2] != face:
                raise InternalInvariantError("pushoff chord faces disagree")
            ov.connect((p1, east1), (p2, west2))
    else:
        raise ValueError(f"which must be 'v' or 'w', got {which!r}")
    return ov.freeze(0)


def parallel_copy(curve: TransverseCurve) -> TransverseCurve:
    """A disjoint parallel copy, pushed off to the curve's left."""
    cx = curve.complex_
    ov = Overlay.from_curves(cx, [curve])
    seq = ov.walk(0)
    new_pids = []
    for pid, din, dout in seq:
        edge = ov.points[pid]
        tail, _head = _edge_darts(cx, edge)
        base = ov.edge_order[edge].index(pid)
        index = base if din == tail else base + 1
        new_pids.append(ov.new_point(edge, index, 1))
    n = len(seq)
    for k in range(n):
        _pid, _din, dout = seq[k]
        _pid2, din2, _dout2 = seq[(k + 1) % n]
        ov.connect((new_pids[k], dout), (new_pids[(k + 1) % n], din2))
    return ov.freeze(1)


# --------------------------------------------------------------------------
# Bigon reduction and intersection numbers


def _find_bigon(detail: _Detail):
    """A disc component bounded by one arc of each of two curves, meeting
    at two distinct crossings; None when every position is minimal."""
    for comp in range(detail.ncomp):
        circles = detail.circles_of_comp.get(comp, [])
        if detail.chi[comp] != 1 or len(circles) != 1:
            continue
        circle = detail.circles[circles[0]]
        corners = []
        for k, (ci, ai) in enumerate(circle):
            node = detail.corner_node((ci, ai))
            if node[0] == "x":
                corners.append((k, node))
        if len(corners) != 2:
            continue
        if corners[0][1] == corners[1][1]:
            continue
        return circle, corners
    return None


def _splice(ov: Overlay, detail: _Detail, circle, corners, keep_cid: int) -> None:
    """Slide the non-kept curve across the bigon, removing two crossings."""
    cx = ov.cx
    k1, k2 = corners[0][0], corners[1][0]
    runs = [
        [circle[(k1 + t) % len(circle)] for t in range((k2 - k1) % len(circle))],
        [circle[(k2 + t) % len(circle)] for t in range((k1 - k2) % len(circle))],
    ]

    def run_curve(run):
        cids = {detail.atoms[ci][ai]["curve"] for ci, ai in run}
        if len(cids) != 1:
            raise InternalInvariantError("mixed-curve bigon side")
        return cids.pop()

    if run_curve(runs[0]) == keep_cid:
        run_a, run_b = runs[0], runs[1]
    else:
        run_a, run_b = runs[1], runs[0]
        if run_curve(run_a) != keep_cid:
            raise InternalInvariantError("bigon does not involve the kept curve")
    move_cid = run_curve(run_b)

    def atom(inc):
        return detail.atoms[inc[0]][inc[1]]

    # Interior points of a run sit at the corner classes between atoms.
    def interior_points(run):
        pts = []
        for t in range(1, len(run)):
            node = detail.corner_node(run[t])
            if node[0] != "p":
                raise InternalInvariantError("run corner is not an edge point")
            pts.append(node[1])
        return pts

    a_pts = interior_points(run_a)
    b_pts = interior_points(run_b)

    def terminal_beyond(run_atom_inc, corner_node):
        info = atom(run_atom_inc)
        f = info["face"]
        arr = detail.arrangements[f]
        nodes = arr.chord_nodes[info["chord_index"]]
        k = nodes.index(corner_node)
        # The run piece occupies nodes[piece] .. nodes[piece+1]; walk away
        # from the piece past the corner to the chord's terminal endpoint.
        piece = info["piece"]
        if k == piece:
            term = nodes[0]
        elif k == piece + 1:
            term = nodes[-1]
        else:
            raise InternalInvariantError("corner not on the run piece")
        if term[0] != "p":
            raise InternalInvariantError("chord terminal is not an edge point")
        return (term[1], term[2]), info["chord"]

    # Both runs walk the circle forward, so run_b starts at run_a's end
    # corner and ends at its start corner.  q continues the moved curve
    # past run_a's start, r past its end.
    corner_first = detail.corner_node(run_b[0])
    corner_last_node = detail.corner_node(
        (run_b[-1][0], (run_b[-1][1] + 1) % len(detail.atoms[run_b[-1][0]]))
    )
    (q_end, q_chord) = terminal_beyond(run_b[-1], corner_last_node)
    (r_end, r_chord) = terminal_beyond(run_b[0], corner_first)

    # The kept run's chords, walked from its first corner to its last.
    chords_a = []
    faces_a = []
    for inc in run_a:
        info = atom(inc)
        chords_a.append(info["chord"])
        faces_a.append(info["face"])

    # Disc-side interval of each interior point of the kept run.
    insert_before: list[bool] = []
    for t, pid in enumerate(a_pts):
        inc = run_a[t + 1]
        cls_root = detail._find_corner(inc)
        members = detail.class_members[cls_root]
        edge = ov.points[pid]
        posn = ov.edge_order[edge].index(pid)
        side = None
        for ci, ai in members:
            for look in (ai, (ai - 1) % len(detail.atoms[ci])):
                a = detail.atoms[ci][look]
                if a["kind"] == "seg" and a["edge"] == edge:
                    if a["interval"] == posn:
                        side = "below"
                    elif a["interval"] == posn + 1:
                        side = "above"
            if side:
                break
        if side is None:
            raise InternalInvariantError("no disc-side interval at run point")
        insert_before.append(side == "above")

    before = ov.count_crossings()

    # Remove the moved run's interior points and end chords.
    for pid in b_pts:
        ov.remove_point(pid)
    for chord in (q_chord, r_chord):
        for end in chord:
            ov.links.pop(end, None)

    # Darts the kept chords use at each interior point.
    def dart_at(chord, pid):
        for p, d in chord:
            if p == pid:
                return d
        raise InternalInvariantError("point not on chord")

    new_pids = []
    for t, pid in enumerate(a_pts):
        edge = ov.points[pid]
        posn = ov.edge_order[edge].index(pid)
        index = posn if insert_before[t] else posn + 1
        new_pids.append(ov.new_point(edge, index, move_cid))

    m = len(a_pts)
    if m == 0:
        ov.connect(q_end, r_end)
    else:
        ov.connect(q_end, (new_pids[0], dart_at(chords_a[0], a_pts[0])))
        for t in range(m - 1):
            ov.connect(
                (new_pids[t], dart_at(chords_a[t + 1], a_pts[t])),
                (new_pids[t + 1], dart_at(chords_a[t + 1], a_pts[t + 1])),
            )
        ov.connect((new_pids[m - 1], dart_at(chords_a[m], a_pts[m - 1])), r_end)

    after = ov.count_crossings()
    if after != before - 2:
        raise InternalInvariantError(
            f"bigon move changed crossings {before} -> {after}"
        )


def _reduce_overlay(ov: Overlay, keep_cid: int = 0) -> None:
    while True:
        if ov.count_crossings() == 0:
            return
        detail = _Detail(ov, cut_v=False, cut_w=False)
        found = _find_bigon(detail)
        if found is None:
            return
        circle, corners = found
        _splice(ov, detail, circle, corners, keep_cid)


def reduce_bigons(
    c1: TransverseCurve, c2: TransverseCurve
) -> tuple[TransverseCurve, TransverseCurve]:
    """Minimal-position representatives of the pair; c1 is kept in place
    and c2 slides across empty bigons."""
    cx = c1.complex_
    ov = Overlay.from_curves(cx, [c1, c2])
    _reduce_overlay(ov, keep_cid=0)
    return ov.freeze(0), ov.freeze(1)


def intersection_number(c1: TransverseCurve, c2: TransverseCurve) -> int:
    """Geometric intersection number of the two carried curves."""
    cx = c1.complex_
    ov = Overlay.from_curves(cx, [c1, c2])
    _reduce_overlay(ov, keep_cid=0)
    return ov.count_crossings()


# --------------------------------------------------------------------------
# Ladder extraction for a curve paired with w


def extract_ladder(
    complex_: SurfaceComplex, curve: TransverseCurve
) -> tuple[Ladder, tuple[tuple[Edge, int], ...]]:
    """The ladder of the pair (curve, w), with the w-crossing of each new
    column reported alongside.  The curve must cross only w-edges and fill
    together with w."""
    cx = complex_
    pts = curve.edge_points()
    if any(e[0] != "w" for e, _ in pts):
        raise InternalInvariantError("extraction needs a pure w-crossing curve")
    if not complement(cx, ["w", curve]).fills:
        raise InternalInvariantError("extraction needs a filling pair")
    ov = Overlay.from_curves(cx, [curve])
    seq = ov.walk(0)
    npts = len(seq)
    # Arc k of the curve joins point k to point k+1 (1-based, cyclic), so
    # point k meets arcs k-1 (incoming) and k (outgoing).
    order = sorted(
        range(npts),
        key=lambda k: (ov.points[seq[k][0]][1], ov.position(seq[k][0])),
    )
    top, bottom, witness = [], [], []
    for k in order:
        pid, din, dout = seq[k]
        edge = ov.points[pid]
        north_dart = (edge[1], W)
        arc_in = k if k else npts  # label of the incoming arc at point k
        arc_out = k + 1
        north = arc_in if din == north_dart else arc_out
        south = arc_out if din == north_dart else arc_in
        if dout == din:
            raise InternalInvariantError("degenerate crossing darts")
        top.append(north)
        bottom.append(south)
        witness.append((edge, ov.position(pid)))
    ladder = Ladder(tuple(top), tuple(bottom))
    ladder.validate()
    sub = build_complex(ladder)
    if sub.genus != cx.genus:
        raise InternalInvariantError("extracted ladder changes the genus")
    return ladder, tuple(witness)
