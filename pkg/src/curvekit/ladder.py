"""Ladder encodings of filling curve pairs.

A ladder presents a pair of curves (v, w) in minimal position as two cyclic
vectors of arc labels: cutting w open at its intersections with v gives a
row of columns, one per intersection point, and the labels of the v-arcs
entering each column from above and below.  Labels are 1-based to match the
usual figures; columns are 1-based in every public signature.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import (
    ConsecutivityError,
    LabelCountError,
    LengthMismatchError,
    NotBijectiveError,
    SyntaxLadderError,
)

__all__ = [
    "Ladder",
    "CanonicalClass",
    "parse_ladder",
    "serialize",
    "canonical_form",
    "mirror",
    "rotate_labels",
    "rotate_columns",
    "random_ladder",
]


def succ1(x: int, n: int) -> int:
    """Cyclic successor on {1..n}."""
    return x % n + 1


def pred1(x: int, n: int) -> int:
    """Cyclic predecessor on {1..n}."""
    return (x - 2) % n + 1


@dataclass(frozen=True, order=True)
class Ladder:
    """Two cyclic label vectors; column j holds the labels of the v-arcs
    meeting the j-th intersection point from above and below."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.top)

    def top_at(self, j: int) -> int:
        """Label above column j (1-based)."""
        return self.top[j - 1]

    def bottom_at(self, j: int) -> int:
        """Label below column j (1-based)."""
        return self.bottom[j - 1]

    def validate(self) -> None:
        """Raise a typed LadderError unless all ladder invariants hold."""
        n = len(self.top)
        if n != len(self.bottom):
            raise LengthMismatchError(
                f"top has {n} entries, bottom has {len(self.bottom)}"
            )
        if n == 0:
            raise SyntaxLadderError("empty ladder")
        counts: dict[int, int] = {}
        for x in self.top + self.bottom:
            if not 1 <= x <= n:
                raise LabelCountError(f"label {x} outside 1..{n}")
            counts[x] = counts.get(x, 0) + 1
        for x in range(1, n + 1):
            if counts.get(x, 0) != 2:
                raise LabelCountError(
                    f"label {x} appears {counts.get(x, 0)} times, expected 2"
                )
        # All columns must parse (consecutivity) before the bijection check.
        values = [(j, self.junction_value(j)) for j in range(1, n + 1)]
        seen: dict[int, int] = {}
        for j, k in values:
            if k in seen:
                raise NotBijectiveError(
                    f"columns {seen[k]} and {j} both yield junction value {k}"
                )
            seen[k] = j

    def junction_value(self, j: int) -> int:
        """The k with {top[j], bottom[j]} = {k, k+1 (mod n)}, for column j."""
        n = self.n
        x, y = self.top[j - 1], self.bottom[j - 1]
        cands = []
        if succ1(x, n) == y:
            cands.append(x)
        if x != y and succ1(y, n) == x:
            cands.append(y)
        if not cands:
            raise ConsecutivityError(
                f"column {j} holds {{{x},{y}}}, not consecutive mod {n}"
            )
        # Ambiguous only when n = 2; the smaller representative is taken,
        # which makes every n = 2 ladder fail the bijection check.
        return min(cands)

    def junction_values(self) -> tuple[int, ...]:
        """Junction value of each column, in column order."""
        return tuple(self.junction_value(j) for j in range(1, self.n + 1))

    def junction_column(self, k: int) -> int:
        """The column where v-arcs k and k+1 meet."""
        for j in range(1, self.n + 1):
            if self.junction_value(j) == k:
                return j
        raise NotBijectiveError(f"no column has junction value {k}")

    def label_slots(self, x: int) -> tuple[tuple[int, str], ...]:
        """The (column, "top"|"bottom") slots where label x appears."""
        out = []
        for j in range(1, self.n + 1):
            if self.top[j - 1] == x:
                out.append((j, "top"))
            if self.bottom[j - 1] == x:
                out.append((j, "bottom"))
        return tuple(out)


@dataclass(frozen=True)
class CanonicalClass:
    """Lexicographic minimum of a ladder's rotation orbit.

    applied_rotation_v / applied_rotation_w record the label shift and
    column rotation that carry the source ladder onto canonical_ladder.
    They depend on the source, not the class, so equality and hashing
    use canonical_ladder alone.
    """

    canonical_ladder: Ladder
    applied_rotation_v: int = field(compare=False)
    applied_rotation_w: int = field(compare=False)


def parse_ladder(text: str) -> Ladder:
    """Parse the two-line ladder format.

    Lines starting with '#' are comments; the first data line is the top
    vector, the second the bottom vector; entries are base-10 integers
    separated by commas with optional spaces.
    """
    data_lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        data_lines.append(line)
    if len(data_lines) != 2:
        raise SyntaxLadderError(
            f"expected exactly 2 data lines, found {len(data_lines)}"
        )

    def parse_line(line: str) -> tuple[int, ...]:
        if line.endswith(","):
            raise SyntaxLadderError(f"trailing comma in {line!r}")
        entries = []
        for piece in line.split(","):
            piece = piece.strip()
            if not piece.isdigit():
                raise SyntaxLadderError(f"bad entry {piece!r} in {line!r}")
            entries.append(int(piece))
        return tuple(entries)

    ladder = Ladder(parse_line(data_lines[0]), parse_line(data_lines[1]))
    ladder.validate()
    return ladder


def serialize(ladder: Ladder) -> str:
    """Canonical two-line text form (inverse of parse_ladder on valid input)."""
    return (
        ",".join(str(x) for x in ladder.top)
        + "\n"
        + ",".join(str(x) for x in ladder.bottom)
        + "\n"
    )


def rotate_labels(ladder: Ladder, a: int) -> Ladder:
    """Shift every v-arc label by +a cyclically."""
    n = ladder.n
    return Ladder(
        tuple((x - 1 + a) % n + 1 for x in ladder.top),
        tuple((x - 1 + a) % n + 1 for x in ladder.bottom),
    )


def rotate_columns(ladder: Ladder, b: int) -> Ladder:
    """Rotate columns so that source column b+1 becomes column 1."""
    b %= ladder.n
    return Ladder(
        ladder.top[b:] + ladder.top[:b],
        ladder.bottom[b:] + ladder.bottom[:b],
    )


def canonical_form(ladder: Ladder) -> CanonicalClass:
    """Lexicographic minimum over all simultaneous label shifts and column
    rotations.  Deterministic: ties prefer the smallest (shift, rotation)."""
    n = ladder.n
    best: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    best_rot = (0, 0)
    for a in range(n):
        shifted = rotate_labels(ladder, a)
        for b in range(n):
            cand = rotate_columns(shifted, b)
            key = (cand.top, cand.bottom)
            if best is None or key < best:
                best = key
                best_rot = (a, b)
    assert best is not None
    return CanonicalClass(Ladder(*best), best_rot[0], best_rot[1])


def mirror(ladder: Ladder) -> Ladder:
    """Swap the top and bottom rows: the orientation-reversed pair.

    Not part of the canonical equivalence; comparison across mirrors is an
    explicit flag on the callers that want it.
    """
    return Ladder(ladder.bottom, ladder.top)


def random_ladder(n: int, rng: random.Random) -> Ladder:
    """A uniformly random valid ladder on n columns.

    The valid ladders on n columns are exactly: a permutation assigning a
    junction value to each column, plus an independent top/bottom choice
    per column.  n = 2 admits no valid ladder (both columns would read
    junction value 1), so n must be 1 or >= 3.
    """
    if n == 2:
        raise ValueError("no valid ladder has exactly 2 columns")
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    top, bottom = [], []
    for k in perm:
        a, b = k, succ1(k, n)
        if rng.random() < 0.5:
            a, b = b, a
        top.append(a)
        bottom.append(b)
    ladder = Ladder(tuple(top), tuple(bottom))
    ladder.validate()
    return ladder
