"""Typed errors for curvekit.

Every exception carries a stable machine-readable ``code`` so CLI callers
can branch without parsing messages.
"""

from __future__ import annotations


class CurveKitError(Exception):
    """Base class for all curvekit errors."""

    code = "ERROR"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)
        self.message = message or self.code


class LadderError(CurveKitError):
    """A ladder failed to parse or validate."""

    code = "INVALID_LADDER"


class SyntaxLadderError(LadderError):
    code = "SYNTAX"


class LengthMismatchError(LadderError):
    code = "LENGTH_MISMATCH"


class LabelCountError(LadderError):
    code = "LABEL_COUNT"


class ConsecutivityError(LadderError):
    code = "CONSECUTIVITY"


class NotBijectiveError(LadderError):
    code = "NOT_BIJECTIVE"


class BigonFoundError(CurveKitError):
    """The reconstructed surface has a bigon face: the pair is not in
    minimal position, which valid inputs are assumed to be."""

    code = "BIGON_FOUND"


class UnsupportedDecompositionError(CurveKitError):
    """Decomposition contains 2k-gons with k > 3; reference-arc machinery
    is only defined for 4- and 6-gon decompositions."""

    code = "UNSUPPORTED_DECOMPOSITION"


class UnsupportedError(CurveKitError):
    """Request outside the supported regime (genus < 2, max_d > 4, ...)."""

    code = "UNSUPPORTED"


class NotConsecutiveError(CurveKitError):
    """Sequence extension requires consecutive reference arcs."""

    code = "NOT_CONSECUTIVE"


class MisalignedError(CurveKitError):
    """Stacked dot graph layers disagree on the arc pair."""

    code = "MISALIGNED"


class IncompatibleKindError(CurveKitError):
    """Requested surgery kind is not admissible at the arc."""

    code = "INCOMPATIBLE_KIND"


class NotInSpiralError(CurveKitError):
    """The w-edge is not a usable surgery site of the spiral."""

    code = "NOT_IN_SPIRAL"


class InvalidSiteError(CurveKitError):
    """Spiral addition site is not a bicorn or band of the pair."""

    code = "INVALID_SITE"


class RegionInvalidError(CurveKitError):
    """Simultaneous surgery precondition failed for the region."""

    code = "REGION_INVALID"


class NotAPathError(CurveKitError):
    """Curve sequence is not a path (consecutive curves must be disjoint)."""

    code = "NOT_A_PATH"


class InternalInvariantError(CurveKitError):
    """An internal consistency check failed; indicates a bug, not bad input."""

    code = "INTERNAL"
