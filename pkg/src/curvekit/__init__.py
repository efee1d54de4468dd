"""curvekit: filling curve pairs on closed surfaces via ladder diagrams."""

from .errors import (
    BigonFoundError,
    CurveKitError,
    IncompatibleKindError,
    InternalInvariantError,
    InvalidSiteError,
    LadderError,
    MisalignedError,
    NotAPathError,
    NotConsecutiveError,
    NotInSpiralError,
    RegionInvalidError,
    UnsupportedDecompositionError,
    UnsupportedError,
)
from .ladder import (
    CanonicalClass,
    Ladder,
    canonical_form,
    mirror,
    parse_ladder,
    random_ladder,
    serialize,
)
from .surface import (
    Bicorn,
    Decomposition,
    SurfaceComplex,
    build_complex,
    check_nonseparating,
    decomposition,
    equivalent,
    find_bicorns,
    swap_roles,
)
from .curves import (
    ComplementComponent,
    ComplementReport,
    ReferenceArc,
    TransverseCurve,
    complement,
    enumerate_disjoint_curves,
    extract_ladder,
    intersection_number,
    parallel_copy,
    reduce_bigons,
    reference_arcs,
    skeleton_pushoff,
)
from .dotgraph import (
    DotGraph,
    IntersectionSequence,
    Region,
    StackedDotGraph,
    build_dot_graph,
    common_regions,
    extend,
    find_regions,
    intersection_sequence,
    sawtooth,
    stack,
)
__version__ = "0.1.0"
