"""Composition factors of Kac modules for gl(m|n) via weight and cap diagrams.

Three independent routes compute the factor set of any Kac module (signed
operator product, exhaustive cap matching, cancelation-free recursion), the
library cross-checks them against each other, and the weight-zero move graph
answers Ext^1 queries between simple modules.  See the README for the math
and the CLI (``kacdecomp --help``) for the command surface.
"""

from .diagrams import (
    Cap,
    CapDiagram,
    DiagramSum,
    Symbol,
    WeightDiagram,
    canonical_sorted,
    cap_diagram,
    enumerate_matching,
    from_spec,
    matches,
    matching_window,
    parse,
    scan_backend,
    serialize,
)
from .decomp import (
    IndexedMatrix,
    MultiplicityMatrix,
    RouteReport,
    cap_spans,
    catalan_check,
    conjecture_scan,
    decompose,
    decompose_recursive,
    invert_unitriangular,
    invert_unitriangular_rows,
    kac_modules_containing,
    multiplicity_matrix,
    predecessor,
    toggle_caps,
    verify_routes,
)
from .errors import (
    AtypicalityTooSmall,
    BadInterval,
    ClosureTooLarge,
    CoreMismatch,
    EmptyWeight,
    InvariantViolation,
    KacDecompError,
    LengthMismatch,
    NotACircle,
    NotACross,
    NotClosed,
    NotCoreFree,
    NotDominant,
    NotIncreasing,
    NotIrregular,
    OverlappingSymbols,
    ParseError,
)
from .extgraph import ExtEdge, GraphSlice, ext_component, ext_dim, ext_neighbors
from .glweights import (
    DominantWeight,
    EpsilonDeltaWeight,
    atypicality,
    from_diagram,
    parse_weight,
    rho,
    shift,
    to_diagram,
)
from .moves import (
    LegalMove,
    apply_move,
    l_value,
    legal_ends,
    legal_ends_recursive,
    sigma,
    sigma_product,
)
from .paths import (
    Edge,
    Path,
    classify,
    edges_from,
    increasing_paths,
    path_coefficient,
    regular_paths,
    star,
)
from .render import render

__version__ = "0.1.0"
