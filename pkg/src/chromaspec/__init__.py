"""chromaspec: exact chromatic evaluation spectra.

Exact-arithmetic library for chromatic polynomials under deletion and
contraction, planar witness constructions driven by two local growth
operations, mechanically certified ping-pong decodings of the resulting
vector semigroups, and exhaustive evaluation spectra over small-graph
censuses.
"""

from .scalars import MixedRadicandError, Scalar, ScalarParseError, falling_factorial, scalar_cmp
from .polynomials import Poly, falling_factorial_poly, poly_eval
from .matrices import Mat2, Vec2
from .intervals import Interval, Mobius, PoleInsideIntervalError, mobius_image
from .graphs import (
    Graph,
    Witness,
    add_apex,
    add_leaf,
    contract_edge,
    delete_edge,
    join_clique,
    subdivide,
)
from .canonical import CanonicalSizeError, DEFAULT_CANONICAL_LIMIT, canonical_form, graph_from_canonical
from .graph6 import Graph6Error, graph6_decode, graph6_encode, read_graph6_file, write_graph6_file
from .chromatic import (
    ChromaticCache,
    check_additive_dc,
    check_join_shift,
    check_leaf_factor,
    check_polyid,
    chromatic_poly,
    z_value,
)
from .oracle import GuardError, chromatic_poly_interpolated, count_colorings
from .semigroup import (
    DegenerateParameterError,
    VectorMode,
    apply_word_graph,
    attainable_mode,
    attainable_vector,
    check_singular_third_op,
    feasible_mode,
    feasible_vector,
    op_matrix,
    predict_vector,
    ratio,
    ratio_map,
    sign_bridge_matrix,
    singular_third_op_matrix,
    telescoped_subdivision_map,
    witness_vector,
    word_matrix,
)
from .regimes import (
    Block,
    CertCondition,
    Certificate,
    CertificationError,
    PingPongViolation,
    Regime,
    WitnessValueReport,
    WordCountGuardError,
    candidate_regimes,
    distinct_witness_values,
    pingpong_certify,
    regime_for,
    try_certify,
)
from .census import (
    CENSUS_LIMIT,
    CLASS_NAMES,
    GraphCensus,
    LowerBoundAudit,
    Spectrum,
    clear_census_cache,
    compute_spectrum,
    enumerate_census,
    lower_bound_audit,
    stanley_check,
)

__version__ = "0.1.0"
