"""Finite Lie hyperalgebras over finite hyperfields: fundamental relations,
quotient Lie algebras, and the structural checks built on them."""

from .analysis import (
    NeighborhoodSet,
    SnPartVerdict,
    bell_number,
    is_Sn_part,
    is_transitive_Sn,
    iter_partitions_rgs,
    lemma_equivalence_check,
    neighborhood_P,
    nontransitivity_search,
    relation_S,
    smallest_solvable_oracle,
)
from .errors import (
    AxiomFailure,
    BoundsExceeded,
    CarrierCapExceeded,
    CharTwoGate,
    DegenerateField,
    FieldMismatch,
    HyperlieError,
    InternalInvariant,
    MalformedTable,
    NoSolvableQuotient,
    NoStabilization,
    NotAField,
    NotAGroup,
    NotASubgroup,
    NotAVectorSpace,
    NotLie,
    NotSymmetric,
    NotWellDefined,
    ParseError,
    TooLarge,
)
from .generators import (
    CONSTANT_PRESETS,
    gen_coset_hypergroup,
    gen_orbit_quotient,
    gen_quotient_hyperfield,
    gen_trivial_field,
    gen_trivial_from_lie,
    make_cyclic_group,
    make_s3,
    preset_structure,
)
from .interchange import parse_structure, serialize_structure
from .quotients import (
    FiniteField,
    FiniteLieAlgebra,
    classical_dims_chain,
    derived_dims,
    derived_series,
    detect_trivial,
    is_perfect,
    linear_oracle_Sn,
    linear_oracle_partition,
    quotient_field,
    quotient_lie_algebra,
    solvable_length,
)
from .relations import (
    DEFAULT_BOUNDS,
    HARD_CAP,
    ExpressionBounds,
    Partition,
    RelationStatus,
    clear_relation_cache,
    closed_relation,
    hyper_derived_sets,
    is_strongly_regular,
    is_strongly_regular_field,
    relation_A,
    relation_L,
    relation_Sn,
    relation_alpha,
    relation_json,
    relation_with_escalation,
    transitive_closure,
)
from .structures import (
    CheckReport,
    FiniteHyperfield,
    FiniteLieHyperalgebra,
    Hypergroup,
    check_hyperfield,
    check_hypergroup,
    check_lie_hyperalgebra,
    reevaluate,
)

__version__ = "1.0.0"

__all__ = [
    "AxiomFailure",
    "BoundsExceeded",
    "CONSTANT_PRESETS",
    "CarrierCapExceeded",
    "CharTwoGate",
    "CheckReport",
    "DEFAULT_BOUNDS",
    "DegenerateField",
    "ExpressionBounds",
    "FieldMismatch",
    "FiniteField",
    "FiniteHyperfield",
    "FiniteLieAlgebra",
    "FiniteLieHyperalgebra",
    "HARD_CAP",
    "Hypergroup",
    "HyperlieError",
    "InternalInvariant",
    "MalformedTable",
    "NeighborhoodSet",
    "NoSolvableQuotient",
    "NoStabilization",
    "NotAField",
    "NotAGroup",
    "NotASubgroup",
    "NotAVectorSpace",
    "NotLie",
    "NotSymmetric",
    "NotWellDefined",
    "ParseError",
    "Partition",
    "RelationStatus",
    "SnPartVerdict",
    "TooLarge",
    "bell_number",
    "check_hyperfield",
    "check_hypergroup",
    "check_lie_hyperalgebra",
    "classical_dims_chain",
    "clear_relation_cache",
    "closed_relation",
    "derived_dims",
    "derived_series",
    "detect_trivial",
    "gen_coset_hypergroup",
    "gen_orbit_quotient",
    "gen_quotient_hyperfield",
    "gen_trivial_field",
    "gen_trivial_from_lie",
    "hyper_derived_sets",
    "is_Sn_part",
    "is_perfect",
    "is_strongly_regular",
    "is_strongly_regular_field",
    "is_transitive_Sn",
    "iter_partitions_rgs",
    "lemma_equivalence_check",
    "linear_oracle_Sn",
    "linear_oracle_partition",
    "make_cyclic_group",
    "make_s3",
    "neighborhood_P",
    "nontransitivity_search",
    "parse_structure",
    "preset_structure",
    "quotient_field",
    "quotient_lie_algebra",
    "relation_A",
    "relation_L",
    "relation_S",
    "relation_Sn",
    "relation_alpha",
    "relation_json",
    "relation_with_escalation",
    "serialize_structure",
    "smallest_solvable_oracle",
    "solvable_length",
    "transitive_closure",
]
