"""Skewed-gentle bound quivers: validation, constructions, and invariants."""

from .algebra import (
    ZERO,
    BasisPath,
    CornerData,
    admissible_base_pair,
    basis,
    corner_data,
    dimension,
    dimension_oracle,
    multiply,
)
from .construct import (
    CommRelation,
    GPairLabels,
    Involution,
    SgArrow,
    SgPresentation,
    SignedVertex,
    build_g_pair,
    build_sg_presentation,
    build_sp_pair,
    canonical_involution,
)
from .cycles import (
    CycleClass,
    SingularityDescriptor,
    descriptor_g,
    descriptor_gentle,
    descriptor_sg,
    full_cycles,
    gldim_flags,
    lift_cycles,
    sign_sequences,
)
from .dsl import SourceSpan, parse, serialize
from .errors import (
    DanglingEndpoint,
    DuplicateName,
    GenerationExhausted,
    InfiniteDimensional,
    IntegrityError,
    InternalInconsistency,
    LimitExceeded,
    NameCollision,
    NotComposable,
    NotGentle,
    NotSkewedGentle,
    NotSpecial,
    ParseError,
    SkewGentleError,
    UnknownVertex,
)
from .generate import random_triple
from .quiver import (
    Arrow,
    BoundQuiver,
    Path,
    Quiver,
    SkewedGentleTriple,
    build_quiver,
    compose,
    finite_dimensional_witness,
    is_finite_dimensional,
    relation_free_paths,
    valency,
)
from .reports import (
    InvariantReport,
    build_invariant_report,
    descriptor_pretty,
    report_json,
    to_dot,
)
from .validate import (
    ValidationReport,
    Violation,
    admissible_special_sets,
    is_gentle,
    is_special_biserial,
    validate_skewed_gentle,
)

__version__ = "0.1.0"
