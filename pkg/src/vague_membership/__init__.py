"""Vague membership - validated vague partitions, membership measures and fuzzy sets."""

# Configuration
from vague_membership.config import (
    BOUNDARY_TOL,
    DUALITY_TOL,
    Config,
    EvaluationConfig,
    LoggingConfig,
    ToleranceConfig,
)

# Connectives
from vague_membership.connectives import (
    ConnectiveTriple,
    NegationClass,
    NegationKind,
    TConormKind,
    TNormKind,
    check_duality,
    dual_of,
    get_default_triple,
    negation_apply,
    parse_triple,
    set_default_triple,
    tconorm_apply,
    tconorm_fold,
    tnorm_apply,
    tnorm_fold,
)

# Errors
from vague_membership.errors import (
    BindingError,
    ConstructionError,
    CrossPartitionError,
    DocumentError,
    DocumentSyntaxError,
    DomainError,
    ExprSyntaxError,
    GenerationError,
    PartitionValidationError,
    PreconditionError,
    SchemaError,
    UnsupportedError,
    VagueError,
)

# Expressions
from vague_membership.expr import (
    And,
    Atom,
    Bot,
    Neg,
    Or,
    Top,
    VagueExpr,
    atoms_of,
    fold_expr,
    format_expr,
    parse,
)

# Factory functions
from vague_membership.factory import configure_from_env, create_triple, reset_defaults

# Inversion
from vague_membership.inverse import (
    TargetVector,
    explain_infeasible,
    invert,
    invert_approx,
)

# Measures and fuzzy sets
from vague_membership.measure import (
    FuzzySet,
    Judgement,
    MembershipSpaceReport,
    check_axioms,
    consistent_degree,
    derive_fuzzy_set,
    eval_measure,
    fs_combine,
    fs_membership,
    incompatible,
    intuitionistic_pair,
    judge,
    separation,
    sharpness,
)

# Partitions
from vague_membership.partition import (
    PartitionCandidate,
    ValidationReport,
    VaguePartition,
    check_prop_5_1,
    check_prop_5_2,
    is_regular,
    random_partition,
    scale_block,
    validate_partition,
)

# Piecewise-linear functions
from vague_membership.plfunc import (
    CombineOp,
    Interval,
    LevelSet,
    PiecewiseLinearFn,
    SampledFn,
    pl_combine,
    pl_eval,
    pl_extrema,
    pl_is_unimodal_with_plateau,
    pl_level_set,
)

# Protocols
from vague_membership.protocols import BaseMembershipFn, Estimate, Extrema

# Documents
from vague_membership.specio import (
    dump_partition,
    load_bundled,
    load_partition,
    save_partition,
    write_report,
)

__version__ = "0.1.0"

__all__ = [
    # Configuration
    "BOUNDARY_TOL",
    "DUALITY_TOL",
    "Config",
    "EvaluationConfig",
    "LoggingConfig",
    "ToleranceConfig",
    # Connectives
    "ConnectiveTriple",
    "NegationClass",
    "NegationKind",
    "TConormKind",
    "TNormKind",
    "check_duality",
    "dual_of",
    "get_default_triple",
    "negation_apply",
    "parse_triple",
    "set_default_triple",
    "tconorm_apply",
    "tconorm_fold",
    "tnorm_apply",
    "tnorm_fold",
    # Errors
    "BindingError",
    "ConstructionError",
    "CrossPartitionError",
    "DocumentError",
    "DocumentSyntaxError",
    "DomainError",
    "ExprSyntaxError",
    "GenerationError",
    "PartitionValidationError",
    "PreconditionError",
    "SchemaError",
    "UnsupportedError",
    "VagueError",
    # Expressions
    "And",
    "Atom",
    "Bot",
    "Neg",
    "Or",
    "Top",
    "VagueExpr",
    "atoms_of",
    "fold_expr",
    "format_expr",
    "parse",
    # Factory functions
    "configure_from_env",
    "create_triple",
    "reset_defaults",
    # Inversion
    "TargetVector",
    "explain_infeasible",
    "invert",
    "invert_approx",
    # Measures and fuzzy sets
    "FuzzySet",
    "Judgement",
    "MembershipSpaceReport",
    "check_axioms",
    "consistent_degree",
    "derive_fuzzy_set",
    "eval_measure",
    "fs_combine",
    "fs_membership",
    "incompatible",
    "intuitionistic_pair",
    "judge",
    "separation",
    "sharpness",
    # Partitions
    "PartitionCandidate",
    "ValidationReport",
    "VaguePartition",
    "check_prop_5_1",
    "check_prop_5_2",
    "is_regular",
    "random_partition",
    "scale_block",
    "validate_partition",
    # Piecewise-linear functions
    "CombineOp",
    "Interval",
    "LevelSet",
    "PiecewiseLinearFn",
    "SampledFn",
    "pl_combine",
    "pl_eval",
    "pl_extrema",
    "pl_is_unimodal_with_plateau",
    "pl_level_set",
    # Protocols
    "BaseMembershipFn",
    "Estimate",
    "Extrema",
    # Documents
    "dump_partition",
    "load_bundled",
    "load_partition",
    "save_partition",
    "write_report",
]
