"""Max-load experiments for the hash family ((a*x + b) mod p) mod m."""

from .estimators import (
    GENERATOR_NAME,
    McConfig,
    McEstimate,
    ScalingRow,
    fully_random_exact_mean,
    max_load_distribution,
    mc_fully_random_maxload,
    mc_linear_maxload,
    scaling_study,
    tail_log_slope,
)
from .experiments import (
    AcceptanceReport,
    CheckRow,
    default_figure1_sweep,
    format_report,
    run_figure1,
    run_lemma_checks,
    run_scaling,
    run_transform_demo,
)
from .field import (
    MAX_MODULUS,
    HashParams,
    Modulus,
    eval_binned,
    eval_full,
    is_prime,
    leaps,
    mod_inverse,
    next_prime_at_least,
)
from .loads import (
    AffineImage,
    Explicit,
    Interval,
    KeySet,
    LoadProfile,
    key_set_size,
    load_profile,
    materialize,
    max_load_b_zero_bounds,
)
from .oracles import (
    DEFAULT_WORK_BUDGET,
    CanonicalTriple,
    CollisionStats,
    TripleCollisionBounds,
    WorkBudgetError,
    canonicalize_triple,
    count_interval_collision,
    count_prescribed_triple,
    count_triple_collisions,
    exact_maxload_histogram,
    interval_lower_bound,
    maxloads_b_zero,
    maxloads_for_a,
    triple_bound_formula,
)

__version__ = "0.1.0"

__all__ = [
    "AcceptanceReport",
    "AffineImage",
    "CanonicalTriple",
    "CheckRow",
    "CollisionStats",
    "DEFAULT_WORK_BUDGET",
    "Explicit",
    "GENERATOR_NAME",
    "HashParams",
    "Interval",
    "KeySet",
    "LoadProfile",
    "MAX_MODULUS",
    "McConfig",
    "McEstimate",
    "Modulus",
    "ScalingRow",
    "TripleCollisionBounds",
    "WorkBudgetError",
    "canonicalize_triple",
    "count_interval_collision",
    "count_prescribed_triple",
    "count_triple_collisions",
    "default_figure1_sweep",
    "eval_binned",
    "eval_full",
    "exact_maxload_histogram",
    "format_report",
    "fully_random_exact_mean",
    "interval_lower_bound",
    "is_prime",
    "key_set_size",
    "leaps",
    "load_profile",
    "materialize",
    "max_load_b_zero_bounds",
    "max_load_distribution",
    "maxloads_b_zero",
    "maxloads_for_a",
    "mc_fully_random_maxload",
    "mc_linear_maxload",
    "mod_inverse",
    "next_prime_at_least",
    "run_figure1",
    "run_lemma_checks",
    "run_scaling",
    "run_transform_demo",
    "scaling_study",
    "tail_log_slope",
]
