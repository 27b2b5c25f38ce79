"""Non-uniform normal-approximation bounds on exact discrete summand systems.

The package evaluates the classical non-uniform inequality right-hand
sides (moment-fraction, truncated, integral and weighted forms) against
the exact deviation of a finite discrete convolution from the standard
normal law, and maximizes the closed-form two-point minorants that give
lower bounds for the absolute constants involved.
"""

from .bounds import (BoundEvaluation, REFERENCE, ReferenceConstants, Table1Row,
                     delta_n, evaluate_bound, ratio_sup_weight,
                     rhs_bikelis_integral, rhs_bikelis_min, rhs_bikelis_split,
                     rhs_nagaev_bikelis, rhs_petrov, rhs_structural,
                     sup_weighted_deviation, weighted_sup_delta)
from .distributions import (DiscreteDistribution, SummandSystem, abs_moment,
                            cdf, convolve, make_pinelis, make_two_point,
                            standardize, sum_law, truncated_moment)
from .errors import (BeNonuniformError, CapacityError,
                     DegenerateDistributionError, DomainError, EvaluationError,
                     GridRangeError)
from .gclass import (Constant, GWeight, LowerEnvelope, MembershipResult,
                     MembershipViolation, Power, Tabulated, UpperEnvelope,
                     g_eval, membership_check, sandwich_check)
from .minorants import (ModulusParams, bikelis_constant_minorant,
                        limit_minorant, nagaev_bikelis_minorant,
                        two_point_deviation)
from .moment_fractions import (FractionReport, fraction_report, lindeberg,
                               lyapounov, t_fraction)
from .normal import phi_cdf, phi_tail, tail_bound_check
from .optimize import (SearchResult, maximize_1d, search_general,
                       search_two_point)
from .verify import (Finding, SplitMix64, SuiteReport, draw_system,
                     draw_weight, run_consistency_suite, run_forms_suite,
                     run_sandwich_suite, run_suite)

__version__ = "0.1.0"

__all__ = [
    "BoundEvaluation", "REFERENCE", "ReferenceConstants", "Table1Row",
    "delta_n", "evaluate_bound", "ratio_sup_weight", "rhs_bikelis_integral",
    "rhs_bikelis_min", "rhs_bikelis_split", "rhs_nagaev_bikelis", "rhs_petrov",
    "rhs_structural", "sup_weighted_deviation", "weighted_sup_delta",
    "DiscreteDistribution", "SummandSystem", "abs_moment", "cdf", "convolve",
    "make_pinelis", "make_two_point", "standardize", "sum_law",
    "truncated_moment",
    "BeNonuniformError", "CapacityError", "DegenerateDistributionError",
    "DomainError", "EvaluationError", "GridRangeError",
    "Constant", "GWeight", "LowerEnvelope", "MembershipResult",
    "MembershipViolation", "Power", "Tabulated", "UpperEnvelope", "g_eval",
    "membership_check", "sandwich_check",
    "ModulusParams", "bikelis_constant_minorant", "limit_minorant",
    "nagaev_bikelis_minorant", "two_point_deviation",
    "FractionReport", "fraction_report", "lindeberg", "lyapounov",
    "t_fraction",
    "phi_cdf", "phi_tail", "tail_bound_check",
    "SearchResult", "maximize_1d", "search_general", "search_two_point",
    "Finding", "SplitMix64", "SuiteReport", "draw_system", "draw_weight",
    "run_consistency_suite", "run_forms_suite", "run_sandwich_suite",
    "run_suite",
]
