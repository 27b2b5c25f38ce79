"""Closed-form lower-bound expressions built on the two-point family.

Evaluating a weighted-deviation supremum on the zero-mean unit-variance
two-point law (mass p at sqrt(q/p), mass q=1-p at -sqrt(p/q)), at the
positive atom, yields closed-form minorants for the absolute constants of
the non-uniform normal-approximation inequalities: one for the universal
constant of the (1+|x|)^2-weighted inequality, and a (delta, s)-family for
the constants of the (1+|x|^(2+delta))-weighted inequalities.
"""

import math
from dataclasses import dataclass

from .errors import DomainError
from .normal import phi_cdf, phi_tail


@dataclass(frozen=True)
class ModulusParams:
    """The (delta, s) pair parameterizing the inequality family."""

    delta: float
    s: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.delta <= 1.0:
            raise DomainError(f"delta must lie in [0, 1], got {self.delta!r}")
        if not self.s >= 0.0:
            raise DomainError(f"s must be >= 0, got {self.s!r}")


def _check_p(p: float) -> None:
    if not 0.0 < p < 1.0:
        raise DomainError(f"p must lie strictly inside (0, 1), got {p!r}")


def two_point_deviation(p: float) -> float:
    """|q - Phi(sqrt(q/p))|: the strict-CDF deviation of the two-point law
    at its positive atom."""
    _check_p(p)
    q = 1.0 - p
    return abs(q - phi_cdf(math.sqrt(q / p)))


def bikelis_constant_minorant(p: float) -> float:
    """(1 + sqrt(q/p))^2 |q - Phi(sqrt(q/p))|: lower bound for the universal
    constant of the (1+|x|)^2-weighted inequality, evaluated at one p."""
    _check_p(p)
    q = 1.0 - p
    t = math.sqrt(q / p)
    return (1.0 + t) ** 2 * abs(q - phi_cdf(t))


def nagaev_bikelis_minorant(p: float, params: ModulusParams) -> float:
    """Two-point minorant for the constants of the structural inequality.

    Computes q^(d/2) * (p^(1+d/2) + q^(1+d/2))
                     / (p^(1+d) + q^(1+d) + s*(pq)^(d/2))
                     * |1 - Phi(-sqrt(q/p))/p|.

    The last factor goes through the cancellation-free tail: the tail mass
    underflows gracefully for small p, where 1 - tail/p stays
    well-conditioned.
    """
    _check_p(p)
    d = params.delta
    s = params.s
    q = 1.0 - p
    t = math.sqrt(q / p)
    weight = (q ** (d / 2.0) * (p ** (1.0 + d / 2.0) + q ** (1.0 + d / 2.0))
              / (p ** (1.0 + d) + q ** (1.0 + d) + s * (p * q) ** (d / 2.0)))
    return weight * abs(1.0 - phi_tail(t) / p)


def limit_minorant(params: ModulusParams) -> float:
    """Small-p limit of the two-point minorant: 1/(1+s) at delta=0, else 1."""
    if params.delta == 0.0:
        return 1.0 / (1.0 + params.s)
    return 1.0
