"""Standard normal CDF, tail, and the explicit upper tail bound.

Both directions go through the complementary error function, which keeps
full relative precision in the tails (no subtraction of nearly-equal
quantities anywhere). Platform erfc is accurate to a few ulp; validation
against an independent adaptive-quadrature oracle lives in
goldens/phi_reference.json (regenerated by tools/gen_phi_golden.py) and
shows absolute error below 1e-16 and tail relative error below 1e-14 for
|x| <= 10.
"""

import math

from .errors import DomainError

_SQRT2 = math.sqrt(2.0)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def phi_cdf(x: float) -> float:
    """P(Z < x) for standard normal Z."""
    if not math.isfinite(x):
        raise DomainError(f"phi_cdf requires a finite argument, got {x!r}")
    return 0.5 * math.erfc(-x / _SQRT2)


def phi_tail(x: float) -> float:
    """P(Z > x) = 1 - phi_cdf(x), computed without cancellation."""
    if not math.isfinite(x):
        raise DomainError(f"phi_tail requires a finite argument, got {x!r}")
    return 0.5 * math.erfc(x / _SQRT2)


def tail_bound_check(x: float) -> tuple[float, float, bool]:
    """Compare the exact tail P(Z > x) against exp(-x^2/2)/(sqrt(2*pi)*x).

    Returns (lhs, rhs, holds) where holds means lhs <= rhs. Valid for
    x > 0 only; the bound diverges as x -> 0+ but stays valid.
    """
    if not math.isfinite(x) or x <= 0:
        raise DomainError(f"tail_bound_check requires x > 0, got {x!r}")
    lhs = phi_tail(x)
    rhs = math.exp(-0.5 * x * x) / (_SQRT_2PI * x)
    return lhs, rhs, lhs <= rhs
