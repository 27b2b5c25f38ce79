"""Moment fractions of a summand system.

Three normalized moment functionals of the system drive every inequality
in this package: the truncated second-moment fraction (a non-increasing
step function of the truncation level), the absolute-moment fraction of
order 2+delta (set to 1 by convention at delta=0), and the variance-power
fraction built from the per-summand standard deviations, which never
exceeds the absolute-moment fraction.
"""

from dataclasses import dataclass

from .distributions import SummandSystem, truncated_moment
from .errors import DomainError


def _check_delta(delta: float) -> None:
    if not 0.0 <= delta <= 1.0:
        raise DomainError(f"delta must lie in [0, 1], got {delta!r}")


def lindeberg(system: SummandSystem, eps: float) -> float:
    """Normalized second moment over the region |X_k| > eps * B_n (strict)."""
    if not eps > 0:
        raise DomainError(f"eps must be positive, got {eps!r}")
    cutoff = eps * system.bn
    outside = sum(truncated_moment(d, 2.0, cutoff, "outside") for d in system.summands)
    return outside / system.bn2


def lyapounov(system: SummandSystem, delta: float) -> float:
    """Sum of E|X_k|^(2+delta) over B_n^(2+delta); exactly 1 at delta=0."""
    _check_delta(delta)
    if delta == 0.0:
        return 1.0
    r = 2.0 + delta
    total = sum(float((abs(d.values) ** r) @ d.probs) for d in system.summands)
    return total / system.bn2 ** (r / 2.0)


def t_fraction(system: SummandSystem, delta: float) -> float:
    """Sum of sigma_k^(2+delta) over B_n^(2+delta); 1 when delta=0 or n=1."""
    _check_delta(delta)
    half_r = (2.0 + delta) / 2.0
    total = sum(s2 ** half_r for s2 in system.sigma2s)
    return total / system.bn2 ** half_r


@dataclass(frozen=True)
class FractionReport:
    """Bundle of the order-(2+delta) fractions of one system."""

    bn: float
    lyapounov: float
    t_fraction: float
    delta: float

    def __post_init__(self):
        if self.bn <= 0:
            raise DomainError("bn must be positive")
        # allow a few ulp of slack on the mathematically guaranteed ordering
        if self.t_fraction > self.lyapounov * (1 + 1e-12):
            raise DomainError("t_fraction cannot exceed the lyapounov fraction")
        if self.delta == 0.0 and not (self.lyapounov == 1.0 and self.t_fraction == 1.0):
            raise DomainError("at delta=0 both fractions equal 1 by convention")

    def to_dict(self) -> dict:
        return {
            "bn": self.bn,
            "lyapounov": self.lyapounov,
            "t_fraction": self.t_fraction,
            "delta": self.delta,
        }


def fraction_report(system: SummandSystem, delta: float) -> FractionReport:
    return FractionReport(
        bn=system.bn,
        lyapounov=lyapounov(system, delta),
        t_fraction=t_fraction(system, delta),
        delta=delta,
    )
