"""The exact deviation from the normal law and the inequality right-hand sides.

Every rhs_* function returns the coefficient multiplying the absolute
constant, so one evaluation can be tested against many candidate constants.
The deviation delta_n is computed from the exact convolution of the
summands; at an atom of the normalized sum the two one-sided CDF limits
differ, and side="max" takes the larger deviation of the two (the form the
supremum over x actually attains).
"""

import math
from dataclasses import dataclass

import numpy as np

from .distributions import SummandSystem, sum_law
from .errors import DomainError
from .gclass import GWeight, g_eval
from .golden import golden_max, scan_then_golden
from .moment_fractions import lindeberg, lyapounov, t_fraction
from .normal import phi_cdf

_EPS = np.finfo(np.float64).eps

DeltaSide = str  # "strict" | "weak" | "max"


# ---------------------------------------------------------------------------
# deviation of the normalized sum from the normal law
# ---------------------------------------------------------------------------

def _cdf_sides_at(law, t: float) -> tuple[float, float]:
    """(P(S < t), P(S <= t)) with snapping of t onto an atom it rounds near.

    t usually arrives as x * B_n; if x was derived from an atom value the
    product can land one ulp off the atom, which would silently flip the
    strict side across the atom mass. Distinct atoms are at least 1e-12
    apart, so an ulp-scale window is unambiguous at the magnitudes handled
    here.
    """
    values = law.values
    idx = int(np.searchsorted(values, t, side="left"))
    snap = None
    window = 8.0 * _EPS * max(1.0, abs(t))
    for j in (idx - 1, idx):
        if 0 <= j < values.size and abs(values[j] - t) <= window:
            if snap is None or abs(values[j] - t) < abs(values[snap] - t):
                snap = j
    cum = np.cumsum(law.probs)
    if snap is not None:
        strict = float(cum[snap - 1]) if snap > 0 else 0.0
        weak = float(cum[snap])
    else:
        strict = float(cum[idx - 1]) if idx > 0 else 0.0
        weak = strict
    return strict, weak


def delta_n(system: SummandSystem, x: float, side: DeltaSide = "strict") -> float:
    """|P(S_n < x B_n) - Phi(x)| (strict), the weak variant, or their max."""
    if side not in ("strict", "weak", "max"):
        raise DomainError(f"side must be 'strict', 'weak' or 'max', got {side!r}")
    law = sum_law(system)
    strict, weak = _cdf_sides_at(law, x * system.bn)
    phi = phi_cdf(x)
    if side == "strict":
        return abs(strict - phi)
    if side == "weak":
        return abs(weak - phi)
    return max(abs(strict - phi), abs(weak - phi))


# ---------------------------------------------------------------------------
# right-hand-side coefficients
# ---------------------------------------------------------------------------

def rhs_nagaev_bikelis(system: SummandSystem, x: float, delta: float) -> float:
    """L_(2+delta,n) / (1 + |x|^(2+delta))."""
    return lyapounov(system, delta) / (1.0 + abs(x) ** (2.0 + delta))


def rhs_bikelis_min(system: SummandSystem, x: float) -> float:
    """sum_k E X_k^2 min(|X_k|, (1+|x|) B_n) over ((1+|x|)^3 B_n^3)."""
    bn = system.bn
    c = (1.0 + abs(x)) * bn
    total = 0.0
    for d in system.summands:
        v = d.values
        total += float((v * v * np.minimum(np.abs(v), c)) @ d.probs)
    return total / ((1.0 + abs(x)) ** 3 * bn ** 3)


def rhs_bikelis_split(system: SummandSystem, x: float) -> float:
    """Same bound split at the cutoff: truncated second moment outside plus
    third moment inside ((1+|x|) B_n, boundary atoms counted inside)."""
    bn = system.bn
    c = (1.0 + abs(x)) * bn
    quad_term = 0.0
    cubic_term = 0.0
    for d in system.summands:
        v = d.values
        mag = np.abs(v)
        outside = mag > c
        inside = ~outside
        if outside.any():
            quad_term += float((v[outside] * v[outside]) @ d.probs[outside])
        if inside.any():
            cubic_term += float((mag[inside] ** 3) @ d.probs[inside])
    return (quad_term / ((1.0 + abs(x)) ** 2 * bn ** 2)
            + cubic_term / ((1.0 + abs(x)) ** 3 * bn ** 3))


def rhs_bikelis_integral(system: SummandSystem, x: float) -> float:
    """Integral form: (1+|x|)^-3 int_0^(1+|x|) L_n(z) dz.

    L_n is a step function of z with breakpoints at |atom|/B_n, so the
    integral is summed segment by segment with L_n evaluated at interior
    midpoints. The integration variable is the scaled truncation level;
    this normalization makes the integral, min and split forms identical.
    """
    c = 1.0 + abs(x)
    bn = system.bn
    breaks = set()
    for d in system.summands:
        for v in np.abs(d.values):
            z = float(v) / bn
            if 0.0 < z < c:
                breaks.add(z)
    knots = [0.0] + sorted(breaks) + [c]
    total = 0.0
    for lo, hi in zip(knots[:-1], knots[1:]):
        if hi <= lo:
            continue
        mid = 0.5 * (lo + hi)
        total += lindeberg(system, mid) * (hi - lo)
    return total / c ** 3


def rhs_petrov(system: SummandSystem, x: float, w: GWeight) -> float:
    """sum_k E X_k^2 g(X_k) over ((1+|x|)^2 B_n^2 g((1+|x|) B_n)).

    The weight must belong to the class (see gclass.membership_check);
    that is the caller's responsibility.
    """
    bn = system.bn
    ga = g_eval(w, (1.0 + abs(x)) * bn)
    if not ga > 0:
        raise DomainError(f"g((1+|x|)B_n) must be positive, got {ga!r}")
    total = 0.0
    for d in system.summands:
        total += sum(float(p) * float(v) ** 2 * g_eval(w, float(v))
                     for v, p in zip(d.values, d.probs))
    return total / ((1.0 + abs(x)) ** 2 * system.bn2 * ga)


def rhs_structural(system: SummandSystem, delta: float, s: float) -> float:
    """L_(2+delta,n) + s * T_(2+delta,n); compared against the weighted sup."""
    if not s >= 0:
        raise DomainError(f"s must be >= 0, got {s!r}")
    return lyapounov(system, delta) + s * t_fraction(system, delta)


# ---------------------------------------------------------------------------
# suprema
# ---------------------------------------------------------------------------

def ratio_sup_weight(delta: float) -> tuple[float, float]:
    """sup over x > 0 of (1+x)^(2+delta) / (1+x^(2+delta)).

    Returns (sup_value, argmax); analytically the sup is 2^(1+delta) at
    x = 1, and the numerical search reproduces both.
    """
    if not 0.0 <= delta <= 1.0:
        raise DomainError(f"delta must lie in [0, 1], got {delta!r}")
    r = 2.0 + delta

    def f(x: float) -> float:
        return (1.0 + x) ** r / (1.0 + x ** r)

    x_best, f_best, _, _, _ = scan_then_golden(f, 1e-6, 100.0, tol=1e-12)
    return f_best, x_best


def sup_weighted_deviation(system: SummandSystem, weight_fn,
                           refine: int = 64, tol: float = 1e-10,
                           outer_span: float = 50.0,
                           polish_segments: int = 3) -> tuple[float, float]:
    """sup over x of weight_fn(x) * delta_n(system, x, "max").

    The normalized sum has finitely many atoms; between consecutive atoms
    the CDF is constant, so the objective there is weight_fn(x)*|c - Phi(x)|
    for a per-segment constant c. Candidates are the one-sided limits at
    every atom plus `refine` uniform probes per segment; the best few
    segments get a golden polish around their winning probe. Returns
    (sup_value, arg_x).
    """
    law = sum_law(system)
    bn = system.bn
    xs = law.values / bn
    weak = np.cumsum(law.probs)
    strict = weak - law.probs
    m = xs.size

    best_val = -math.inf
    best_x = float(xs[0])

    for i in range(m):
        phi = phi_cdf(float(xs[i]))
        dev = max(abs(float(weak[i]) - phi), abs(float(strict[i]) - phi))
        val = weight_fn(float(xs[i])) * dev
        if val > best_val:
            best_val, best_x = val, float(xs[i])

    segments = [(float(xs[0]) - outer_span, float(xs[0]), 0.0)]
    segments += [(float(xs[i]), float(xs[i + 1]), float(weak[i])) for i in range(m - 1)]
    segments += [(float(xs[-1]), float(xs[-1]) + outer_span, 1.0)]

    probe_results = []  # (probe value, probe x, segment index)
    for k, (lo, hi, c) in enumerate(segments):
        if hi - lo <= 0:
            continue
        seg_best, seg_x = -math.inf, lo
        for j in range(1, refine + 1):
            x = lo + (hi - lo) * j / (refine + 1)
            val = weight_fn(x) * abs(c - phi_cdf(x))
            if val > seg_best:
                seg_best, seg_x = val, x
        probe_results.append((seg_best, seg_x, k))
        if seg_best > best_val:
            best_val, best_x = seg_best, seg_x

    probe_results.sort(key=lambda t: -t[0])
    for seg_best, seg_x, k in probe_results[:polish_segments]:
        lo, hi, c = segments[k]
        cell = (hi - lo) / (refine + 1)
        p_lo = max(lo, seg_x - cell)
        p_hi = min(hi, seg_x + cell)
        if p_hi <= p_lo:
            continue
        x_ref, v_ref, _, _ = golden_max(
            lambda x: weight_fn(x) * abs(c - phi_cdf(x)), p_lo, p_hi, tol)
        if v_ref > best_val:
            best_val, best_x = v_ref, x_ref

    return best_val, best_x


def weighted_sup_delta(system: SummandSystem, delta: float,
                       x_grid=None) -> tuple[float, float]:
    """sup over x of (1 + |x|^(2+delta)) * delta_n(system, x, "max").

    With x_grid=None the candidate set is built from the atoms of the
    normalized sum plus per-segment refinement (see sup_weighted_deviation).
    An explicit grid is evaluated on top of the atom candidates.
    """
    if not 0.0 <= delta <= 1.0:
        raise DomainError(f"delta must lie in [0, 1], got {delta!r}")
    r = 2.0 + delta

    def weight_fn(x: float) -> float:
        return 1.0 + abs(x) ** r

    best_val, best_x = sup_weighted_deviation(system, weight_fn)
    if x_grid is not None:
        for x in np.asarray(x_grid, dtype=float).ravel():
            val = weight_fn(float(x)) * delta_n(system, float(x), "max")
            if val > best_val:
                best_val, best_x = val, float(x)
    return best_val, best_x


# ---------------------------------------------------------------------------
# evaluation records and published reference constants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundEvaluation:
    """One inequality evaluation: rhs = constant_used * rhs_coefficient and
    satisfied = (lhs <= rhs) with zero tolerance (a violation is a finding,
    not a bug)."""

    x: float
    lhs: float
    rhs_coefficient: float
    constant_used: float
    rhs: float
    satisfied: bool

    def to_dict(self) -> dict:
        return {
            "x": self.x,
            "lhs": self.lhs,
            "rhs_coefficient": self.rhs_coefficient,
            "constant_used": self.constant_used,
            "rhs": self.rhs,
            "satisfied": self.satisfied,
        }


def evaluate_bound(x: float, lhs: float, rhs_coefficient: float,
                   constant_used: float) -> BoundEvaluation:
    if not constant_used > 0:
        raise DomainError(f"constant_used must be positive, got {constant_used!r}")
    rhs = constant_used * rhs_coefficient
    return BoundEvaluation(
        x=x, lhs=lhs, rhs_coefficient=rhs_coefficient,
        constant_used=constant_used, rhs=rhs, satisfied=lhs <= rhs)


@dataclass(frozen=True)
class Table1Row:
    delta: float
    k0_noniid: float
    ks1_noniid: float
    s1_noniid: float
    k0_iid: float
    ks1_iid: float
    s1_iid: float


@dataclass(frozen=True)
class ReferenceConstants:
    """Best published upper bounds for the absolute constants.

    table1 holds the per-delta constants of the weighted inequalities
    (general and i.i.d. columns, with the structural optimum s1); the a_*
    fields are the universal constants of the cubic-weight inequalities,
    including the sharper values valid for |x| >= 10.
    """

    table1: tuple[Table1Row, ...]
    a_general: float
    a_iid: float
    a_general_far: float
    a_iid_far: float

    def row(self, delta: float) -> Table1Row:
        for r in self.table1:
            if abs(r.delta - delta) <= 1e-12:
                return r
        raise DomainError(f"no published constants for delta={delta!r}")

    def deltas(self) -> tuple[float, ...]:
        return tuple(r.delta for r in self.table1)

    def k0(self, delta: float, iid: bool = False) -> float:
        r = self.row(delta)
        return r.k0_iid if iid else r.k0_noniid

    def structural_constant(self, delta: float, s: float, iid: bool = False) -> float:
        """Published constant valid for the structural inequality at this s.

        The table gives the constant at s=0 and at the optimizing s1 (the
        constant is flat beyond s1). For 0 < s < s1 no sharper published
        value exists, so the s=0 constant is used (always valid since the
        true constants are non-increasing in s).
        """
        r = self.row(delta)
        if iid:
            return r.ks1_iid if s >= r.s1_iid else r.k0_iid
        return r.ks1_noniid if s >= r.s1_noniid else r.k0_noniid


REFERENCE = ReferenceConstants(
    table1=(
        Table1Row(1.0, 21.82, 18.19, 1.0, 17.36, 15.70, 0.646),
        Table1Row(0.9, 20.07, 16.65, 1.0, 16.24, 14.61, 0.619),
        Table1Row(0.8, 18.53, 15.34, 1.0, 15.20, 13.61, 0.625),
        Table1Row(0.7, 17.14, 14.20, 1.0, 14.13, 12.71, 0.570),
        Table1Row(0.6, 15.91, 13.19, 0.859, 13.15, 11.90, 0.498),
        Table1Row(0.5, 14.84, 12.30, 0.834, 12.26, 11.17, 0.428),
        Table1Row(0.4, 13.92, 11.53, 0.806, 11.43, 10.51, 0.350),
        Table1Row(0.3, 13.10, 10.86, 0.778, 10.66, 9.93, 0.273),
        Table1Row(0.2, 12.35, 10.28, 0.748, 9.92, 9.42, 0.183),
        Table1Row(0.1, 11.67, 9.77, 0.710, 9.18, 8.97, 0.074),
    ),
    a_general=47.65,
    a_iid=39.32,
    a_general_far=29.62,
    a_iid_far=24.13,
)
