"""Even weight functions with g and x/g(x) non-decreasing on x > 0.

The built-in kinds (Constant, Power, LowerEnvelope, UpperEnvelope) belong
to the class analytically. Tabulated weights interpolate linearly between
knots on |x|; monotonicity of the interpolated g follows from monotonicity
at the knots, and x/g(x) of a linear interpolant has one-signed derivative
per segment, so the knot checks cover the whole range. Membership is only
ever verified on finite grids (it is not decidable from a black box).
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, GridRangeError

SANDWICH_REL_TOL = 1e-12
MEMBERSHIP_REL_TOL = 1e-12


class GWeight:
    """Base class; evaluation is always through the even extension g(|x|)."""

    def eval(self, x: float) -> float:
        return self._eval_abs(abs(x))

    def _eval_abs(self, a: float) -> float:  # pragma: no cover - abstract
        raise NotImplementedError


@dataclass(frozen=True)
class Constant(GWeight):
    """g(x) = 1."""

    def _eval_abs(self, a: float) -> float:
        return 1.0


@dataclass(frozen=True)
class Power(GWeight):
    """g(x) = |x|^delta with delta in [0, 1]."""

    delta: float

    def __post_init__(self):
        if not 0.0 <= self.delta <= 1.0:
            raise DomainError(f"power exponent must lie in [0, 1], got {self.delta!r}")

    def _eval_abs(self, a: float) -> float:
        return a ** self.delta


@dataclass(frozen=True)
class LowerEnvelope(GWeight):
    """g(x) = min(1, |x|/a): the smallest class member normalized at a."""

    a: float

    def __post_init__(self):
        if not self.a > 0:
            raise DomainError(f"envelope scale must be positive, got {self.a!r}")

    def _eval_abs(self, a: float) -> float:
        return min(1.0, a / self.a)


@dataclass(frozen=True)
class UpperEnvelope(GWeight):
    """g(x) = max(1, |x|/a): the largest class member normalized at a."""

    a: float

    def __post_init__(self):
        if not self.a > 0:
            raise DomainError(f"envelope scale must be positive, got {self.a!r}")

    def _eval_abs(self, a: float) -> float:
        return max(1.0, a / self.a)


@dataclass(frozen=True, eq=False)
class Tabulated(GWeight):
    """Piecewise-linear weight on a strictly increasing grid of x >= 0 knots."""

    xs: np.ndarray
    gs: np.ndarray

    def __post_init__(self):
        xs = np.asarray(self.xs, dtype=np.float64).ravel()
        gs = np.asarray(self.gs, dtype=np.float64).ravel()
        if xs.size < 2 or xs.shape != gs.shape:
            raise DomainError("tabulated weight needs at least two (x, g) knots")
        if not np.all(np.isfinite(xs)) or not np.all(np.isfinite(gs)):
            raise DomainError("tabulated knots must be finite")
        if xs[0] < 0 or np.any(np.diff(xs) <= 0):
            raise DomainError("tabulated x knots must be non-negative and strictly increasing")
        if np.any(gs <= 0):
            raise DomainError("tabulated g values must be positive")
        xs.setflags(write=False)
        gs.setflags(write=False)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "gs", gs)

    def _eval_abs(self, a: float) -> float:
        if a < self.xs[0] or a > self.xs[-1]:
            raise GridRangeError(
                f"|x|={a!r} outside tabulated range [{self.xs[0]!r}, {self.xs[-1]!r}]")
        return float(np.interp(a, self.xs, self.gs))

    @classmethod
    def from_json_obj(cls, obj) -> "Tabulated":
        if not isinstance(obj, dict) or "grid" not in obj:
            raise DomainError('tabulated weight JSON must be an object with a "grid" key')
        grid = obj["grid"]
        if not isinstance(grid, list) or any(len(r) != 2 for r in grid):
            raise DomainError('"grid" must be a list of [x, g] pairs')
        return cls(np.array([r[0] for r in grid], dtype=float),
                   np.array([r[1] for r in grid], dtype=float))


def g_eval(w: GWeight, x: float) -> float:
    """Evaluate the weight at x through its even extension."""
    if not np.isfinite(x):
        raise DomainError(f"g_eval requires a finite argument, got {x!r}")
    return w.eval(x)


@dataclass(frozen=True)
class MembershipViolation:
    check: str  # "positivity" | "g_nondecreasing" | "ratio_nondecreasing"
    x_left: float
    x_right: float
    g_left: float
    g_right: float


@dataclass(frozen=True)
class MembershipResult:
    ok: bool
    violation: MembershipViolation | None = None


def membership_check(w: GWeight, grid) -> MembershipResult:
    """Verify g > 0, g non-decreasing and x/g(x) non-decreasing along a grid.

    The grid must be strictly increasing and positive. Violations are data,
    not errors: the first offending knot pair is reported. Both monotonicity
    checks allow a relative slack of MEMBERSHIP_REL_TOL, because analytically
    constant stretches (the lower envelope below its kink, say) wobble by an
    ulp when recomputed at different arguments.
    """
    grid = np.asarray(grid, dtype=np.float64).ravel()
    if grid.size == 0:
        raise DomainError("membership grid must be non-empty")
    if grid[0] <= 0 or np.any(np.diff(grid) <= 0):
        raise DomainError("membership grid must be strictly increasing and positive")
    gs = np.array([g_eval(w, x) for x in grid])

    bad = np.flatnonzero(gs <= 0)
    if bad.size:
        i = int(bad[0])
        j = max(i - 1, 0)
        return MembershipResult(False, MembershipViolation(
            "positivity", float(grid[j]), float(grid[i]), float(gs[j]), float(gs[i])))

    shrink = 1.0 - MEMBERSHIP_REL_TOL
    for i in range(grid.size - 1):
        if gs[i + 1] < gs[i] * shrink:
            return MembershipResult(False, MembershipViolation(
                "g_nondecreasing", float(grid[i]), float(grid[i + 1]),
                float(gs[i]), float(gs[i + 1])))
        if grid[i + 1] / gs[i + 1] < (grid[i] / gs[i]) * shrink:
            return MembershipResult(False, MembershipViolation(
                "ratio_nondecreasing", float(grid[i]), float(grid[i + 1]),
                float(gs[i]), float(gs[i + 1])))
    return MembershipResult(True, None)


def sandwich_check(w: GWeight, x: float, a: float) -> tuple[float, float, float, bool]:
    """Evaluate min(1,|x|/a) <= g(x)/g(a) <= max(1,|x|/a).

    Returns (lower, mid, upper, holds). Equality cases are accepted with a
    relative slack of SANDWICH_REL_TOL: at equality the two sides are the
    same quantity computed along different floating routes, and for ratios
    of order 1e6 one ulp already exceeds any fixed absolute tolerance.
    """
    if x == 0 or not np.isfinite(x):
        raise DomainError(f"sandwich_check requires x != 0, got {x!r}")
    if not a > 0:
        raise DomainError(f"sandwich_check requires a > 0, got {a!r}")
    ga = g_eval(w, a)
    if not ga > 0:
        raise DomainError(f"g(a) must be positive, got {ga!r}")
    mid = g_eval(w, x) / ga
    ratio = abs(x) / a
    lower = min(1.0, ratio)
    upper = max(1.0, ratio)
    slack_lo = SANDWICH_REL_TOL * max(1.0, abs(lower))
    slack_hi = SANDWICH_REL_TOL * max(1.0, abs(upper))
    holds = (lower - slack_lo <= mid) and (mid <= upper + slack_hi)
    return lower, mid, upper, holds
