"""Deterministic maximization over scalar objectives and small families.

maximize_1d runs a fixed-density global scan followed by golden-section
refinement; the objectives here are not proven unimodal, so the scan
guards against secondary maxima. search_two_point drives the closed-form
minorant over p; search_general maximizes weighted deviations over small
parametric families of one-summand systems, enumerating the one-sided CDF
limits at the atoms exactly.
"""

import math
from dataclasses import dataclass

from .bounds import rhs_petrov, sup_weighted_deviation
from .distributions import (DiscreteDistribution, SummandSystem, abs_moment,
                            make_pinelis, make_two_point)
from .errors import DomainError
from .gclass import Constant
from .golden import DEFAULT_SCAN_POINTS, golden_max, scan_then_golden
from .minorants import ModulusParams, nagaev_bikelis_minorant

P_CLIP = 1e-6  # probability-domain clip; values at the clip are compared
               # against the exact small-p limit rather than extrapolated

FAMILIES = ("two_point_xy", "pinelis_xy", "three_point")
WEIGHTS = ("nagaev_bikelis", "bikelis_A", "petrov_constant_g")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one deterministic search."""

    argmax: tuple[float, ...]
    value: float
    bracket: float
    evaluations: int
    converged: bool

    def to_dict(self) -> dict:
        return {
            "argmax": list(self.argmax),
            "value": self.value,
            "bracket": self.bracket,
            "evaluations": self.evaluations,
            "converged": self.converged,
        }


def maximize_1d(objective, lo: float, hi: float, tol: float,
                scan_points: int = DEFAULT_SCAN_POINTS) -> SearchResult:
    """Coarse scan on scan_points uniform points, then golden refinement of
    the best cell down to width tol. Deterministic; raises EvaluationError
    with the offending point if the objective goes non-finite."""
    x, value, width, evals, converged = scan_then_golden(
        objective, lo, hi, tol, scan_points=scan_points)
    return SearchResult(
        argmax=(x,), value=value, bracket=width,
        evaluations=evals, converged=converged)


def search_two_point(params: ModulusParams, tol: float = 1e-10) -> SearchResult:
    """Maximize the two-point minorant over p in the clipped open interval.

    For delta in (0,1] with s=0 the argmax is interior; for delta=0 or
    s > 0 the scan pushes to the small-p boundary, where the result should
    be read against limit_minorant.
    """
    return maximize_1d(
        lambda p: nagaev_bikelis_minorant(p, params),
        P_CLIP, 1.0 - P_CLIP, tol)


# ---------------------------------------------------------------------------
# family searches
# ---------------------------------------------------------------------------

def _build_family_member(family: str, point: tuple[float, ...]) -> DiscreteDistribution:
    if family == "two_point_xy":
        return make_two_point(point[0])
    if family == "pinelis_xy":
        return make_pinelis(point[0])
    if family == "three_point":
        p, m = point
        base = make_two_point(p)
        if m <= 0.0:
            return base
        values = [float(base.values[0]), 0.0, float(base.values[1])]
        probs = [float(base.probs[0]) * (1.0 - m), m, float(base.probs[1]) * (1.0 - m)]
        return DiscreteDistribution.from_atoms(zip(values, probs))
    raise DomainError(f"unknown family {family!r}; expected one of {FAMILIES}")


def _family_box(family: str) -> list[tuple[float, float]]:
    if family in ("two_point_xy", "pinelis_xy"):
        return [(P_CLIP, 1.0 - P_CLIP)]
    if family == "three_point":
        return [(P_CLIP, 1.0 - P_CLIP), (0.0, 0.98)]
    raise DomainError(f"unknown family {family!r}; expected one of {FAMILIES}")


def _objective_for(weight: str, params: ModulusParams):
    """Map a weight name to a scalar functional of one distribution.

    Every objective is scale-free: the deviation is taken on the normalized
    sum and moment ratios are normalized by powers of the standard
    deviation, so equal shapes at different scales score identically.
    """
    if weight == "bikelis_A":
        def objective(d: DiscreteDistribution) -> float:
            system = SummandSystem((d,))
            value, _ = sup_weighted_deviation(system, lambda x: (1.0 + abs(x)) ** 2)
            return value
        return objective

    if weight == "petrov_constant_g":
        # same functional as bikelis_A, but routed through the Petrov
        # evaluator with the unit weight (whose coefficient is (1+|x|)^-2)
        unit = Constant()

        def objective(d: DiscreteDistribution) -> float:
            system = SummandSystem((d,))
            value, _ = sup_weighted_deviation(
                system, lambda x: 1.0 / rhs_petrov(system, x, unit))
            return value
        return objective

    if weight == "nagaev_bikelis":
        r = 2.0 + params.delta

        def objective(d: DiscreteDistribution) -> float:
            system = SummandSystem((d,))
            sigma_pow = system.bn2 ** (r / 2.0)
            norm = sigma_pow / (abs_moment(d, r) + params.s * sigma_pow)
            value, _ = sup_weighted_deviation(system, lambda x: 1.0 + abs(x) ** r)
            return value * norm
        return objective

    raise DomainError(f"unknown weight {weight!r}; expected one of {WEIGHTS}")


def search_general(family: str, params: ModulusParams, weight: str,
                   tol: float = 1e-8,
                   coarse: tuple[int, ...] | None = None) -> SearchResult:
    """Maximize a weighted deviation over a parametric family.

    A full coarse grid over the family box locates the basin; golden
    refinement then sweeps one coordinate at a time (three rounds). The
    inner supremum over x enumerates atom one-sided limits exactly and
    polishes the inter-atom segments (see sup_weighted_deviation).
    """
    box = _family_box(family)
    objective_d = _objective_for(weight, params)
    evals = 0

    def objective(point: tuple[float, ...]) -> float:
        nonlocal evals
        evals += 1
        return objective_d(_build_family_member(family, point))

    if coarse is None:
        coarse = (512,) if len(box) == 1 else (96, 16)
    if len(coarse) != len(box):
        raise DomainError(f"coarse must give one density per coordinate, got {coarse!r}")

    grids = []
    for (lo, hi), n in zip(box, coarse):
        grids.append([lo + (hi - lo) * i / (n - 1) for i in range(n)])
    best_point: tuple[float, ...] | None = None
    best_val = -math.inf

    def scan(prefix: tuple[float, ...], dim: int):
        nonlocal best_point, best_val
        if dim == len(grids):
            val = objective(prefix)
            if val > best_val:
                best_val, best_point = val, prefix
            return
        for v in grids[dim]:
            scan(prefix + (v,), dim + 1)

    scan((), 0)
    assert best_point is not None

    # per-coordinate golden refinement around the incumbent; each accepted
    # improvement moves exactly the coordinate that produced it, so the
    # incumbent value always belongs to the current point
    point = list(best_point)
    width = max(hi - lo for lo, hi in box)
    for _ in range(3):
        for k, ((lo, hi), n) in enumerate(zip(box, coarse)):
            cell = (hi - lo) / (n - 1)
            c_lo = max(lo, point[k] - cell)
            c_hi = min(hi, point[k] + cell)
            if c_hi <= c_lo:
                continue

            def line(v: float, k=k) -> float:
                trial = list(point)
                trial[k] = v
                return objective(tuple(trial))

            x_ref, v_ref, width, _ = golden_max(line, c_lo, c_hi, tol)
            if v_ref > best_val:
                best_val = v_ref
                point[k] = x_ref

    final = tuple(point)
    final_val = objective(final)  # recompute so value matches argmax exactly
    return SearchResult(
        argmax=final, value=final_val, bracket=width,
        evaluations=evals, converged=width <= tol)
