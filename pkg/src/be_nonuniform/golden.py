"""Deterministic scalar maximization: coarse scan plus golden-section refinement.

Internal helpers shared by the bound evaluators and the public optimizer
front-end. No randomness anywhere; identical inputs give bit-identical
results regardless of scheduling.
"""

import math

from .errors import DomainError, EvaluationError

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0  # 1/phi
INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0  # 1/phi^2
DEFAULT_SCAN_POINTS = 2048


def _probe(f, x: float) -> float:
    y = f(x)
    if not math.isfinite(y):
        raise EvaluationError(f"objective returned non-finite value {y!r} at {x!r}", x)
    return y


def golden_max(f, lo: float, hi: float, tol: float) -> tuple[float, float, float, int]:
    """Golden-section maximization on [lo, hi] down to bracket width tol.

    Returns (x_best, f_best, final_width, evaluations). The incumbent is the
    best point actually evaluated (bracket endpoints included), so the value
    never degrades as the bracket shrinks.
    """
    if not lo < hi:
        raise DomainError(f"need lo < hi, got [{lo!r}, {hi!r}]")
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    a, b = lo, hi
    evals = 0
    x_best, f_best = a, _probe(f, a)
    evals += 1
    fb_end = _probe(f, b)
    evals += 1
    if fb_end > f_best:
        x_best, f_best = b, fb_end

    h = b - a
    if h <= tol:
        return x_best, f_best, h, evals

    c = a + INV_PHI2 * h
    d = a + INV_PHI * h
    fc = _probe(f, c)
    fd = _probe(f, d)
    evals += 2
    while h > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + INV_PHI2 * h
            fc = _probe(f, c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + INV_PHI * h
            fd = _probe(f, d)
        evals += 1
    for x, y in ((c, fc), (d, fd)):
        if y > f_best:
            x_best, f_best = x, y
    return x_best, f_best, h, evals


def scan_then_golden(f, lo: float, hi: float, tol: float,
                     scan_points: int = DEFAULT_SCAN_POINTS) -> tuple[float, float, float, int, bool]:
    """Global coarse scan, then golden refinement around the best scan cell.

    The scan guards against multimodality; golden section then resolves the
    winning cell to width tol. Returns (x_best, f_best, width, evals,
    converged).
    """
    if not lo < hi:
        raise DomainError(f"need lo < hi, got [{lo!r}, {hi!r}]")
    if scan_points < 2:
        raise DomainError("scan needs at least two points")
    step = (hi - lo) / (scan_points - 1)
    best_i = 0
    best_f = -math.inf
    evals = 0
    for i in range(scan_points):
        x = lo + i * step
        y = _probe(f, x)
        evals += 1
        if y > best_f:
            best_i, best_f = i, y
    cell_lo = lo + max(best_i - 1, 0) * step
    cell_hi = lo + min(best_i + 1, scan_points - 1) * step
    x_best, f_best, width, g_evals = golden_max(f, cell_lo, cell_hi, tol)
    evals += g_evals
    if best_f > f_best:
        x_best, f_best = lo + best_i * step, best_f
    return x_best, f_best, width, evals, width <= tol
