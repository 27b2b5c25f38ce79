"""Seeded randomized verification suites and their deterministic generator.

The generator is splitmix64: output k of stream `seed` is
mix64(seed + (k+1) * 0x9E3779B97F4A7C15) with the standard finalizer
(xor-shift 30, multiply 0xBF58476D1CE4E5B9, xor-shift 27, multiply
0x94D049BB133111EB, xor-shift 31). Uniform doubles take the top 53 bits.
It is counter-based, so identical seeds reproduce identical suites on any
platform or implementation language.

Random summand systems follow a fixed recipe: 1..5 summands, each with
2..4 atoms, values uniform on [-5, 5], probabilities from a symmetric
simplex draw (normalized exponentials), then the values are mean-centered.
Summands with variance below 1e-4 are redrawn.

Suites return (checks_run, findings); a finding is data, not an exception.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bounds import (REFERENCE, delta_n, evaluate_bound, rhs_bikelis_integral,
                     rhs_bikelis_min, rhs_bikelis_split, rhs_nagaev_bikelis,
                     rhs_petrov)
from .distributions import DiscreteDistribution, SummandSystem
from .gclass import (Constant, LowerEnvelope, Power, Tabulated, UpperEnvelope,
                     sandwich_check)

FORMS_REL_TOL = 1e-12

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z &= _MASK64
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & _MASK64
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & _MASK64
    z ^= z >> 31
    return z


class SplitMix64:
    """Counter-based 64-bit generator; stream fully determined by the seed."""

    def __init__(self, seed: int, counter: int = 0):
        self._seed = seed & _MASK64
        self._counter = counter

    def next_u64(self) -> int:
        self._counter += 1
        return _mix64(self._seed + self._counter * _GAMMA)

    def uniform(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform_in(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.uniform()

    def log_uniform(self, lo_exp: float, hi_exp: float) -> float:
        return 10.0 ** self.uniform_in(lo_exp, hi_exp)

    def integer(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        return min(int(self.uniform() * n), n - 1)


def worker_count() -> int:
    """Worker cap from BE_NONUNIFORM_THREADS (0 or unset = auto)."""
    raw = os.environ.get("BE_NONUNIFORM_THREADS", "0")
    try:
        cap = int(raw)
    except ValueError:
        cap = 0
    if cap <= 0:
        cap = min(os.cpu_count() or 1, 8)
    return max(cap, 1)


def _ordered_map(fn, items):
    """Apply fn preserving order, fanning out to threads when allowed."""
    workers = worker_count()
    if workers == 1 or len(items) < 4:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class Finding:
    suite: str
    message: str
    context: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "message": self.message, "context": self.context}


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    checks: int
    findings: tuple[Finding, ...]
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.findings

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": self.checks,
            "ok": self.ok,
            "findings": [f.to_dict() for f in self.findings],
            "stats": self.stats,
        }


# ---------------------------------------------------------------------------
# seeded draws
# ---------------------------------------------------------------------------

def draw_summand(rng: SplitMix64) -> DiscreteDistribution:
    while True:
        m = 2 + rng.integer(3)
        values = np.array([rng.uniform_in(-5.0, 5.0) for _ in range(m)])
        exps = np.array([-np.log(1.0 - rng.uniform()) for _ in range(m)])
        probs = exps / exps.sum()
        values = values - float(values @ probs)
        d = DiscreteDistribution(values, probs)
        if d.variance >= 1e-4:
            return d


def draw_system(rng: SplitMix64) -> SummandSystem:
    n = 1 + rng.integer(5)
    return SummandSystem(tuple(draw_summand(rng) for _ in range(n)))


_TAB_KNOTS = np.geomspace(1e-6, 1e6, 25)


def draw_weight(rng: SplitMix64):
    """One random class member; tabulated members are built multiplicatively
    so that both knot monotonicity conditions hold by construction."""
    kind = rng.integer(5)
    if kind == 0:
        return Constant()
    if kind == 1:
        return Power(rng.uniform())
    if kind == 2:
        return LowerEnvelope(rng.log_uniform(-3.0, 3.0))
    if kind == 3:
        return UpperEnvelope(rng.log_uniform(-3.0, 3.0))
    gs = [rng.log_uniform(-2.0, 2.0)]
    for i in range(1, _TAB_KNOTS.size):
        ratio = _TAB_KNOTS[i] / _TAB_KNOTS[i - 1]
        gs.append(gs[-1] * ratio ** rng.uniform())
    return Tabulated(_TAB_KNOTS, np.array(gs))


def _rel_diff(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0.0 else abs(a - b) / scale


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def run_forms_suite(seed: int = 1, count: int = 1000, xs_per_system: int = 20) -> SuiteReport:
    """Bound-form identities on random systems: the min, split and integral
    forms agree to relative 1e-12, and the Petrov route with the lower
    envelope at (1+|x|) B_n reproduces the min form."""

    def one(index: int):
        rng = SplitMix64(seed, counter=index << 20)
        system = draw_system(rng)
        xs = [rng.uniform_in(-8.0, 8.0) for _ in range(xs_per_system)]
        local_findings = []
        worst = {"split": 0.0, "integral": 0.0, "petrov": 0.0}
        for x in xs:
            v_min = rhs_bikelis_min(system, x)
            v_split = rhs_bikelis_split(system, x)
            v_int = rhs_bikelis_integral(system, x)
            envelope = LowerEnvelope((1.0 + abs(x)) * system.bn)
            v_pet = rhs_petrov(system, x, envelope)
            for name, v in (("split", v_split), ("integral", v_int), ("petrov", v_pet)):
                err = _rel_diff(v_min, v)
                worst[name] = max(worst[name], err)
                if err > FORMS_REL_TOL:
                    local_findings.append(Finding(
                        "forms",
                        f"{name} form deviates from min form by rel {err:.3e}",
                        {"system_index": index, "x": x, "min": v_min, name: v}))
        return len(xs) * 3, local_findings, worst

    results = _ordered_map(one, list(range(count)))
    checks = sum(r[0] for r in results)
    findings = tuple(f for r in results for f in r[1])
    worst = {"split": 0.0, "integral": 0.0, "petrov": 0.0}
    for r in results:
        for name, err in r[2].items():
            worst[name] = max(worst[name], err)
    return SuiteReport("forms", checks, findings, {"worst_rel_diff": worst})


def run_sandwich_suite(seed: int = 1, count: int = 10000) -> SuiteReport:
    """Envelope inequality on random (kind, x, a) draws."""
    rng = SplitMix64(seed)
    findings = []
    worst_defect = 0.0
    for i in range(count):
        w = draw_weight(rng)
        x = rng.log_uniform(-6.0, 6.0) * (1.0 if rng.uniform() < 0.5 else -1.0)
        a = rng.log_uniform(-6.0, 6.0)
        lower, mid, upper, holds = sandwich_check(w, x, a)
        worst_defect = max(worst_defect,
                           (lower - mid) / max(1.0, abs(lower)),
                           (mid - upper) / max(1.0, abs(upper)))
        if not holds:
            findings.append(Finding(
                "sandwich",
                f"envelope inequality violated: {lower!r} <= {mid!r} <= {upper!r} fails",
                {"draw": i, "kind": type(w).__name__, "x": x, "a": a}))
    return SuiteReport("sandwich", count, tuple(findings),
                       {"worst_relative_defect": worst_defect})


def run_consistency_suite(seed: int = 1, count: int = 1000,
                          xs_per_system: int = 20) -> SuiteReport:
    """Published upper constants against exact deviations on random systems.

    Checks, with side="max" (valid at the one-sided limits because the rhs
    coefficients are continuous in x): the (1+|x|^(2+delta))-weighted bound
    with the published per-delta constant, the cubic-weight min-form bound
    with the universal constant, and the Petrov bound with the power weight
    under the same universal constant. Any violation is a finding.
    """

    def one(index: int):
        rng = SplitMix64(seed, counter=(index << 20) + (1 << 60))
        system = draw_system(rng)
        deltas = REFERENCE.deltas()
        delta = deltas[rng.integer(len(deltas))]
        xs = [rng.uniform_in(-8.0, 8.0) for _ in range(xs_per_system)]
        local_findings = []
        worst = {"nagaev_bikelis": 0.0, "bikelis_min": 0.0, "petrov_power": 0.0}
        k0 = REFERENCE.k0(delta)
        a_const = REFERENCE.a_general
        power = Power(delta)
        for x in xs:
            lhs = delta_n(system, x, "max")
            rows = (
                ("nagaev_bikelis", rhs_nagaev_bikelis(system, x, delta), k0),
                ("bikelis_min", rhs_bikelis_min(system, x), a_const),
                ("petrov_power", rhs_petrov(system, x, power), a_const),
            )
            for name, coeff, constant in rows:
                ev = evaluate_bound(x, lhs, coeff, constant)
                if ev.rhs > 0:
                    worst[name] = max(worst[name], ev.lhs / ev.rhs)
                if not ev.satisfied:
                    local_findings.append(Finding(
                        "consistency",
                        f"{name} bound violated: lhs {ev.lhs!r} > rhs {ev.rhs!r}",
                        {"system_index": index, "x": x, "delta": delta,
                         "constant": constant}))
        return len(xs) * 3, local_findings, worst

    results = _ordered_map(one, list(range(count)))
    checks = sum(r[0] for r in results)
    findings = tuple(f for r in results for f in r[1])
    worst = {}
    for r in results:
        for name, ratio in r[2].items():
            worst[name] = max(worst.get(name, 0.0), ratio)
    return SuiteReport("consistency", checks, findings,
                       {"worst_lhs_over_rhs": worst})


SUITES = {
    "forms": run_forms_suite,
    "sandwich": run_sandwich_suite,
    "consistency": run_consistency_suite,
}


def run_suite(name: str, seed: int = 1, count: int | None = None) -> list[SuiteReport]:
    """Run one named suite or all of them; returns a report per suite."""
    defaults = {"forms": 1000, "sandwich": 10000, "consistency": 1000}
    names = list(SUITES) if name == "all" else [name]
    reports = []
    for n in names:
        if n not in SUITES:
            raise KeyError(n)
        reports.append(SUITES[n](seed=seed, count=count if count else defaults[n]))
    return reports
