"""Exact finite discrete distributions and independent summand systems.

A DiscreteDistribution is a finite atomic law given by sorted atom values
and strictly positive probabilities summing to one. Construction sorts the
atoms and merges values closer than ATOM_MERGE_TOL (floating sums of
distinct atoms can collide only at representable coincidences, so a tight
absolute tolerance never hides a genuine atom).

A SummandSystem is an ordered list of independent zero-mean summands; it
caches the per-summand variances and their sum. The law of the full sum is
obtained by exact convolution.
"""

from dataclasses import dataclass, field
from functools import lru_cache
import json
from typing import Iterable, Literal

import numpy as np

from .errors import CapacityError, DegenerateDistributionError, DomainError

ATOM_MERGE_TOL = 1e-12
PROB_SUM_TOL = 1e-12
MEAN_ZERO_TOL = 1e-12
DEFAULT_ATOM_CAP = 10**6

CdfSide = Literal["strict", "weak"]
MomentRegion = Literal["inside", "outside"]


@dataclass(frozen=True, eq=False)
class DiscreteDistribution:
    """Finite atomic probability law: values strictly increasing, probs > 0."""

    values: np.ndarray
    probs: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64).ravel()
        probs = np.asarray(self.probs, dtype=np.float64).ravel()
        if values.size == 0:
            raise DomainError("a distribution needs at least one atom")
        if values.shape != probs.shape:
            raise DomainError("values and probs must have equal length")
        if not np.all(np.isfinite(values)) or not np.all(np.isfinite(probs)):
            raise DomainError("atom values and probabilities must be finite")
        if np.any(probs <= 0.0):
            raise DomainError("every atom probability must be positive")

        order = np.argsort(values, kind="stable")
        values = values[order]
        probs = probs[order]
        values, probs = _merge_close_atoms(values, probs)

        total = float(probs.sum())
        if abs(total - 1.0) > PROB_SUM_TOL:
            raise DomainError(f"probabilities must sum to 1 within {PROB_SUM_TOL}, got {total!r}")

        values.setflags(write=False)
        probs.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "probs", probs)

    def __len__(self) -> int:
        return self.values.size

    @property
    def mean(self) -> float:
        return float(self.values @ self.probs)

    @property
    def variance(self) -> float:
        centered = self.values - self.mean
        return float((centered * centered) @ self.probs)

    def atoms(self) -> list[tuple[float, float]]:
        return [(float(v), float(p)) for v, p in zip(self.values, self.probs)]

    def to_json(self) -> str:
        return json.dumps({"atoms": [[v, p] for v, p in self.atoms()]})

    @classmethod
    def from_atoms(cls, atoms: Iterable[tuple[float, float]]) -> "DiscreteDistribution":
        pairs = list(atoms)
        return cls(np.array([v for v, _ in pairs]), np.array([p for _, p in pairs]))

    @classmethod
    def from_json_obj(cls, obj) -> "DiscreteDistribution":
        if not isinstance(obj, dict) or "atoms" not in obj:
            raise DomainError('distribution JSON must be an object with an "atoms" key')
        atoms = obj["atoms"]
        if not isinstance(atoms, list) or any(len(a) != 2 for a in atoms):
            raise DomainError('"atoms" must be a list of [value, prob] pairs')
        return cls.from_atoms((float(v), float(p)) for v, p in atoms)


def _merge_close_atoms(values: np.ndarray, probs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Merge sorted atoms whose values differ by at most ATOM_MERGE_TOL."""
    if values.size == 1:
        return values.copy(), probs.copy()
    boundaries = np.flatnonzero(np.diff(values) > ATOM_MERGE_TOL) + 1
    starts = np.concatenate(([0], boundaries))
    merged_p = np.add.reduceat(probs, starts)
    # probability-weighted representative value of each group
    merged_v = np.add.reduceat(values * probs, starts) / merged_p
    return merged_v, merged_p


def make_two_point(p: float) -> DiscreteDistribution:
    """Zero-mean unit-variance two-point law: mass p at sqrt(q/p), mass q at -sqrt(p/q)."""
    _check_open_unit(p)
    q = 1.0 - p
    return DiscreteDistribution(
        np.array([-np.sqrt(p / q), np.sqrt(q / p)]),
        np.array([q, p]),
    )


def make_pinelis(p: float) -> DiscreteDistribution:
    """Zero-mean two-point law with mass p at 1-p and mass 1-p at -p; variance p(1-p)."""
    _check_open_unit(p)
    return DiscreteDistribution(np.array([-p, 1.0 - p]), np.array([1.0 - p, p]))


def _check_open_unit(p: float) -> None:
    if not (isinstance(p, (int, float)) and 0.0 < p < 1.0):
        raise DomainError(f"p must lie strictly inside (0, 1), got {p!r}")


def standardize(d: DiscreteDistribution) -> DiscreteDistribution:
    """Map X to (X - EX)/sd(X). Raises on zero variance."""
    var = d.variance
    if var <= 0.0:
        raise DegenerateDistributionError("cannot standardize a zero-variance distribution")
    scale = 1.0 / np.sqrt(var)
    return DiscreteDistribution((d.values - d.mean) * scale, d.probs)


def convolve(a: DiscreteDistribution, b: DiscreteDistribution,
             atom_cap: int = DEFAULT_ATOM_CAP) -> DiscreteDistribution:
    """Law of the independent sum: all pairwise value sums with product masses."""
    n_out = len(a) * len(b)
    if n_out > atom_cap:
        raise CapacityError(
            f"convolution would produce {n_out} atoms, above the cap of {atom_cap}")
    sums = (a.values[:, None] + b.values[None, :]).ravel()
    masses = (a.probs[:, None] * b.probs[None, :]).ravel()
    return DiscreteDistribution(sums, masses)


def cdf(d: DiscreteDistribution, t: float, side: CdfSide = "strict") -> float:
    """P(X < t) for side="strict", P(X <= t) for side="weak"."""
    if side == "strict":
        idx = int(np.searchsorted(d.values, t, side="left"))
    elif side == "weak":
        idx = int(np.searchsorted(d.values, t, side="right"))
    else:
        raise DomainError(f"side must be 'strict' or 'weak', got {side!r}")
    return float(d.probs[:idx].sum())


def abs_moment(d: DiscreteDistribution, r: float) -> float:
    """E|X|^r for r >= 0 (0^0 counts as 1)."""
    if r < 0:
        raise DomainError(f"moment order must be >= 0, got {r!r}")
    return float(np.abs(d.values) ** r @ d.probs)


def truncated_moment(d: DiscreteDistribution, r: float, cutoff: float,
                     region: MomentRegion) -> float:
    """E|X|^r restricted to |X| <= cutoff ("inside") or |X| > cutoff ("outside").

    The boundary atom |X| = cutoff belongs to "inside", so the two regions
    partition the full moment exactly.
    """
    if r < 0:
        raise DomainError(f"moment order must be >= 0, got {r!r}")
    if not cutoff > 0:
        raise DomainError(f"cutoff must be positive, got {cutoff!r}")
    magnitude = np.abs(d.values)
    if region == "inside":
        mask = magnitude <= cutoff
    elif region == "outside":
        mask = magnitude > cutoff
    else:
        raise DomainError(f"region must be 'inside' or 'outside', got {region!r}")
    if not mask.any():
        return 0.0
    return float(magnitude[mask] ** r @ d.probs[mask])


@dataclass(frozen=True, eq=False)
class SummandSystem:
    """Independent zero-mean summands with positive total variance.

    Caches sigma2s (per-summand variances) and bn2 (their sum, the squared
    normalization). Summands with zero variance are rejected.
    """

    summands: tuple[DiscreteDistribution, ...]
    sigma2s: tuple[float, ...] = field(init=False)
    bn2: float = field(init=False)

    def __post_init__(self):
        summands = tuple(self.summands)
        if not summands:
            raise DomainError("a summand system needs at least one summand")
        sigma2s = []
        for k, d in enumerate(summands):
            if abs(d.mean) > MEAN_ZERO_TOL:
                raise DomainError(
                    f"summand {k} must have mean 0 within {MEAN_ZERO_TOL}, got {d.mean!r}")
            var = d.variance
            if var <= 0.0:
                raise DegenerateDistributionError(f"summand {k} has zero variance")
            sigma2s.append(var)
        object.__setattr__(self, "summands", summands)
        object.__setattr__(self, "sigma2s", tuple(sigma2s))
        object.__setattr__(self, "bn2", float(sum(sigma2s)))

    @property
    def n(self) -> int:
        return len(self.summands)

    @property
    def bn(self) -> float:
        return float(np.sqrt(self.bn2))

    def to_json(self) -> str:
        return json.dumps(
            {"summands": [{"atoms": [[v, p] for v, p in d.atoms()]} for d in self.summands]})

    @classmethod
    def from_json_obj(cls, obj) -> "SummandSystem":
        if not isinstance(obj, dict) or "summands" not in obj:
            raise DomainError('system JSON must be an object with a "summands" key')
        return cls(tuple(DiscreteDistribution.from_json_obj(s) for s in obj["summands"]))

    @classmethod
    def from_json(cls, text: str) -> "SummandSystem":
        return cls.from_json_obj(json.loads(text))


@lru_cache(maxsize=256)
def sum_law(system: SummandSystem) -> DiscreteDistribution:
    """Exact law of the full sum S = X_1 + ... + X_n (cached per system)."""
    law = system.summands[0]
    for d in system.summands[1:]:
        law = convolve(law, d)
    return law
