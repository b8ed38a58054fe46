"""Empirical local densities of a census against their predicted values."""

__all__ = [
    "LocalCondition",
    "DensityRow",
    "JointDensity",
    "predicted_density",
    "local_density",
    "joint_density",
    "tolerance",
]

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from ..curves import ADDITIVE, GOOD, NONSPLIT, SPLIT, local_tables
from ..torsion import TorsionGroup
from ..weights import build_weight_table, class_numbers
from .enumeration import CensusResult

KINDS = ("good", "mult", "split", "nonsplit", "addi", "semistable", "trace")


@dataclass(frozen=True)
class LocalCondition:
    """Condition on the reduction of a curve at one prime.

    ``kind`` is one of ``good``, ``mult``, ``split``, ``nonsplit``, ``addi``,
    ``semistable`` or ``trace``; the last one carries the Frobenius trace ``a``.

    Examples
    --------
    >>> torsionrank.census.LocalCondition.parse("trace:-3")
    LocalCondition(kind='trace', a=-3)

    """

    kind: str
    a: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"Unknown local condition {self.kind!r}.")
        if (self.kind == "trace") is (self.a is None):
            raise ValueError("Only the trace condition carries a trace value.")

    @classmethod
    def parse(cls, text: Union[str, "LocalCondition"], /) -> "LocalCondition":
        if isinstance(text, LocalCondition):
            return text
        kind, _, a = str(text).strip().partition(":")
        return cls(kind, int(a) if a else None)

    def __str__(self) -> str:
        return self.kind if self.a is None else f"{self.kind}:{self.a}"

    def mask(self, codes: np.ndarray, traces: np.ndarray) -> np.ndarray:
        """Elementwise test on reduction codes and traces."""
        if self.kind == "good":
            return codes == GOOD
        if self.kind == "mult":
            return (codes == SPLIT) | (codes == NONSPLIT)
        if self.kind == "split":
            return codes == SPLIT
        if self.kind == "nonsplit":
            return codes == NONSPLIT
        if self.kind == "addi":
            return codes == ADDITIVE
        if self.kind == "semistable":
            return codes != ADDITIVE
        return (codes == GOOD) & (traces == self.a)


def tolerance(count: int, /) -> float:
    """Statistical tolerance ``3 / sqrt(count)``."""
    return 3 / math.sqrt(max(count, 1))


@lru_cache(maxsize=1024)
def _weight_of(label: str, p: int, condition: LocalCondition) -> int:
    """Total weight of the ``J`` mod ``p`` satisfying the condition."""
    if condition.kind == "trace":
        return class_numbers(label, p)[condition.a]
    local = local_tables(p)
    w = build_weight_table(label, p).w
    return int(w[condition.mask(local.codes, local.traces)].sum())


def predicted_density(
    G: Union[TorsionGroup, str], p: int, LC: Union[LocalCondition, str], /
) -> float:
    """Limiting proportion of ``E_G(X)`` with the local condition at ``p``.

    Groups of order at most 4 (and the trivial group): a condition ``LC`` away from
    additive reduction has density ``W_LC / p^2 * F`` with
    ``F = p^(12/d) / (p^(12/d) - 1)``; additive reduction has
    ``(1/p^2 - p^(-12/d)) F``. Larger groups: ``W'_LC / (p^2 - 1)``, where ``W'``
    leaves out the parameter ``(0, 0)``.

    Examples
    --------
    >>> round(torsionrank.census.predicted_density("2", 5, "good"), 6)
    0.640041

    """
    G = TorsionGroup.parse(G)
    LC = LocalCondition.parse(LC)
    if p < 5:
        raise ValueError(f"Local densities are tabulated for p >= 5, got {p}.")
    if LC.kind == "semistable":
        return 1.0 - predicted_density(G, p, "addi")

    if G.is_large:
        weight = _weight_of(G.label, p, LC)
        if LC.kind == "addi":
            weight -= 1
        return weight / (p * p - 1)

    q = float(p) ** (12 / float(G.d))
    F = q / (q - 1)
    if LC.kind == "addi":
        return (1 / p**2 - 1 / q) * F
    return _weight_of(G.label, p, LC) / p**2 * F


@dataclass(frozen=True)
class DensityRow:
    """One local-density comparison."""

    G: TorsionGroup
    X: int
    p: int
    condition: LocalCondition
    count: int
    density: float
    predicted: float

    @property
    def deviation(self) -> float:
        return abs(self.density - self.predicted)

    @property
    def passed(self) -> bool:
        return self.deviation <= tolerance(self.count)


def local_density(
    census: CensusResult, p: int, LC: Union[LocalCondition, str], /
) -> DensityRow:
    """Count and proportion of the census with the condition at ``p``, next to the
    prediction.

    Examples
    --------
    >>> census = torsionrank.census.enumerate_census("2", 10**6)
    >>> row = torsionrank.census.local_density(census, 5, "good")
    >>> row.passed
    True

    """
    LC = LocalCondition.parse(LC)
    mask = LC.mask(census.local_codes(p), census.local_traces(p))
    count = int(mask.sum())
    density = count / len(census) if len(census) else 0.0
    return DensityRow(
        census.G,
        census.X,
        p,
        LC,
        count,
        density,
        predicted_density(census.G, p, LC),
    )


@dataclass(frozen=True)
class JointDensity:
    """Joint proportion of several local conditions and the product of their
    predicted marginals."""

    conditions: Tuple[Tuple[int, LocalCondition], ...]
    count: int
    density: float
    product: float
    empirical_product: float

    @property
    def passed(self) -> bool:
        return abs(self.density - self.product) <= tolerance(self.count)


def joint_density(
    census: CensusResult, conditions: Sequence[Tuple[int, Union[LocalCondition, str]]]
) -> JointDensity:
    """Proportion of the census satisfying every ``(p_k, LC_k)``.

    Raises
    ------
    ValueError
        If the primes are not distinct.

    """
    parsed = tuple((int(p), LocalCondition.parse(LC)) for p, LC in conditions)
    primes = [p for p, _ in parsed]
    if len(set(primes)) != len(primes):
        raise ValueError(f"Primes must be distinct, got {primes}.")
    mask = np.ones(len(census), dtype=bool)
    product = empirical = 1.0
    for p, LC in parsed:
        single = LC.mask(census.local_codes(p), census.local_traces(p))
        mask &= single
        product *= predicted_density(census.G, p, LC)
        empirical *= single.mean() if len(census) else 0.0
    count = int(mask.sum())
    density = count / len(census) if len(census) else 0.0
    return JointDensity(parsed, count, density, product, float(empirical))
