"""Consequences of the local density tables checked across several censuses."""

__all__ = [
    "CorollaryRow",
    "corollary_checks",
    "split_ratio_prediction",
    "TABULATED_SPLIT_RATIO",
]

import math
from dataclasses import dataclass
from typing import Iterable, List, Mapping

from ..core.inform import get_logger
from ..torsion import TorsionGroup
from ..weights import (
    admissible_primes,
    expected_singular_weight_sum,
    singular_weight_sum,
    split_weight_sum,
)
from .density import tolerance
from .enumeration import CensusResult

logger = get_logger(__name__)

TABULATED_SPLIT_RATIO = {1: 1.0, 5: 0.5, 7: 0.0, 11: 0.5}
"""Split to multiplicative ratio of ``Z/3`` keyed by ``p mod 12``, as tabulated with
the node convention ``alpha`` square."""


@dataclass(frozen=True)
class CorollaryRow:
    name: str
    G: str
    p: int
    measured: float
    expected: float
    tolerance: float
    note: str = ""

    @property
    def passed(self) -> bool:
        if math.isnan(self.measured):
            return False
        return abs(self.measured - self.expected) <= self.tolerance


def _fraction(census: CensusResult, p: int, kind: str) -> float:
    return census.tally(p)[kind] / len(census) if len(census) else math.nan


def _semistable_rows(census: CensusResult, primes: Iterable[int]):
    for p in primes:
        if census.G.order % p == 0:
            continue
        yield CorollaryRow(
            "semistable",
            census.G.label,
            p,
            _fraction(census, p, "semistable"),
            1 - 1 / p**2,
            tolerance(len(census)),
        )


def split_ratio_prediction(p: int, /) -> float:
    """Split share of the ``Z/3`` multiplicative weight at ``p``."""
    return split_weight_sum(p) / (singular_weight_sum("3", p) - 1)


def _split_rows(census: CensusResult, primes: Iterable[int]):
    for p in primes:
        if p == 3:
            continue
        tally = census.tally(p)
        measured = tally["split"] / tally["mult"] if tally["mult"] else math.nan
        yield CorollaryRow(
            "split-ratio",
            "3",
            p,
            measured,
            split_ratio_prediction(p),
            max(0.1, tolerance(tally["mult"])),
            f"tabulated={TABULATED_SPLIT_RATIO[p % 12]}",
        )


def _normalized_mult(census: CensusResult, p: int) -> float:
    fraction = _fraction(census, p, "mult")
    if census.G.is_large:
        return fraction
    q = float(p) ** (12 / float(census.G.d))
    return fraction * (q - 1) / q


def _is_favorable(G: TorsionGroup, p: int) -> bool:
    if not admissible_primes(G, [p]):
        return False
    k = (expected_singular_weight_sum(G, p) - 1) // (p - 1)
    return k == G.cusps


def _cusp_rows(group: List[CensusResult], primes: Iterable[int], name: str):
    if len(group) < 2:
        return
    reference = group[0]
    for p in primes:
        for census in group[1:]:
            if name == "cusp-ratio-large" and not (
                _is_favorable(census.G, p) and _is_favorable(reference.G, p)
            ):
                continue
            if census.G.order % p == 0 or reference.G.order % p == 0:
                continue
            base = _normalized_mult(reference, p)
            measured = _normalized_mult(census, p) / base if base else math.nan
            expected = census.G.cusps / reference.G.cusps
            spread = tolerance(census.tally(p)["mult"]) + tolerance(
                reference.tally(p)["mult"]
            )
            yield CorollaryRow(
                name,
                f"{census.G.label}:{reference.G.label}",
                p,
                measured,
                expected,
                expected * spread,
            )


def corollary_checks(
    censuses: Mapping[str, CensusResult], primes: Iterable[int]
) -> List[CorollaryRow]:
    """Semistable densities, the ``Z/3`` split ratio and the cusp-count ratios of
    multiplicative densities.

    Parameters
    ----------
    censuses
        Censuses keyed by group label, ideally at a common height.
    primes
        Primes ``p >= 5`` to check at.

    """
    primes = [p for p in primes if p >= 5]
    rows: List[CorollaryRow] = []
    ordered = sorted(
        censuses.values(), key=lambda c: (c.G.cusps, c.G.order, c.G.label)
    )
    small = [c for c in ordered if not c.G.is_large]
    large = [c for c in ordered if c.G.is_large]
    for census in small:
        rows.extend(_semistable_rows(census, primes))
    if "3" in censuses:
        rows.extend(_split_rows(censuses["3"], primes))
    rows.extend(_cusp_rows(small, primes, "cusp-ratio"))
    rows.extend(_cusp_rows(large, primes, "cusp-ratio-large"))
    failed = sum(not row.passed for row in rows)
    logger.info(f"Corollary checks: {len(rows) - failed} of {len(rows)} passed")
    return rows
