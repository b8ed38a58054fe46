"""Exact moment and tail bounds for the distribution of analytic ranks."""

__all__ = ["moment_bound", "moment_bound_by_subsets", "TailBound", "tail_bound"]

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Union

from ..core.exceptions import VacuousThresholdError
from ..core.inform import get_logger
from ..torsion import TorsionGroup
from .sigma import sigma_for

logger = get_logger(__name__)

MAX_TAIL_ORDER = 64

HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)


def _pairing_term(size: int, paired: int) -> Fraction:
    """``(1/2)^(size - paired) paired! (1/6)^(paired/2)``."""
    return HALF ** (size - paired) * factorial(paired) * SIXTH ** (paired // 2)


def moment_bound(G: Union[TorsionGroup, str], n: int, /) -> Fraction:
    """Upper bound of the ``n``-th centred moment of the number of low-lying zeros.

    Sums over subsets ``S`` of ``{1..n}`` and even ``S2`` inside ``S`` grouped by
    sizes ``(s, k)``, with ``C(n, s) C(s, k)`` subsets of each size.

    Examples
    --------
    >>> torsionrank.rank_bounds.moment_bound("2", 1)
    Fraction(19, 2)

    """
    if n < 1:
        raise ValueError(f"Moment order must be positive, got n={n}.")
    inverse = 1 / sigma_for(G, n)
    total = Fraction(0)
    for s in range(n + 1):
        for k in range(0, s + 1, 2):
            total += comb(n, s) * comb(s, k) * inverse ** (n - s) * _pairing_term(s, k)
    return total


def moment_bound_by_subsets(G: Union[TorsionGroup, str], n: int, /) -> Fraction:
    """:func:`moment_bound` by explicit enumeration of ``S`` and ``S2``."""
    if n < 1:
        raise ValueError(f"Moment order must be positive, got n={n}.")
    inverse = 1 / sigma_for(G, n)
    indices = range(n)
    total = Fraction(0)
    for s in range(n + 1):
        for S in itertools.combinations(indices, s):
            for k in range(0, s + 1, 2):
                for _ in itertools.combinations(S, k):
                    total += inverse ** (n - s) * _pairing_term(s, k)
    return total


@dataclass(frozen=True)
class TailBound:
    """Bound on the proportion of curves of rank at least ``threshold``."""

    threshold: Fraction
    bound: Fraction
    n: int
    C: Fraction

    def __float__(self) -> float:
        return float(self.bound)


def _even_moment(n: int) -> Fraction:
    return sum(
        (comb(2 * n, 2 * k) * HALF ** (2 * n - 2 * k) * factorial(2 * k) * SIXTH**k)
        for k in range(n + 1)
    )


def tail_bound(
    G: Union[TorsionGroup, str], a: Union[int, float, Fraction], /
) -> TailBound:
    """Chebyshev-type bound from the ``2n``-th moment, minimised over
    ``n <= 64`` with ``C = a sigma_2n - 1``.

    Raises
    ------
    VacuousThresholdError
        If ``C <= 0`` for every ``n``.

    Examples
    --------
    >>> float(torsionrank.rank_bounds.tail_bound("2", 23))
    0.023333333333333334

    """
    a = Fraction(a)
    best = None
    for n in range(1, MAX_TAIL_ORDER + 1):
        sigma = sigma_for(G, 2 * n)
        C = a * sigma - 1
        if C <= 0:
            break
        value = _even_moment(n) / (C / sigma) ** (2 * n)
        if best is None or value < best.bound:
            best = TailBound(a, value, n, C)
    if best is None:
        raise VacuousThresholdError(
            f"Threshold {a} is at most 1/sigma_2 = {1 / sigma_for(G, 2)} for {G}."
        )
    logger.debug(f"Tail bound at {a}: {float(best.bound):.6g} with n={best.n}")
    return best
