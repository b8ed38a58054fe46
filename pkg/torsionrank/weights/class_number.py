"""Torsion-weighted class numbers ``H_G(a, p)`` and their moments."""

__all__ = [
    "ClassNumberRow",
    "class_numbers",
    "moment_sum",
    "hurwitz_H",
    "N_n",
    "hurwitz_relation",
    "fit_moment_constants",
]

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Dict, Iterable, Iterator, Tuple, Union

import numpy as np

from ..arithmetic import PrimeModulus, modulus
from ..core.exceptions import InvalidDiscriminantError, UnsupportedGroupError
from ..core.inform import get_logger
from ..curves import local_tables
from ..torsion import TorsionGroup
from .weight_table import build_weight_table

logger = get_logger(__name__)


@dataclass(frozen=True)
class ClassNumberRow:
    """``H[a]``: total weight of the nonsingular ``J`` with Frobenius trace ``a``.

    Only traces inside the Hasse interval appear; every other trace has weight 0.

    """

    G: TorsionGroup
    p: int
    H: Dict[int, int] = field(repr=False)

    def __getitem__(self, a: int) -> int:
        return self.H.get(a, 0)

    @property
    def total(self) -> int:
        return sum(self.H.values())

    def moment(self, R: int, /) -> int:
        return sum(a**R * h for a, h in self.H.items())

    def rows(self) -> Iterator[Tuple[int, int]]:
        """``(a, H[a])`` in increasing trace."""
        return iter(sorted(self.H.items()))


def class_numbers(
    G: Union[TorsionGroup, str], p: Union[int, PrimeModulus], /
) -> ClassNumberRow:
    """Sum the weight table by trace over nonsingular models.

    Examples
    --------
    >>> torsionrank.weights.class_numbers("2", 7).total
    36

    """
    table = build_weight_table(G, p)
    p = table.p
    local = local_tables(p)
    good = ~local.singular
    bound = isqrt(4 * p)
    traces = local.traces[good] + bound
    counts = np.bincount(traces, weights=table.w[good], minlength=2 * bound + 1)
    H = {a - bound: int(round(h)) for a, h in enumerate(counts) if h}
    return ClassNumberRow(table.G, p, H)


def moment_sum(
    G: Union[TorsionGroup, str], p: Union[int, PrimeModulus], R: int, /
) -> int:
    """Exact ``sum_a a^R H_G(a, p)``."""
    if R < 0:
        raise ValueError(f"Moment order must be nonnegative, got {R}.")
    return class_numbers(G, p).moment(R)


@lru_cache(maxsize=4096)
def hurwitz_H(D: int, /) -> Fraction:
    """Hurwitz class number of the negative discriminant ``D``.

    Counts reduced forms ``(a, b, c)``, ``b^2 - 4ac = D``, non-primitive ones
    included, weighting multiples of ``x^2 + y^2`` by 1/2 and of ``x^2 + xy + y^2``
    by 1/3.

    Raises
    ------
    InvalidDiscriminantError
        If ``D >= 0`` or ``D`` is 2 or 3 mod 4.

    Examples
    --------
    >>> torsionrank.weights.hurwitz_H(-3), torsionrank.weights.hurwitz_H(-23)
    (Fraction(1, 3), Fraction(3, 1))

    """
    if D >= 0 or D % 4 not in (0, 1):
        raise InvalidDiscriminantError(f"{D} is not a negative discriminant.")
    total = Fraction(0)
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            numerator = b * b - D
            if numerator % (4 * a):
                continue
            c = numerator // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if a == b == c:
                total += Fraction(1, 3)
            elif b == 0 and a == c:
                total += Fraction(1, 2)
            else:
                total += 1
        a += 1
    return total


def N_n(
    G: Union[TorsionGroup, str], a: int, p: Union[int, PrimeModulus], /
) -> Fraction:
    """Weighted count of curves over ``F_p`` with trace ``a`` containing ``G``.

    ``Z/2``: ``H(a^2 - 4p)`` when ``a = p + 1 (mod 2)``. ``2x2``: ``H((a^2 - 4p)/4)``
    when ``a = p + 1 (mod 4)``. Zero otherwise.

    """
    G = TorsionGroup.parse(G)
    p = modulus(p)
    if a * a >= 4 * p:
        return Fraction(0)
    if G.label == "2":
        return hurwitz_H(a * a - 4 * p) if (a - p - 1) % 2 == 0 else Fraction(0)
    if G.label == "2x2":
        if p % 2 == 1 and (a - p - 1) % 4 == 0:
            return hurwitz_H((a * a - 4 * p) // 4)
        return Fraction(0)
    raise UnsupportedGroupError(f"No class number count stored for {G}.")


def hurwitz_relation(
    G: Union[TorsionGroup, str], p: Union[int, PrimeModulus], /
) -> Dict[int, bool]:
    """Check ``H_G(a, p)`` against its Hurwitz class number expression, per trace.

    ``H_2 = (p-1)/2 (N_2 + 2 N_2x2)`` and ``H_2x2 = 6 (p-1)/2 N_2x2``.

    """
    G = TorsionGroup.parse(G)
    p = modulus(p)
    if G.label not in ("2", "2x2"):
        raise UnsupportedGroupError(f"No Hurwitz relation stored for {G}.")
    row = class_numbers(G, p)
    bound = isqrt(4 * p)
    half = Fraction(p - 1, 2)
    result = {}
    for a in range(-bound, bound + 1):
        if G.label == "2":
            expected = half * (N_n("2", a, p) + 2 * N_n("2x2", a, p))
        else:
            expected = 6 * half * N_n("2x2", a, p)
        result[a] = expected == row[a]
    return result


def fit_moment_constants(
    G: Union[TorsionGroup, str], primes: Iterable[int], /
) -> Dict[int, float]:
    """Largest scaled moment errors over ``primes``.

    ``R = 0``: ``|M_0 - p^2| / p``; ``R = 1``: ``|M_1| / p^1.5``;
    ``R = 2``: ``|M_2 - p^3| / p^2.5``.

    """
    worst = {0: 0.0, 1: 0.0, 2: 0.0}
    for p in primes:
        row = class_numbers(G, p)
        errors = (
            abs(row.moment(0) - p**2) / p,
            abs(row.moment(1)) / p**1.5,
            abs(row.moment(2) - p**3) / p**2.5,
        )
        for R, error in enumerate(errors):
            worst[R] = max(worst[R], error)
    logger.debug(f"Scaled moment errors of {G}: {worst}")
    return worst
