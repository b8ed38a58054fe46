"""Preimage counts ``|W_{G,J}|`` of the model polynomials modulo p."""

__all__ = [
    "WeightTable",
    "build_weight_table",
    "singular_weight_sum",
    "expected_singular_weight_sum",
    "split_bias_sum",
    "split_weight_sum",
    "admissible_primes",
    "singular_mask",
]

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Iterator, List, Tuple, Union

import numpy as np

from ..arithmetic import PrimeModulus, QuadExtElement, is_cube, modulus
from ..core.exceptions import UnsupportedGroupError
from ..core.inform import get_logger
from ..core.security import map_stripes, stripes
from ..curves import SPLIT, local_tables
from ..torsion import TorsionGroup, model_polys

logger = get_logger(__name__)

GAMMA_7 = (4 * 637, 4 * 147)
"""``4(637 + 147 sqrt(-3))`` as ``(u, v)``."""
GAMMA_9 = (4 * -9, 4 * 3)
"""``4(-9 + 3 sqrt(-3))``; its conjugate has the same cube class."""


@dataclass(frozen=True)
class WeightTable:
    """``w[A, B] = #{I in (Z/pZ)^2 : (f_G, g_G)(I) = (A, B) mod p}``.

    Examples
    --------
    >>> table = torsionrank.weights.build_weight_table("7", 5)
    >>> table[2, 1], table[2, 4]
    (0, 12)

    """

    G: TorsionGroup
    p: int
    w: np.ndarray

    def __getitem__(self, J: Tuple[int, int]) -> int:
        A, B = J
        return int(self.w[A % self.p, B % self.p])

    @property
    def total(self) -> int:
        return int(self.w.sum())

    @property
    def support(self) -> np.ndarray:
        """Boolean mask of the ``J`` hit by at least one ``I``."""
        return self.w > 0

    def rows(self) -> Iterator[Tuple[int, int, int]]:
        """``(A, B, weight)`` of every nonzero entry, sorted by ``(A, B)``."""
        for A, B in zip(*np.nonzero(self.w)):
            yield int(A), int(B), int(self.w[A, B])


def _stripe_counts(label: str, p: int, a0: int, a1: int) -> np.ndarray:
    a, b = np.meshgrid(
        np.arange(a0, a1, dtype=np.int64), np.arange(p, dtype=np.int64), indexing="ij"
    )
    A, B = model_polys(label).mod(a, b, p)
    return np.bincount((A * p + B).ravel(), minlength=p * p)


@lru_cache(maxsize=256)
def _weights(label: str, p: int, workers: int) -> np.ndarray:
    tasks = [(label, p, a0, a1) for a0, a1 in stripes(0, p, workers)]
    counts = map_stripes(_stripe_counts, tasks, workers)
    w = np.sum(counts, axis=0).reshape(p, p)
    w.setflags(write=False)
    return w


def build_weight_table(
    G: Union[TorsionGroup, str], p: Union[int, PrimeModulus], /, workers: int = 1
) -> WeightTable:
    """Count preimages of every ``J`` under ``I -> (f_G(I), g_G(I)) mod p``.

    For ``2x2`` the quarter in the model polynomials is inverted mod ``p``, so the
    table runs over all of ``(Z/pZ)^2`` rather than the ``a = b mod 2`` lattice.

    Parameters
    ----------
    G
        Torsion group; the trivial group gives the identity map.
    p
        Prime, at least 5.
    workers
        Processes sharing the ``I`` grid, split by stripes of ``a``.

    """
    G = TorsionGroup.parse(G)
    p = PrimeModulus(modulus(p)).p
    logger.debug(f"Weight table of {G} at p={p}")
    return WeightTable(G, p, _weights(G.label, p, workers))


@lru_cache(maxsize=256)
def singular_mask(p: int, /) -> np.ndarray:
    """``mask[A, B]`` is true iff ``4A^3 + 27B^2 = 0 mod p``."""
    A, B = np.meshgrid(np.arange(p, dtype=np.int64), np.arange(p), indexing="ij")
    mask = (4 * (A * A % p) * A + 27 * (B * B % p)) % p == 0
    mask.setflags(write=False)
    return mask


def singular_weight_sum(
    G: Union[TorsionGroup, str], p: Union[int, PrimeModulus], /
) -> int:
    """Total weight over the singular ``J``.

    Examples
    --------
    >>> torsionrank.weights.singular_weight_sum("2", 7)
    13

    """
    table = build_weight_table(G, p)
    return int(table.w[singular_mask(table.p)].sum())


def admissible_primes(
    G: Union[TorsionGroup, str], primes: Iterable[int], /
) -> List[int]:
    """Primes at which the closed-form singular sum of ``G`` is stated.

    Excludes ``p < 5``, primes dividing ``|G|``, and ``p < 11`` for ``2x8``.

    """
    G = TorsionGroup.parse(G)
    minimum = 11 if G.label == "2x8" else 5
    return [p for p in primes if p >= minimum and gcd(p, G.order) == 1]


def _cube_class(gamma: Tuple[int, int], p: int) -> bool:
    return is_cube(QuadExtElement(gamma[0], gamma[1], p), p)


def _slope(G: TorsionGroup, p: int) -> int:
    label = G.label
    if label == "0":
        return 1
    if label in ("2", "3"):
        return 2
    if label in ("4", "2x2"):
        return 3
    if label in ("6", "2x4"):
        return 4
    if label == "2x6":
        return 6
    if label == "5":
        return 4 if p % 5 in (1, 4) else 2
    if label == "10":
        return 8 if p % 5 in (1, 4) else 4
    if label == "8":
        return 6 if p % 8 in (1, 7) else 4
    if label == "12":
        return 10 if p % 12 == 1 else 6
    if label == "2x8":
        return {1: 10, 7: 8, 5: 6, 3: 4}[p % 8]
    if label == "7":
        return 6 if _cube_class(GAMMA_7, p) else 3
    if label == "9":
        cube = _cube_class(GAMMA_9, p)
        if p % 3 == 1:
            return 8 if cube else 5
        return 6 if cube else 3
    raise UnsupportedGroupError(f"No singular-sum row for {G}.")


def expected_singular_weight_sum(
    G: Union[TorsionGroup, str], p: Union[int, PrimeModulus], /
) -> int:
    """Closed form ``k p - (k - 1)`` of the singular weight sum.

    ``k`` depends on ``G`` and on the residue of ``p``; for ``Z/7`` and ``Z/9`` on
    whether ``gamma_7``, ``gamma_9`` are cubes in ``F_p[sqrt(-3)]``.

    Raises
    ------
    ValueError
        If ``p`` is not admissible for ``G``.

    Examples
    --------
    >>> torsionrank.weights.expected_singular_weight_sum("8", 7)
    37

    """
    G = TorsionGroup.parse(G)
    p = modulus(p)
    if not admissible_primes(G, [p]):
        raise ValueError(f"No closed-form singular sum for {G} at p={p}.")
    k = _slope(G, p)
    return k * p - (k - 1)


def _alpha_squares(p: int) -> np.ndarray:
    x = np.arange(1, p, dtype=np.int64)
    return np.unique(x * x % p)


def split_bias_sum(p: Union[int, PrimeModulus], /) -> int:
    """``Z/3`` weight on ``(-3 alpha^2, 2 alpha^3)`` summed over nonzero squares
    ``alpha``.

    Equals ``2(p-1)``, ``p-1`` or 0 for ``p = 1``, ``5 or 11``, ``7 (mod 12)``.

    """
    table = build_weight_table("3", p)
    p = table.p
    alpha = _alpha_squares(p)
    A = (-3 * alpha * alpha) % p
    B = (2 * alpha * alpha % p * alpha) % p
    return int(table.w[A, B].sum())


def split_weight_sum(p: Union[int, PrimeModulus], /) -> int:
    """``Z/3`` weight on the ``J`` whose reduction is split multiplicative."""
    table = build_weight_table("3", p)
    return int(table.w[local_tables(table.p).codes == SPLIT].sum())
