"""Curves over Q in short Weierstrass form and their local data."""

__all__ = [
    "CurveQ",
    "Reduction",
    "LocalData",
    "reduction_type",
    "naive_height",
    "is_minimal",
    "minimal_twist",
]

import enum
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Optional, Tuple, Union

import sympy

from ..arithmetic import PrimeModulus, legendre, modulus
from ..core.exceptions import SingularCurveError
from .curve_mod_p import CurveModP, GroupShape, count_points, group_structure


class Reduction(enum.Enum):
    GOOD = "good"
    SPLIT = "split-mult"
    NONSPLIT = "nonsplit-mult"
    ADDITIVE = "additive"

    @property
    def code(self) -> str:
        """One-letter code used in cache files."""
        return {"good": "g", "split-mult": "s", "nonsplit-mult": "n"}.get(
            self.value, "a"
        )

    @classmethod
    def from_code(cls, code: str, /) -> "Reduction":
        lookup = {"g": cls.GOOD, "s": cls.SPLIT, "n": cls.NONSPLIT, "a": cls.ADDITIVE}
        return lookup[code]

    @property
    def is_multiplicative(self) -> bool:
        return self in (Reduction.SPLIT, Reduction.NONSPLIT)


def naive_height(A: int, B: int, /) -> int:
    """Naive height ``max(|A|^3, B^2)``."""
    return max(abs(A) ** 3, B * B)


def _twist_factor(A: int, B: int) -> int:
    if A == 0 and B == 0:
        raise SingularCurveError("(0, 0) is not an elliptic curve.")
    base = gcd(A, B) if A and B else abs(A or B)
    d = 1
    for q, k in sympy.factorint(base).items():
        k_A = sympy.multiplicity(q, abs(A)) // 4 if A else k
        k_B = sympy.multiplicity(q, abs(B)) // 6 if B else k
        d *= q ** min(k_A, k_B)
    return d


def is_minimal(A: int, B: int, /) -> bool:
    """No prime ``q`` with ``q^4 | A`` and ``q^6 | B``."""
    return _twist_factor(A, B) == 1


def minimal_twist(A: int, B: int, /) -> Tuple[int, int]:
    """Divide by the largest ``d`` with ``d^4 | A`` and ``d^6 | B``.

    Examples
    --------
    >>> torsionrank.curves.minimal_twist(16, 64)
    (1, 1)

    """
    d = _twist_factor(A, B)
    return A // d**4, B // d**6


@dataclass(frozen=True)
class CurveQ:
    """Minimal model ``y^2 = x^3 + Ax + B`` over Q.

    Raises
    ------
    SingularCurveError
        If ``4A^3 + 27B^2 = 0``.
    ValueError
        If the model is not minimal.

    """

    A: int
    B: int
    check: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.discriminant == 0:
            raise SingularCurveError(f"({self.A}, {self.B}) is singular.")
        if self.check and not is_minimal(self.A, self.B):
            raise ValueError(f"({self.A}, {self.B}) is not minimal.")

    @property
    def discriminant(self) -> int:
        """``4A^3 + 27B^2``; the curve discriminant is ``-16`` times this."""
        return 4 * self.A**3 + 27 * self.B**2

    @property
    def height(self) -> int:
        return naive_height(self.A, self.B)

    def reduce(self, p: Union[int, PrimeModulus], /) -> CurveModP:
        return CurveModP(self.A, self.B, p)


@dataclass(frozen=True)
class LocalData:
    """Per-prime record of a curve over Q.

    ``shape`` is computed on first access, for good reduction only.

    """

    p: int
    a_p: int
    reduction: Reduction
    A: int = field(repr=False)
    B: int = field(repr=False)

    @cached_property
    def shape(self) -> Optional[GroupShape]:
        if self.reduction is not Reduction.GOOD:
            return None
        return group_structure(CurveModP(self.A, self.B, self.p))


def _is_split(A: int, B: int, p: int) -> bool:
    # node at alpha = -3B/(2A), other root -2 alpha; slopes^2 = 3 alpha
    alpha = -3 * B * pow(2 * A, -1, p) % p
    return legendre(3 * alpha, p) == 1


def reduction_type(E: CurveQ, p: Union[int, PrimeModulus], /) -> LocalData:
    """Reduction type and trace of Frobenius at ``p >= 5``.

    Examples
    --------
    >>> torsionrank.curves.reduction_type(torsionrank.curves.CurveQ(2, 1), 5)
    LocalData(p=5, a_p=-1, reduction=<Reduction.GOOD: 'good'>)

    """
    p = modulus(p)
    if p < 5:
        raise ValueError(f"The short model is not minimal at p={p}; need p >= 5.")
    c = E.reduce(p)
    if not c.is_singular:
        _, a_p = count_points(c)
        return LocalData(p, a_p, Reduction.GOOD, c.A, c.B)
    if c.A == 0:
        return LocalData(p, 0, Reduction.ADDITIVE, c.A, c.B)
    if _is_split(c.A, c.B, p):
        return LocalData(p, 1, Reduction.SPLIT, c.A, c.B)
    return LocalData(p, -1, Reduction.NONSPLIT, c.A, c.B)
