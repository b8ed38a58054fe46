"""The ring F_p[x]/(x^2 + 3), written u + v*sqrt(-3), and cube tests."""

__all__ = [
    "QuadExtElement",
    "is_cube",
    "unit_group_order",
    "cube_roots_of_unity_count",
]

from dataclasses import dataclass
from typing import Union

from ..core.exceptions import NotAUnitError
from .residue import PrimeModulus, modulus


@dataclass(frozen=True)
class QuadExtElement:
    """Element ``u + v*sqrt(-3)`` of ``F_p[sqrt(-3)]``.

    The ring is the quotient ``F_p[x]/(x^2+3)`` whether or not ``-3`` is a square
    mod ``p``; in the split case it is ``F_p x F_p``, not a field.

    Examples
    --------
    >>> s = torsionrank.arithmetic.QuadExtElement(0, 1, 7)
    >>> s * s
    QuadExtElement(u=4, v=0, p=7)

    """

    u: int
    v: int
    p: int

    def __post_init__(self) -> None:
        p = modulus(self.p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "u", self.u % p)
        object.__setattr__(self, "v", self.v % p)

    def _coerce(self, other: Union["QuadExtElement", int]) -> "QuadExtElement":
        if isinstance(other, QuadExtElement):
            if other.p != self.p:
                raise ValueError("Elements live in different rings.")
            return other
        return QuadExtElement(int(other), 0, self.p)

    def __add__(self, other):
        other = self._coerce(other)
        return QuadExtElement(self.u + other.u, self.v + other.v, self.p)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElement(-self.u, -self.v, self.p)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        u = self.u * other.u - 3 * self.v * other.v
        v = self.u * other.v + self.v * other.u
        return QuadExtElement(u, v, self.p)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("Negative powers are not supported.")
        result = QuadExtElement(1, 0, self.p)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def norm(self) -> int:
        """``u^2 + 3v^2`` mod ``p``; zero exactly for non-units."""
        return (self.u * self.u + 3 * self.v * self.v) % self.p

    @property
    def is_unit(self) -> bool:
        return self.norm() != 0

    @property
    def is_one(self) -> bool:
        return self.u == 1 and self.v == 0


def unit_group_order(p: Union[int, PrimeModulus], /) -> int:
    """Order of the unit group of ``F_p[sqrt(-3)]``."""
    p = modulus(p)
    return (p - 1) ** 2 if p % 3 == 1 else p * p - 1


def cube_roots_of_unity_count(p: Union[int, PrimeModulus], /) -> int:
    """Number of cube roots of unity in ``F_p``."""
    return 3 if modulus(p) % 3 == 1 else 1


def is_cube(x: Union[QuadExtElement, int], p: Union[int, PrimeModulus], /) -> bool:
    """Whether ``x`` is a cube of a unit in its ring.

    Parameters
    ----------
    x
        A residue (element of ``F_p``) or an element of ``F_p[sqrt(-3)]``.
    p
        The prime.

    Raises
    ------
    NotAUnitError
        If ``x`` is not invertible.

    Notes
    -----
    For residues the group is cyclic of order ``p-1``. In the quadratic ring the
    unit group is ``(F_p^x)^2`` of exponent ``p-1`` when ``p = 1 mod 3``, and cyclic
    of order ``p^2-1`` otherwise; ``x`` is a cube iff ``x^(exponent/3) = 1``, and
    every unit is a cube when 3 does not divide the exponent.

    """
    p = modulus(p)
    if isinstance(x, QuadExtElement):
        if x.p != p:
            raise ValueError("Element and modulus disagree.")
        if not x.is_unit:
            raise NotAUnitError(f"{x} is not a unit mod {p}.")
        exponent = p - 1 if p % 3 == 1 else p * p - 1
        if exponent % 3:
            return True
        return (x ** (exponent // 3)).is_one

    x %= p
    if x == 0:
        raise NotAUnitError(f"0 is not a unit mod {p}.")
    if (p - 1) % 3:
        return True
    return pow(x, (p - 1) // 3, p) == 1
