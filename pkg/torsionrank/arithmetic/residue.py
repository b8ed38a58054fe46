"""Exact arithmetic in Z/pZ."""

__all__ = ["PrimeModulus", "legendre", "sqrt_mod", "modulus"]

from dataclasses import dataclass
from typing import Optional, Union

import sympy


@dataclass(frozen=True)
class PrimeModulus:
    """A prime ``p >= 5``, the characteristic every local computation runs in.

    Examples
    --------
    >>> torsionrank.arithmetic.PrimeModulus(7).is_1_mod_3
    True
    >>> torsionrank.arithmetic.PrimeModulus(9)
    Traceback (most recent call last):
    ...
    ValueError: 9 is not a prime.

    """

    p: int

    def __post_init__(self) -> None:
        if not sympy.isprime(self.p):
            raise ValueError(f"{self.p} is not a prime.")
        if self.p < 5:
            raise ValueError(f"Prime must be at least 5, got {self.p}.")

    @property
    def is_1_mod_3(self) -> bool:
        return self.p % 3 == 1

    def inverse(self, x: int, /) -> int:
        """Multiplicative inverse; raises ``ZeroDivisionError`` for ``x = 0``."""
        if x % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}.")
        return pow(x, -1, self.p)

    def __int__(self) -> int:
        return self.p


def modulus(p: Union[int, PrimeModulus], /) -> int:
    """Plain integer value of a prime given either way."""
    return p.p if isinstance(p, PrimeModulus) else int(p)


def legendre(x: int, p: Union[int, PrimeModulus], /) -> int:
    """Legendre symbol of ``x`` modulo ``p``.

    Returns
    -------
    symbol
        0 iff ``p | x``, +1 for nonzero squares, -1 otherwise.

    Examples
    --------
    >>> torsionrank.arithmetic.legendre(3, 7)
    -1

    """
    p = modulus(p)
    return int(sympy.legendre_symbol(x % p, p))


def sqrt_mod(x: int, p: Union[int, PrimeModulus], /) -> Optional[int]:
    """Canonical square root, in ``[0, (p-1)/2]``, or ``None`` for non-squares.

    Examples
    --------
    >>> torsionrank.arithmetic.sqrt_mod(2, 7)
    3
    >>> torsionrank.arithmetic.sqrt_mod(3, 7) is None
    True

    """
    p = modulus(p)
    x %= p
    if x == 0:
        return 0
    root = sympy.sqrt_mod(x, p)
    if root is None:
        return None
    root = int(root) % p
    return min(root, p - root)
