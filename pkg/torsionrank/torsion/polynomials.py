"""The model polynomials f_G, g_G and their evaluation in several arithmetics."""

__all__ = [
    "ModelPolys",
    "model_polys",
    "fg",
    "discriminant_table",
    "polynomial_checksum",
]

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple, Union

import numpy as np
import sympy

from ..core.exceptions import UnsupportedGroupError
from ..core.types import Rational
from .groups import ALL_GROUPS, TorsionGroup

Monomials = Dict[Tuple[int, int], Rational]
"""Sparse bivariate polynomial, ``{(i, j): c}`` meaning ``c a^i b^j``."""


def _dense(coefficients) -> Monomials:
    """Homogeneous polynomial from coefficients of ``a^(n-k) b^k``, k = 0..n."""
    n = len(coefficients) - 1
    return {(n - k, k): c for k, c in enumerate(coefficients) if c != 0}


_quarter = Fraction(1, 4)

_tables: Dict[str, Tuple[Monomials, Monomials]] = {
    "0": ({(1, 0): 1}, {(0, 1): 1}),
    "2": ({(1, 0): 1}, {(0, 3): 1, (1, 1): 1}),
    "3": ({(1, 1): 6, (4, 0): 27}, {(0, 2): 1, (6, 0): -27}),
    "4": (
        {(2, 0): -3, (1, 2): 6, (0, 4): -2},
        {(3, 0): 2, (2, 2): 3, (1, 4): -4, (0, 6): 1},
    ),
    "2x2": (
        {(2, 0): -_quarter, (0, 2): -3 * _quarter},
        {(0, 3): _quarter, (2, 1): -_quarter},
    ),
    "5": (
        _dense([-27, 324, -378, -324, -27]),
        _dense([54, -972, 4050, 0, 4050, 972, 54]),
    ),
    "6": (
        _dense([-243, -324, -810, -324, -27]),
        _dense([-1458, -2916, 7290, 9720, 5346, 972, 54]),
    ),
    "7": (
        _dense([-27, 324, -1134, 1512, -945, 0, 378, -108, -27]),
        _dense(
            [54, -972, 6318, -19116, 30780, -26244, 14742, -11988, 9396]
            + [-2484, -810, 324, 54]
        ),
    ),
    "8": (
        _dense([-432, 1728, -6048, 12096, -12960, 7776, -2592, 432, -27]),
        _dense(
            [-3456, 20736, 0, -190080, 555984, -855360, 840672, -554688]
            + [246240, -71712, 12960, -1296, 54]
        ),
    ),
    "9": (
        _dense(
            [-27, 324, -1458, 3456, -5103, 4860, -3078, 972, 486, -756, 324, 0, -27]
        ),
        _dense(
            [54, -972, 7290, -30780, 84078, -160380, 222912, -228420, 174960]
            + [-109728, 73386, -58320, 39690, -16524, 1458, 2268, -972, 0, 54]
        ),
    ),
    "10": (
        _dense(
            [-432, 3456, -11232, 19440, -19440, 7776, 6912, -11664, 6480]
            + [-1080, -432, 216, -27]
        ),
        _dense(
            [3456, -41472, 217728, -661824, 1296000, -1767744, 1926288]
            + [-2037312, 2133216, -1803600, 981072, -199584, -128304, 112752]
            + [-32400, -216, 2592, -648, 54]
        ),
    ),
    "12": (
        _dense(
            [-3888, 31104, -194400, 816480, -2269296, 4416768, -6318000]
            + [6855840, -5747760, 3753216, -1907712, 747792, -221616, 47952]
            + [-7128, 648, -27]
        ),
        _dense(
            [-93312, 1119744, -2519424, -19502208, 175146624, -738377856]
            + [2114216640, -4566176064, 7806726864, -10854518400, 12478123872]
            + [-11984223456, 9676823760, -6590020032, 3786612624, -1831706784]
            + [742184208, -249811776, 68988672, -15353712, 2682720, -353808]
            + [33048, -1944, 54]
        ),
    ),
    "2x4": (
        _dense([-27, 0, -378, 0, -27]),
        _dense([-54, 0, 1782, 0, 1782, 0, -54]),
    ),
    "2x6": (
        _dense([-27, 0, 1296, 0, -12960, 0, -393984, 0, -62208]),
        _dense(
            [54, 0, -3888, 0, 85536, 0, -2363904, 0, 43670016, 0, 86593536, 0]
            + [-5971968]
        ),
    ),
    "2x8": (
        _dense(
            [-452984832, -1811939328, -3170893824, -3170893824, -1953497088]
            + [-707788800, -88473600, 51314688, 31961088, 6414336, -1382400]
            + [-1382400, -476928, -96768, -12096, -864, -27]
        ),
        _dense(
            [3710851743744, 22265110462464, 61229053771776, 102048422952960]
            + [114456583471104, 90104118902784, 49618146557952, 17546820452352]
            + [2194711511040, -1694163271680, -1411953721344, -656375021568]
            + [-246536994816, -82046877696, -22061776896, -3308912640]
            + [535818240, 535486464, 189278208, 42964992, 6822144, 760320]
            + [57024, 2592, 54]
        ),
    ),
}


def _exact(poly: Monomials, a: int, b: int) -> Rational:
    value = sum(c * a**i * b**j for (i, j), c in poly.items())
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def _mod_coefficient(c: Rational, p: int) -> int:
    if isinstance(c, Fraction):
        return c.numerator * pow(c.denominator, -1, p) % p
    return c % p


def _mod(poly: Monomials, a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    degree = max(max(i, j) for i, j in poly)
    a_pow, b_pow = [np.ones_like(a)], [np.ones_like(b)]
    for _ in range(degree):
        a_pow.append(a_pow[-1] * a % p)
        b_pow.append(b_pow[-1] * b % p)
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    for (i, j), c in poly.items():
        out = (out + _mod_coefficient(c, p) * a_pow[i] % p * b_pow[j]) % p
    return out


def _float(poly: Monomials, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    out = np.zeros(np.broadcast(a, b).shape)
    for (i, j), c in poly.items():
        out = out + float(c) * a**i * b**j
    return out


@dataclass(frozen=True)
class ModelPolys:
    """The pair ``(f_G, g_G)`` with exact, modular and floating evaluation."""

    group: TorsionGroup
    f: Monomials
    g: Monomials

    def exact(self, a: int, b: int, /) -> Tuple[Rational, Rational]:
        return _exact(self.f, a, b), _exact(self.g, a, b)

    def mod(self, a, b, p: int, /) -> Tuple[np.ndarray, np.ndarray]:
        """Reduction mod ``p``, vectorized over integer arrays."""
        return _mod(self.f, a, b, p), _mod(self.g, a, b, p)

    def evaluate(self, a, b, /) -> Tuple[np.ndarray, np.ndarray]:
        """Floating point evaluation, vectorized."""
        return _float(self.f, a, b), _float(self.g, a, b)

    @property
    def degrees(self) -> Tuple[int, int]:
        return (
            max(i + j for i, j in self.f),
            max(i + j for i, j in self.g),
        )

    def as_sympy(self) -> Tuple[sympy.Expr, sympy.Expr]:
        a, b = sympy.symbols("a b")

        def convert(poly: Monomials) -> sympy.Expr:
            return sum(
                sympy.Rational(str(c)) * a**i * b**j for (i, j), c in poly.items()
            )

        return convert(self.f), convert(self.g)


@lru_cache(maxsize=None)
def model_polys(G: Union[TorsionGroup, str], /) -> ModelPolys:
    """Stored polynomials of ``G``; the trivial group carries the identity model."""
    G = TorsionGroup.parse(G)
    f, g = _tables[G.label]
    return ModelPolys(G, f, g)


def fg(G: Union[TorsionGroup, str], a: int, b: int, /) -> Tuple[Rational, Rational]:
    """Exact value of ``(f_G(a, b), g_G(a, b))``.

    Raises
    ------
    UnsupportedGroupError
        For the trivial group, which has no torsion parametrization.

    Examples
    --------
    >>> torsionrank.torsion.fg("2", 3, 2)
    (3, 14)
    >>> torsionrank.torsion.fg("5", 1, 0)
    (-27, 54)

    """
    G = TorsionGroup.parse(G)
    if G.is_trivial:
        raise UnsupportedGroupError("The trivial group has no model polynomials.")
    return model_polys(G).exact(a, b)


def discriminant_table(G: Union[TorsionGroup, str], /) -> sympy.Expr:
    """Factored form of ``-16(4 f_G^3 + 27 g_G^2)`` for groups of order > 4."""
    G = TorsionGroup.parse(G)
    a, b = sympy.symbols("a b")
    c = 2**12 * 3**12
    table = {
        "5": c * a**5 * b**5 * (a**2 - 11 * a * b - b**2),
        "6": c * a**6 * b**2 * (9 * a + b) * (a + b) ** 3,
        "7": c
        * a**7
        * b**7
        * (a - b) ** 7
        * (a**3 - 8 * a**2 * b + 5 * a * b**2 + b**3),
        "8": c
        * a**8
        * b**2
        * (-2 * a + b) ** 4
        * (-a + b) ** 8
        * (8 * a**2 - 8 * a * b + b**2),
        "9": c
        * a**9
        * b**9
        * (a - b) ** 9
        * (a**2 - a * b + b**2) ** 3
        * (a**3 - 6 * a**2 * b + 3 * a * b**2 + b**3),
        "10": c
        * b**5
        * (-2 * a + b) ** 5
        * (-a + b) ** 10
        * a**10
        * (-4 * a**2 + 2 * a * b + b**2)
        * (a**2 - 3 * a * b + b**2) ** 2,
        "12": c
        * b**2
        * (-2 * a + b) ** 6
        * (-a + b) ** 12
        * a**12
        * (6 * a**2 - 6 * a * b + b**2)
        * (2 * a**2 - 2 * a * b + b**2) ** 3
        * (3 * a**2 - 3 * a * b + b**2) ** 4,
        "2x4": 2**8 * 3**12 * b**2 * a**2 * (a - b) ** 4 * (a + b) ** 4,
        "2x6": 2**18
        * 3**12
        * a**2
        * (a - 6 * b) ** 2
        * (a + 6 * b) ** 2
        * b**6
        * (a - 2 * b) ** 6
        * (a + 2 * b) ** 6,
        "2x8": 2**20
        * 3**12
        * b**8
        * a**8
        * (2 * a + b) ** 8
        * (4 * a + b) ** 8
        * (8 * a**2 - b**2) ** 2
        * (8 * a**2 + 8 * a * b + b**2) ** 2
        * (8 * a**2 + 4 * a * b + b**2) ** 4,
    }
    try:
        return table[G.label]
    except KeyError:
        raise UnsupportedGroupError(f"No factored discriminant stored for {G}.")


@lru_cache(maxsize=None)
def polynomial_checksum() -> str:
    """Short digest of every stored coefficient, for cache invalidation."""
    digest = hashlib.sha256()
    for G in ALL_GROUPS:
        f, g = _tables[G.label]
        for poly in (f, g):
            digest.update(repr(sorted((k, str(v)) for k, v in poly.items())).encode())
    return digest.hexdigest()[:12]
