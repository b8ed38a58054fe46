"""Curves ``y^2 = x^3 + Ax + B`` over F_p: point counts and group structure."""

__all__ = [
    "CurveModP",
    "GroupShape",
    "LocalTables",
    "count_points",
    "group_structure",
    "aut_weight",
    "torsion_embeds",
    "count_embeddings",
    "smooth_point_count",
    "local_tables",
    "legendre_table",
    "trace_table",
    "SINGULAR_TRACE",
    "GOOD",
    "SPLIT",
    "NONSPLIT",
    "ADDITIVE",
]

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import List, Optional, Tuple, Union

import numpy as np
import sympy

from ..arithmetic import PrimeModulus, modulus
from ..core.exceptions import SingularCurveError
from ..torsion.groups import TorsionGroup

GOOD, SPLIT, NONSPLIT, ADDITIVE = 0, 1, 2, 3
"""Reduction codes stored in :class:`LocalTables`."""

Point = Optional[Tuple[int, int]]
"""Affine point, ``None`` for the point at infinity."""


@dataclass(frozen=True)
class CurveModP:
    """The model ``E_J: y^2 = x^3 + Ax + B`` for ``J = (A, B)`` in ``(Z/pZ)^2``.

    Examples
    --------
    >>> c = torsionrank.curves.CurveModP(2, 1, 5)
    >>> c.is_singular
    False

    """

    A: int
    B: int
    p: Union[int, PrimeModulus]

    def __post_init__(self) -> None:
        p = modulus(self.p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "A", self.A % p)
        object.__setattr__(self, "B", self.B % p)

    def discriminant(self) -> int:
        """``4A^3 + 27B^2`` mod ``p``."""
        return (4 * self.A**3 + 27 * self.B**2) % self.p

    @property
    def is_singular(self) -> bool:
        return self.discriminant() == 0

    def j_invariant(self) -> Optional[int]:
        disc = self.discriminant()
        if disc == 0:
            return None
        return 1728 * 4 * self.A**3 * pow(disc, -1, self.p) % self.p

    def twist(self, u: int, /) -> "CurveModP":
        """The isomorphic model ``(u^4 A, u^6 B)``."""
        if u % self.p == 0:
            raise ZeroDivisionError("Twisting by 0 is not an isomorphism.")
        return CurveModP(u**4 * self.A, u**6 * self.B, self.p)

    def rhs(self, x: int, /) -> int:
        return (x**3 + self.A * x + self.B) % self.p

    def _require_nonsingular(self) -> None:
        if self.is_singular:
            raise SingularCurveError(f"{self} is singular.")


@dataclass(frozen=True)
class GroupShape:
    """Invariant factors, ``E(F_p) = Z/n1 x Z/n2`` with ``n2 | n1``."""

    n1: int
    n2: int

    @property
    def order(self) -> int:
        return self.n1 * self.n2

    def torsion_count(self, n: int, /) -> int:
        """``#E[n] = gcd(n, n1) gcd(n, n2)``."""
        return gcd(n, self.n1) * gcd(n, self.n2)

    def exact_order_count(self, n: int, /) -> int:
        """Number of elements of order exactly ``n``."""
        return sum(
            int(sympy.mobius(n // d)) * self.torsion_count(d)
            for d in sympy.divisors(n)
        )


@lru_cache(maxsize=None)
def legendre_table(p: int, /) -> np.ndarray:
    """``chi[x]`` for ``x`` in ``0..p-1``."""
    chi = -np.ones(p, dtype=np.int64)
    chi[0] = 0
    squares = np.unique((np.arange(1, p, dtype=np.int64) ** 2) % p)
    chi[squares] = 1
    return chi


def _affine_count(A: int, B: int, p: int) -> int:
    x = np.arange(p, dtype=np.int64)
    values = (x * x % p * x + A * x + B) % p
    return int(p + legendre_table(p)[values].sum())


def count_points(c: CurveModP, /) -> Tuple[int, int]:
    """Number of points ``N`` and trace ``a_p = p + 1 - N``.

    Raises
    ------
    SingularCurveError
        If the model is singular.

    Examples
    --------
    >>> torsionrank.curves.count_points(torsionrank.curves.CurveModP(2, 1, 5))
    (7, -1)

    """
    c._require_nonsingular()
    N = 1 + _affine_count(c.A, c.B, c.p)
    return N, c.p + 1 - N


def smooth_point_count(c: CurveModP, /) -> int:
    """Nonsingular points, the point at infinity included; singular models allowed."""
    N = 1 + _affine_count(c.A, c.B, c.p)
    return N - 1 if c.is_singular else N


def _points(c: CurveModP) -> List[Tuple[int, int]]:
    p = c.p
    roots = {}
    for y in range(p):
        roots.setdefault(y * y % p, []).append(y)
    return [(x, y) for x in range(p) for y in roots.get(c.rhs(x), [])]


def _add(P: Point, Q: Point, A: int, p: int) -> Point:
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return None
        slope = (3 * x1 * x1 + A) * pow(2 * y1, -1, p) % p
    else:
        slope = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (slope * slope - x1 - x2) % p
    return x3, (slope * (x1 - x3) - y1) % p


def _multiply(n: int, P: Point, A: int, p: int) -> Point:
    result: Point = None
    while n:
        if n & 1:
            result = _add(result, P, A, p)
        P = _add(P, P, A, p)
        n >>= 1
    return result


def _order(P: Point, N: int, factors, A: int, p: int) -> int:
    order = N
    for q in factors:
        while order % q == 0 and _multiply(order // q, P, A, p) is None:
            order //= q
    return order


@lru_cache(maxsize=1 << 16)
def _shape(A: int, B: int, p: int) -> GroupShape:
    c = CurveModP(A, B, p)
    N, _ = count_points(c)
    factors = list(sympy.factorint(N))
    exponent = 1
    for P in _points(c):
        order = _order(P, N, factors, A, p)
        exponent = exponent * order // gcd(exponent, order)
        if exponent == N:
            break
    return GroupShape(exponent, N // exponent)


def group_structure(c: CurveModP, /) -> GroupShape:
    """Invariant factors of ``E(F_p)``, from the exponent of the group.

    The exponent is the least common multiple of all point orders; it equals ``n1``
    and ``n2 = N / n1``.

    Examples
    --------
    >>> torsionrank.curves.group_structure(torsionrank.curves.CurveModP(2, 1, 5))
    GroupShape(n1=7, n2=1)

    """
    c._require_nonsingular()
    return _shape(c.A, c.B, c.p)


def aut_weight(c: CurveModP, /) -> Fraction:
    """``1 / |Aut_(F_p)(E)|``.

    Examples
    --------
    >>> torsionrank.curves.aut_weight(torsionrank.curves.CurveModP(0, 1, 7))
    Fraction(1, 6)

    """
    c._require_nonsingular()
    if c.A == 0 and c.p % 3 == 1:
        return Fraction(1, 6)
    if c.B == 0 and c.p % 4 == 1:
        return Fraction(1, 4)
    return Fraction(1, 2)


def count_embeddings(c: CurveModP, G: Union[TorsionGroup, str], /) -> int:
    """Number of injective homomorphisms ``G -> E(F_p)``."""
    G = TorsionGroup.parse(G)
    if G.is_trivial:
        return 1
    shape = group_structure(c)
    if G.is_cyclic:
        return shape.exact_order_count(G.n1)
    if shape.torsion_count(2) != 4:
        return 0
    # image of the Z/2 generator: any 2-torsion point off <P>, P of order n1
    return shape.exact_order_count(G.n1) * 2


def torsion_embeds(c: CurveModP, G: Union[TorsionGroup, str], /) -> bool:
    """Whether ``G`` injects into ``E(F_p)``.

    Examples
    --------
    >>> c = torsionrank.curves.CurveModP(2, 1, 5)
    >>> torsionrank.curves.torsion_embeds(c, "7")
    True

    """
    G = TorsionGroup.parse(G)
    if G.is_trivial:
        return True
    if gcd(G.order, c.p) != 1:
        raise ValueError(f"{G} has order divisible by p={c.p}.")
    shape = group_structure(c)
    return shape.n1 % G.n1 == 0 and shape.n2 % G.n2 == 0


@dataclass(frozen=True)
class LocalTables:
    """Trace and reduction code of every ``(A, B)`` mod ``p``.

    ``traces[A, B]`` is ``a_p`` for good models and +1, -1, 0 for split, non-split
    and additive ones; ``codes[A, B]`` is one of ``GOOD``, ``SPLIT``, ``NONSPLIT``,
    ``ADDITIVE``.

    """

    p: int
    traces: np.ndarray
    codes: np.ndarray

    @property
    def singular(self) -> np.ndarray:
        return self.codes != GOOD


@lru_cache(maxsize=64)
def local_tables(p: Union[int, PrimeModulus], /, chunk: int = 1 << 22) -> LocalTables:
    """Vectorized traces of all ``p^2`` models, shared by every module."""
    p = modulus(p)
    chi = legendre_table(p)
    x = np.arange(p, dtype=np.int64)
    cubes = x * x % p * x % p
    traces = np.empty((p, p), dtype=np.int64)
    rows = max(1, chunk // (p * p))
    cols = max(1, chunk // (rows * p))
    B = np.arange(p, dtype=np.int64)
    for A0 in range(0, p, rows):
        A = np.arange(A0, min(p, A0 + rows), dtype=np.int64)
        base = (cubes[None, :] + A[:, None] * x[None, :]) % p
        for B0 in range(0, p, cols):
            Bs = B[B0 : B0 + cols]
            values = (base[:, None, :] + Bs[None, :, None]) % p
            traces[A0 : A0 + len(A), B0 : B0 + len(Bs)] = -chi[values].sum(axis=2)

    A_grid, B_grid = np.meshgrid(np.arange(p), np.arange(p), indexing="ij")
    disc = (4 * A_grid**3 % p + 27 * B_grid**2) % p
    codes = np.full((p, p), GOOD, dtype=np.int8)
    singular = disc == 0
    additive = singular & (A_grid == 0)
    multiplicative = singular & ~additive

    # node at x = alpha = -3B/(2A); tangent slopes are rational iff 3*alpha is a square
    inv = np.array([0] + [pow(int(a), -1, p) for a in range(1, p)], dtype=np.int64)
    alpha = (-3 * B_grid % p) * inv[(2 * A_grid) % p] % p
    split = multiplicative & (chi[(3 * alpha) % p] == 1)
    codes[multiplicative] = NONSPLIT
    codes[split] = SPLIT
    codes[additive] = ADDITIVE
    traces[split] = 1
    traces[multiplicative & ~split] = -1
    traces[additive] = 0
    return LocalTables(p, traces, codes)


SINGULAR_TRACE = -99
"""Marker of singular entries in :func:`trace_table`."""


@lru_cache(maxsize=64)
def trace_table(p: Union[int, PrimeModulus], /) -> np.ndarray:
    """``a_p`` of every nonsingular model mod ``p``, ``SINGULAR_TRACE`` elsewhere.

    Examples
    --------
    >>> torsionrank.curves.trace_table(5)[2, 1]
    -1

    """
    local = local_tables(p)
    table = np.where(local.singular, SINGULAR_TRACE, local.traces)
    table.setflags(write=False)
    return table
