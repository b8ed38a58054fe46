"""Averages over isomorphism classes of curves over F_p, and the decomposition of
torsion weights into embedding indicators."""

__all__ = [
    "expectation",
    "embedding_decomposition",
    "expectation_relation",
]

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Tuple, Union

import sympy

from ..arithmetic import PrimeModulus, modulus
from ..core.exceptions import UnsupportedGroupError
from ..curves import CurveModP, GroupShape, group_structure, local_tables
from ..torsion import TorsionGroup
from .class_number import moment_sum

Invariants = Tuple[int, int]


def _invariants(A: Union[TorsionGroup, str, Invariants]) -> Invariants:
    if isinstance(A, tuple):
        n1, n2 = sorted(map(int, A), reverse=True)
        if n1 % n2:
            raise ValueError(f"Invariant factors must satisfy n2 | n1, got {A}.")
        return n1, n2
    return TorsionGroup.parse(A).invariants


def _injections(G: Invariants, shape: GroupShape) -> int:
    """Injective homomorphisms ``Z/n1 x Z/n2 -> shape``, for ``n2`` in {1, 2}."""
    n1, n2 = G
    if n1 == 1:
        return 1
    if n2 == 1:
        return shape.exact_order_count(n1)
    if n2 != 2:
        raise UnsupportedGroupError(f"Z/{n1} x Z/{n2} is not a torsion group over Q.")
    if shape.torsion_count(2) != 4:
        return 0
    return shape.exact_order_count(n1) * 2


@lru_cache(maxsize=512)
def _embeds_mask(p: int, n1: int, n2: int):
    local = local_tables(p)
    good = ~local.singular
    mask = good.copy()
    if n1 * n2 == 1:
        return mask
    for A, B in zip(*good.nonzero()):
        shape = group_structure(CurveModP(int(A), int(B), p))
        mask[A, B] = shape.n1 % n1 == 0 and shape.n2 % n2 == 0
    return mask


def expectation(
    p: Union[int, PrimeModulus], R: int, A: Union[TorsionGroup, str, Invariants], /
) -> Fraction:
    """``(1/p) sum a_p(E)^R / |Aut(E)|`` over classes ``E`` with ``A -> E(F_p)``.

    Each class has ``(p-1)/|Aut(E)|`` models ``(A, B)``, so the sum runs over
    nonsingular models with weight ``1/(p(p-1))``.

    Parameters
    ----------
    p
        Prime, at least 5.
    R
        Power of the trace.
    A
        Group, as a torsion group label or invariant factors ``(n1, n2)``.

    Examples
    --------
    >>> torsionrank.weights.expectation(7, 0, "0")
    Fraction(1, 1)

    """
    p = PrimeModulus(modulus(p)).p
    n1, n2 = _invariants(A)
    if gcd(p, n1 * n2) != 1:
        raise ValueError(f"p={p} divides the order of Z/{n1} x Z/{n2}.")
    if R < 0:
        raise ValueError(f"Power must be nonnegative, got {R}.")
    traces = local_tables(p).traces[_embeds_mask(p, n1, n2)]
    total = sum(int(a) ** R for a in traces)
    return Fraction(total, p * (p - 1))


def embedding_decomposition(G: Union[TorsionGroup, str], /) -> Dict[Invariants, int]:
    """Coefficients ``omega`` with ``w(E) = sum omega[A] * [A -> E(F_p)]``.

    Runs over ``A = Z/n1 x Z/k`` with ``n2 | k | n1``; ``omega`` follows from the
    number of embeddings of ``G`` into each ``A`` by Moebius inversion on ``k``.

    Examples
    --------
    >>> torsionrank.weights.embedding_decomposition("2")
    {(2, 1): 1, (2, 2): 2}

    """
    G = TorsionGroup.parse(G)
    if G.is_trivial or G.is_large:
        raise UnsupportedGroupError(f"No embedding decomposition for {G}.")
    n1, n2 = G.invariants
    ks = [k for k in sympy.divisors(n1) if k % n2 == 0]
    omega: Dict[Invariants, int] = {}
    for k in ks:
        tilde = _injections((n1, n2), GroupShape(n1, k))
        omega[(n1, k)] = tilde - sum(omega[(n1, j)] for j in ks if j < k and k % j == 0)
    return {A: w for A, w in omega.items() if w}


def expectation_relation(
    G: Union[TorsionGroup, str], p: Union[int, PrimeModulus], R: int, /
) -> Tuple[int, Fraction]:
    """Both sides of ``sum_a a^R H_G(a, p) = p(p-1) sum omega_A E_p(a^R Phi_A)``."""
    p = modulus(p)
    lhs = moment_sum(G, p, R)
    rhs = sum(
        w * expectation(p, R, A) for A, w in embedding_decomposition(G).items()
    )
    return lhs, p * (p - 1) * rhs
