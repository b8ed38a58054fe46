"""Leading constants ``c(G)`` of ``|E_G(X)| ~ c(G) X^(1/d(G))``."""

__all__ = ["defect_density", "defect_factor", "c_constant"]

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Optional, Union

import numpy as np
import sympy

from ..core.inform import get_logger
from ..torsion import TorsionGroup, model_polys, multiplicity
from .region import region_area

logger = get_logger(__name__)

MAX_DEPTH = {2: 16, 3: 10}
"""Deepest modulus ``q^m`` refined before assigning leftover mass."""


def _valuation(x: np.ndarray, q: int, m: int):
    """``v_q(x)`` of nonzero residues mod ``q^m``; ``known`` is false at ``x = 0``."""
    known = x != 0
    v = np.zeros_like(x)
    y = x.copy()
    for _ in range(m):
        divisible = known & (y % q == 0)
        if not divisible.any():
            break
        v[divisible] += 1
        y[divisible] //= q
    return v, known


@lru_cache(maxsize=64)
def _defect_density(label: str, q: int, max_depth: int) -> Dict[int, float]:
    polys = model_polys(label)
    a, b = (x.ravel() for x in np.meshgrid(np.arange(q), np.arange(q)))
    primitive = (a % q != 0) | (b % q != 0)
    a, b = a[primitive].astype(np.int64), b[primitive].astype(np.int64)
    weight = 1.0 / (q * q - 1)
    density: Dict[int, float] = defaultdict(float)

    m, qm = 1, q
    big = np.iinfo(np.int64).max
    while len(a):
        f, g = polys.mod(a, b, qm)
        vf, known_f = _valuation(f, q, m)
        vg, known_g = _valuation(g, q, m)
        kf = np.where(known_f, vf // 4, big)
        kg = np.where(known_g, vg // 6, big)
        k = np.minimum(kf, kg)
        resolved = (known_f & known_g) | (known_f & (kf <= m // 6))
        resolved |= known_g & (kg <= m // 4)
        for value, count in zip(*np.unique(k[resolved], return_counts=True)):
            density[int(value)] += weight * int(count)
        a, b = a[~resolved], b[~resolved]
        if not len(a):
            break
        if m >= max_depth:
            lower = np.minimum(
                np.where(known_f, kf, m // 4), np.where(known_g, kg, m // 6)
            )
            for value in lower[~resolved]:
                density[int(value)] += weight
            logger.debug(
                f"{len(a)} classes of {label} mod {q}^{m} left unresolved; "
                "assigned their lower bound"
            )
            break
        shifts = np.arange(q, dtype=np.int64) * qm
        a = (a[:, None] + np.repeat(shifts, q)[None, :]).ravel()
        b = (b[:, None] + np.tile(shifts, q)[None, :]).ravel()
        weight /= q * q
        m, qm = m + 1, qm * q
    return dict(sorted(density.items()))


def defect_density(
    G: Union[TorsionGroup, str], q: int, /, max_depth: Optional[int] = None
) -> Dict[int, float]:
    """``{k: density of primitive (a, b) with v_q(defect) = k}`` over ``Z_q^2``.

    Residue classes mod ``q^m`` are refined until ``k = min(v(f)//4, v(g)//6)`` is
    decided by the class.

    Examples
    --------
    >>> density = torsionrank.census.defect_density("6", 2)
    >>> {k: round(w, 6) for k, w in density.items()}
    {0: 0.666667, 1: 0.333333}

    """
    G = TorsionGroup.parse(G)
    if not sympy.isprime(q):
        raise ValueError(f"{q} is not a prime.")
    depth = MAX_DEPTH.get(q, 6) if max_depth is None else max_depth
    return _defect_density(G.label, q, depth)


def defect_factor(G: Union[TorsionGroup, str], /) -> float:
    """``prod_q sum_k q^(12k/d) density_q(k)`` over the primes ``q | eps(G)``.

    Examples
    --------
    >>> round(torsionrank.census.defect_factor("6"), 6)
    2.0

    """
    G = TorsionGroup.parse(G)
    factor = 1.0
    for q in sympy.primefactors(G.epsilon):
        density = defect_density(G, q)
        factor *= sum(q ** (12 * k / float(G.d)) * w for k, w in density.items())
    return factor


def c_constant(
    G: Union[TorsionGroup, str],
    /,
    tol: Optional[float] = None,
    histogram: Optional[Mapping[int, int]] = None,
) -> float:
    """``c(G)`` from the area of ``R_G(1)``.

    Groups of order at most 4 (and the trivial group) give
    ``Area / (2^delta r(G) zeta(12/d))``; larger groups give
    ``Area / (r(G) zeta(2))`` times :func:`defect_factor`.

    Parameters
    ----------
    G
        The group.
    tol
        Tolerance of the area estimate.
    histogram
        Census multiplicity histogram, required for groups of order > 4.

    Examples
    --------
    >>> round(torsionrank.census.c_constant("0") * float(sympy.zeta(10)), 6)
    4.0

    """
    G = TorsionGroup.parse(G)
    area = region_area(G, tol).area
    r = multiplicity(G, histogram)
    if not G.is_large:
        s = 12 / Fraction(G.d)
        zeta = float(sympy.zeta(sympy.Rational(s.numerator, s.denominator)))
        return area / (2**G.delta * r * zeta)
    return area / (r * float(sympy.zeta(2))) * defect_factor(G)
