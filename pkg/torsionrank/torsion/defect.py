"""Defect of the parametrization and the resulting minimal models."""

__all__ = [
    "defect",
    "defect_by_classification",
    "defect_brute_force",
    "phi",
    "multiplicity",
    "is_exceptional_pair",
]

from collections import Counter
from math import gcd
from typing import Mapping, Optional, Tuple, Union

import sympy

from ..core.exceptions import NotCoprimeError, UnsupportedGroupError
from .groups import TorsionGroup
from .polynomials import fg, model_polys


def _require_large(G: TorsionGroup) -> None:
    if not G.is_large:
        raise UnsupportedGroupError(
            f"Defect is defined for groups of order > 4, not {G}."
        )


def _require_coprime(a: int, b: int) -> None:
    if gcd(a, b) != 1:
        raise NotCoprimeError(f"gcd({a}, {b}) = {gcd(a, b)}, expected 1.")


def _largest_scaling(f: int, g: int) -> int:
    """Largest ``e`` with ``e^4 | f`` and ``e^6 | g``; zero entries impose nothing."""
    if f == 0 and g == 0:
        raise ValueError("Both polynomials vanish; the scaling is unbounded.")
    base = gcd(f, g) if f and g else abs(f or g)
    e = 1
    for q in sympy.factorint(base):
        k_f = sympy.multiplicity(q, abs(f)) // 4 if f else None
        k_g = sympy.multiplicity(q, abs(g)) // 6 if g else None
        k = min(k for k in (k_f, k_g) if k is not None)
        e *= q**k
    return e


def defect(G: Union[TorsionGroup, str], a: int, b: int, /) -> int:
    """Largest ``e`` with ``e^4 | f_G(a, b)`` and ``e^6 | g_G(a, b)``.

    Parameters
    ----------
    G
        Group of order greater than 4.
    a, b
        Relatively prime integers.

    Raises
    ------
    UnsupportedGroupError
        If ``G`` is of order 4 or less.
    NotCoprimeError
        If ``gcd(a, b) != 1``.

    Examples
    --------
    >>> torsionrank.torsion.defect("6", 1, 1)
    2
    >>> torsionrank.torsion.defect("12", 1, 3)
    3

    """
    G = TorsionGroup.parse(G)
    _require_large(G)
    _require_coprime(a, b)
    f, g = fg(G, a, b)
    return _largest_scaling(f, g)


def defect_by_classification(G: Union[TorsionGroup, str], a: int, b: int, /) -> int:
    """Defect predicted from the congruence classes of ``(a, b)`` mod 2 and mod 3.

    The classification does not cover ``2x6`` and ``2x8``, and it disagrees with
    :func:`defect` at the isolated pairs where ``f_G`` or ``g_G`` vanishes (see
    :func:`is_exceptional_pair`).

    """
    G = TorsionGroup.parse(G)
    _require_large(G)
    _require_coprime(a, b)
    if G.label in ("2x6", "2x8"):
        raise UnsupportedGroupError(f"No closed-form defect classification for {G}.")
    mod2 = (a % 2, b % 2)
    mod3 = (a % 3, b % 3)
    e = 1
    if (G.label in ("6", "2x4") and mod2 == (1, 1)) or (
        G.label in ("8", "10", "12") and mod2 == (1, 0)
    ):
        e *= 2
    if (G.label in ("7", "9") and mod3 in ((1, 2), (2, 1))) or (
        G.label == "12" and mod3[0] != 0 and mod3[1] == 0
    ):
        e *= 3
    return e


def defect_brute_force(
    G: Union[TorsionGroup, str], a: int, b: int, /, *, limit: int = 100
) -> int:
    """Largest ``e <= limit`` with ``e^4 | f`` and ``e^6 | g``, by trial division."""
    f, g = fg(TorsionGroup.parse(G), a, b)
    return max(e for e in range(1, limit + 1) if f % e**4 == 0 and g % e**6 == 0)


def is_exceptional_pair(G: Union[TorsionGroup, str], a: int, b: int, /) -> bool:
    """Whether ``f_G(a, b) g_G(a, b) = 0``, i.e. the image has ``j = 0`` or 1728."""
    f, g = fg(TorsionGroup.parse(G), a, b)
    return f * g == 0


def phi(G: Union[TorsionGroup, str], a: int, b: int, /) -> Tuple[int, int]:
    """The model ``(f/e^4, g/e^6)`` attached to the parameters ``(a, b)``.

    For groups of order at most 4 the defect is not applied and the image may be
    non-minimal; the trivial group maps ``(a, b)`` to itself.

    Raises
    ------
    NotCoprimeError
        For groups of order > 4 with ``gcd(a, b) != 1``.
    ValueError
        For ``2x2`` with ``a`` and ``b`` of different parity.

    Examples
    --------
    >>> torsionrank.torsion.phi("6", 1, 1)
    (-108, 297)
    >>> torsionrank.torsion.phi("2", 3, 2)
    (3, 14)

    """
    G = TorsionGroup.parse(G)
    if G.is_trivial:
        return int(a), int(b)
    if G.label == "2x2" and (a - b) % 2:
        raise ValueError(f"2x2 parameters need a = b mod 2, got ({a}, {b}).")
    if not G.is_large:
        f, g = model_polys(G).exact(a, b)
        return int(f), int(g)
    _require_coprime(a, b)
    f, g = fg(G, a, b)
    e = _largest_scaling(f, g)
    return f // e**4, g // e**6


def multiplicity(
    G: Union[TorsionGroup, str], /, histogram: Optional[Mapping[int, int]] = None
) -> int:
    """Preimage multiplicity ``r(G)`` of the parametrization.

    Parameters
    ----------
    G
        The group.
    histogram
        ``{preimage count: number of images}`` from a census. Required for groups of
        order > 4, whose multiplicity is the modal count; ignored otherwise.

    Examples
    --------
    >>> torsionrank.torsion.multiplicity("2x2")
    6

    """
    G = TorsionGroup.parse(G)
    if G.r is not None:
        return G.r
    if not histogram:
        raise UnsupportedGroupError(
            f"r({G}) is only known empirically; pass a census multiplicity histogram."
        )
    counts = Counter(dict(histogram))
    return max(counts, key=lambda k: (counts[k], -k))
