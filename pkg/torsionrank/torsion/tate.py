"""Tate normal form ``y^2 + (1-v)xy - uy = x^3 - ux^2`` and its short models."""

__all__ = [
    "tate_curve",
    "tate_to_short_weierstrass",
    "tate_parameter",
    "j_invariant",
    "is_isomorphic_over_q",
]

from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple, Union

import sympy

from ..core.exceptions import DenominatorVanishesError, UnsupportedGroupError
from ..core.types import Rational
from .groups import TorsionGroup

RationalPair = Tuple[Fraction, Fraction]


def _row_2x6(t: Fraction) -> RationalPair:
    v = (10 - 2 * t) / (t * t - 9)
    return v + v * v, v


_rows: Dict[str, Callable[[Fraction], RationalPair]] = {
    "4": lambda t: (t, Fraction(0)),
    "5": lambda t: (t, t),
    "6": lambda t: (t + t * t, t),
    "7": lambda t: (t**3 - t**2, t**2 - t),
    "8": lambda t: ((2 * t - 1) * (t - 1), (2 * t - 1) * (t - 1) / t),
    "9": lambda t: (t**2 * (t - 1) * (t**2 - t + 1), t**2 * (t - 1)),
    "10": lambda t: (
        t**3 * (2 * t - 1) * (t - 1) / (-(t**2) + 3 * t - 1) ** 2,
        t * (2 * t - 1) * (t - 1) / (-(t**2) + 3 * t - 1),
    ),
    "12": lambda t: (
        (3 * t**2 - 3 * t + 1) * (t - 2 * t**2) * (2 * t - 2 * t**2 - 1) / (t - 1) ** 4,
        (3 * t**2 - 3 * t + 1) * (t - 2 * t**2) / (t - 1) ** 3,
    ),
    "2x4": lambda t: (t * t - Fraction(1, 16), Fraction(0)),
    "2x6": _row_2x6,
    "2x8": lambda t: (
        (2 * t + 1) * (8 * t**2 + 4 * t + 1) / (8 * t**2 - 1) ** 2,
        (2 * t + 1) * (8 * t**2 + 4 * t + 1) / (2 * t * (4 * t + 1) * (8 * t**2 - 1)),
    ),
}


def tate_curve(
    G: Union[TorsionGroup, str], t: Union[Rational, str], /
) -> Tuple[Fraction, Fraction]:
    """Parameters ``(u, v)`` of the Tate normal form with torsion ``G``.

    Raises
    ------
    UnsupportedGroupError
        If ``G`` has no row in the table (order below 4 or ``2x2``).
    DenominatorVanishesError
        If ``t`` is a pole of the parametrization.

    Examples
    --------
    >>> torsionrank.torsion.tate_curve("5", 2)
    (Fraction(2, 1), Fraction(2, 1))
    >>> torsionrank.torsion.tate_curve("8", 1)
    (Fraction(0, 1), Fraction(0, 1))

    """
    G = TorsionGroup.parse(G)
    try:
        row = _rows[G.label]
    except KeyError:
        raise UnsupportedGroupError(f"No Tate normal form row for {G}.")
    try:
        u, v = row(Fraction(t))
    except ZeroDivisionError as e:
        raise DenominatorVanishesError(f"t={t} is a pole of the {G} row.") from e
    return Fraction(u), Fraction(v)


def tate_to_short_weierstrass(u: Rational, v: Rational, /) -> Tuple[Fraction, Fraction]:
    """Short model ``(A, B) = (-27 c4, -54 c6)`` of the Tate normal form."""
    u, v = Fraction(u), Fraction(v)
    a1, a2, a3 = 1 - v, -u, -u
    b2 = a1 * a1 + 4 * a2
    b4 = a1 * a3
    b6 = a3 * a3
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
    return -27 * c4, -54 * c6


def tate_parameter(G: Union[TorsionGroup, str], a: int, b: int, /) -> Fraction:
    """Tate parameter ``t`` whose curve is Q-isomorphic to the image of ``(a, b)``."""
    G = TorsionGroup.parse(G)
    if b == 0:
        raise DenominatorVanishesError("b = 0 corresponds to t at infinity.")
    if G.label == "2x4":
        return Fraction(a, 4 * b)
    if G.label == "2x6":
        return Fraction(a + 3 * b, b)
    if G.label in _rows:
        return Fraction(a, b)
    raise UnsupportedGroupError(f"No Tate parameter for {G}.")


def j_invariant(A: Rational, B: Rational, /) -> Optional[Fraction]:
    """``1728 * 4A^3 / (4A^3 + 27B^2)``, ``None`` for singular models."""
    A, B = Fraction(A), Fraction(B)
    disc = 4 * A**3 + 27 * B**2
    if disc == 0:
        return None
    return 1728 * 4 * A**3 / disc


def _is_power(x: Fraction, n: int) -> bool:
    if x <= 0 and n % 2 == 0:
        return False
    num = sympy.integer_nthroot(abs(x.numerator), n)
    den = sympy.integer_nthroot(x.denominator, n)
    return bool(num[1] and den[1])


def is_isomorphic_over_q(
    E1: Tuple[Rational, Rational], E2: Tuple[Rational, Rational], /
) -> bool:
    """Whether two short models are isomorphic over Q.

    ``(A2, B2) = (s^4 A1, s^6 B1)`` for a rational ``s``: the j-invariants agree and
    the scaling ratio is a square (generic), a fourth power (``j = 1728``) or a sixth
    power (``j = 0``).

    """
    A1, B1 = map(Fraction, E1)
    A2, B2 = map(Fraction, E2)
    j1, j2 = j_invariant(A1, B1), j_invariant(A2, B2)
    if j1 is None or j2 is None or j1 != j2:
        return False
    if A1 == 0:
        return _is_power(B2 / B1, 6)
    if B1 == 0:
        return _is_power(A2 / A1, 4)
    return _is_power((B2 * A1) / (B1 * A2), 2)
