"""Support ``sigma`` of the test function allowed by the prime-sum error terms.

Every error term of the prime sums is ``X^(offset + slope sigma)`` relative to the
main term ``X^(1/d)``, so the admissible supports form the interval below the
smallest ``-offset/slope``.

"""

__all__ = [
    "ExponentConstraint",
    "exponent_constraints",
    "sigma_for",
    "average_rank_bound",
    "N_LEVEL_GROUPS",
]

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from ..core.exceptions import UnsupportedGroupError
from ..torsion import TorsionGroup

AVERAGE_RANK_GROUPS = ("3", "4")
N_LEVEL_GROUPS = ("2", "2x2")


@dataclass(frozen=True)
class ExponentConstraint:
    """``offset + slope * sigma < 0``."""

    source: str
    offset: Fraction
    slope: Fraction

    @property
    def supremum(self) -> Fraction:
        return -self.offset / self.slope


def exponent_constraints(
    G: Union[TorsionGroup, str], /, n: Optional[int] = None
) -> Tuple[ExponentConstraint, ...]:
    """Error-exponent constraints for the average rank (``n=None``) or for the
    ``n``-th moment.

    Raises
    ------
    UnsupportedGroupError
        If the group does not admit the requested bound.

    """
    G = TorsionGroup.parse(G)
    d, e = Fraction(G.d), Fraction(G.e)
    if n is not None:
        if G.label not in N_LEVEL_GROUPS:
            raise UnsupportedGroupError(f"No n-level bound for {G}.")
        if n < 1:
            raise ValueError(f"Moment order must be positive, got n={n}.")
        return (
            ExponentConstraint("exceptional", 1 / e - 1 / d, Fraction(3 * n, 2)),
            ExponentConstraint(
                "trace-sum", Fraction(1, 12) - 1 / d, Fraction(5 * n, 2)
            ),
        )
    if G.is_large:
        # parameters counted directly; only the exceptional count X^(1/e) remains
        return (
            ExponentConstraint("S1", -1 / e, Fraction(5, 2)),
            ExponentConstraint("S2", -1 / e, Fraction(1)),
        )
    if G.label not in AVERAGE_RANK_GROUPS:
        raise UnsupportedGroupError(f"No average-rank bound for {G}.")
    return (
        ExponentConstraint("S1 exceptional", 1 / e - 1 / d, Fraction(3, 2)),
        ExponentConstraint("S1 trace-sum", Fraction(1, 12) - 1 / d, Fraction(5, 2)),
        ExponentConstraint("S2 exceptional", 1 / e - 1 / d, Fraction(1, 2)),
        ExponentConstraint("S2 trace-sum", Fraction(1, 12) - 1 / d, Fraction(1)),
    )


def sigma_for(G: Union[TorsionGroup, str], /, n: Optional[int] = None) -> Fraction:
    """Largest admissible support.

    Examples
    --------
    >>> torsionrank.rank_bounds.sigma_for("3")
    Fraction(1, 18)
    >>> torsionrank.rank_bounds.sigma_for("2", n=1)
    Fraction(1, 9)

    """
    return min(c.supremum for c in exponent_constraints(G, n))


def average_rank_bound(G: Union[TorsionGroup, str], /) -> Fraction:
    """``1/2 + 1/sigma``.

    For ``Z/2`` and ``2x2`` this is the first moment bound, with ``sigma_1``.

    Examples
    --------
    >>> torsionrank.rank_bounds.average_rank_bound("7")
    Fraction(121, 2)

    """
    G = TorsionGroup.parse(G)
    n = 1 if G.label in N_LEVEL_GROUPS else None
    return Fraction(1, 2) + 1 / sigma_for(G, n)
