"""Registry of the fifteen torsion groups an elliptic curve over Q can carry."""

__all__ = ["TorsionGroup", "ALL_GROUPS", "SMALL_GROUPS", "LARGE_GROUPS"]

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

from ..core.exceptions import UnsupportedGroupError


@dataclass(frozen=True)
class TorsionGroup:
    """One of the torsion groups ``Z/n1 x Z/n2`` allowed over Q.

    Attributes
    ----------
    label
        Canonical label, ``"0"`` for the trivial group, ``"5"`` for ``Z/5``,
        ``"2x4"`` for ``Z/2 x Z/4``.
    invariants
        ``(n1, n2)`` with ``n2 | n1``.
    d
        Growth exponent, ``|E_G(X)| ~ c(G) X^(1/d)``.
    e
        Exponent of the exceptional count in the preimage multiplicity lemma.
    cusps
        Number of cusps of the modular curve parametrizing the group.
    weights
        ``(w_a, w_b)`` with ``f(l^w_a a, l^w_b b) = l^4 f`` and likewise ``l^6`` for g.
    epsilon
        Least common multiple of the possible defects; for ``2x6`` and ``2x8`` the
        search cap ``2^4 * 3``.
    r
        Preimage multiplicity of the parametrization when known in closed form.

    Examples
    --------
    >>> G = torsionrank.TorsionGroup.parse("2x4")
    >>> G.d, G.order, G.is_large
    (6, 8, True)

    """

    label: str
    invariants: Tuple[int, int]
    d: Union[int, Fraction]
    e: int
    cusps: int
    weights: Tuple[Fraction, Fraction]
    epsilon: int = 1
    r: Optional[int] = field(default=None, compare=False)

    @property
    def n1(self) -> int:
        return self.invariants[0]

    @property
    def n2(self) -> int:
        return self.invariants[1]

    @property
    def order(self) -> int:
        return self.n1 * self.n2

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_cyclic(self) -> bool:
        return self.n2 == 1

    @property
    def is_large(self) -> bool:
        """Member of the family parametrized by coprime pairs with a defect."""
        return self.order > 4

    @property
    def is_small(self) -> bool:
        """Nontrivial group of order at most 4 (including ``2x2``)."""
        return 1 < self.order <= 4

    @property
    def delta(self) -> int:
        """1 for ``2x2`` (parity constraint on parameters), 0 otherwise."""
        return int(self.label == "2x2")

    @property
    def growth_exponent(self) -> Fraction:
        """``1/d``."""
        return 1 / Fraction(self.d)

    @property
    def total_weight(self) -> Fraction:
        return self.weights[0] + self.weights[1]

    def __str__(self) -> str:
        if self.is_trivial:
            return "trivial"
        if self.is_cyclic:
            return f"Z/{self.n1}"
        return f"Z/{self.n2}xZ/{self.n1}"

    @classmethod
    def parse(cls, text: Union[str, int, "TorsionGroup"], /) -> "TorsionGroup":
        """Look up a group from a loose label.

        Accepts ``"0"``, ``"1"``, ``"trivial"``, ``"5"``, ``"Z/5"``, ``"2x4"``,
        ``"2×4"``, ``"Z/2xZ/4"`` and integers.

        """
        if isinstance(text, TorsionGroup):
            return text
        key = str(text).strip().lower().replace("×", "x").replace(" ", "")
        key = key.replace("z/", "")
        if key in ("1", "trivial", "0"):
            key = "0"
        match = re.fullmatch(r"(\d+)x(\d+)", key)
        if match is not None:
            small, large = sorted(map(int, match.groups()))
            key = f"{small}x{large}"
        try:
            return _registry[key]
        except KeyError:
            raise UnsupportedGroupError(f"{text!r} is not a torsion group over Q.")


def _group(label, invariants, d, e, cusps, weights=None, epsilon=1, r=None):
    if weights is None:
        w = Fraction(6) / Fraction(d)
        weights = (w, w)
    else:
        weights = tuple(map(Fraction, weights))
    return TorsionGroup(label, invariants, d, e, cusps, weights, epsilon, r)


ALL_GROUPS: Tuple[TorsionGroup, ...] = (
    _group("0", (1, 1), Fraction(6, 5), 2, 1, (4, 6), r=1),
    _group("2", (2, 1), 2, 3, 2, (4, 2), r=1),
    _group("3", (3, 1), 3, 4, 2, (1, 3), r=2),
    _group("4", (4, 1), 4, 6, 3, (2, 1), r=2),
    _group("5", (5, 1), 6, 12, 4),
    _group("6", (6, 1), 6, 12, 4, epsilon=2),
    _group("7", (7, 1), 12, 24, 6, epsilon=3),
    _group("8", (8, 1), 12, 24, 6, epsilon=2),
    _group("9", (9, 1), 18, 36, 8, epsilon=3),
    _group("10", (10, 1), 18, 36, 8, epsilon=2),
    _group("12", (12, 1), 24, 48, 10, epsilon=6),
    _group("2x2", (2, 2), 3, 6, 3, (2, 2), r=6),
    _group("2x4", (4, 2), 6, 12, 4, epsilon=2),
    _group("2x6", (6, 2), 12, 24, 6, epsilon=48),
    _group("2x8", (8, 2), 24, 48, 10, epsilon=48),
)
"""All fifteen groups, trivial first."""

_registry: Dict[str, TorsionGroup] = {G.label: G for G in ALL_GROUPS}

SMALL_GROUPS = tuple(G for G in ALL_GROUPS if G.is_small)
LARGE_GROUPS = tuple(G for G in ALL_GROUPS if G.is_large)
