"""Type aliases shared across the package."""

from fractions import Fraction
from typing import Protocol, Tuple, TypeVar, Union

T = TypeVar("T")

Rational = Union[int, Fraction]
"""Exact rational value; plain ``int`` where no denominator is needed."""

IntPair = Tuple[int, int]
"""Integer pair, typically a model ``(A, B)`` or a parameter ``(a, b)``."""


class SupportsComparison(Protocol):
    def __eq__(self: T, other: T, /) -> bool: ...

    def __ne__(self: T, other: T, /) -> bool: ...

    def __lt__(self: T, other: T, /) -> bool: ...

    def __le__(self: T, other: T, /) -> bool: ...

    def __gt__(self: T, other: T, /) -> bool: ...

    def __ge__(self: T, other: T, /) -> bool: ...
