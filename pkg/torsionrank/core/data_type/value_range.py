from typing import Any, Generic, Iterable, Iterator, TypeVar

import numpy as np

from ..types import SupportsComparison

T = TypeVar("T", bound=SupportsComparison)


class ValueRange(Generic[T]):
    """Interval ``[lower, upper]``, or ``(lower, upper)`` when ``strict``.

    Examples
    --------
    >>> hasse = torsionrank.ValueRange(-4, 4)
    >>> 4 in hasse
    True
    >>> 4 in torsionrank.ValueRange(-4, 4, strict=True)
    False

    """

    def __init__(self, lower: T, upper: T, strict: bool = False) -> None:
        try:
            reversed_ = lower > upper
        except TypeError:
            raise TypeError(f"Bounds {lower!r} and {upper!r} are not comparable.")
        if reversed_:
            raise ValueError(f"Lower bound {lower} exceeds upper bound {upper}.")
        self.lower, self.upper, self.strict = lower, upper, strict

    def __contains__(self, value: Any, /) -> bool:
        if self.strict:
            return self.lower < value < self.upper
        return self.lower <= value <= self.upper

    def __iter__(self) -> Iterator[T]:
        yield self.lower
        yield self.upper

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}({self.lower!r}, {self.upper!r}, "
            f"strict={self.strict})"
        )

    def __eq__(self, other: Any, /) -> bool:
        if type(other) is not type(self):
            return False
        return (self.lower, self.upper, self.strict) == (
            other.lower,
            other.upper,
            other.strict,
        )

    def contain_all(self, values: Iterable[Any], /) -> bool:
        """Whether every value lies in the range; vacuously true when empty.

        Examples
        --------
        >>> torsionrank.ValueRange(5, 10**4).contain_all([5, 7, 10007])
        False

        """
        values = np.asarray(list(values))
        if values.size == 0:
            return True
        if self.strict:
            inside = (self.lower < values) & (values < self.upper)
        else:
            inside = (self.lower <= values) & (values <= self.upper)
        return bool(inside.all())
