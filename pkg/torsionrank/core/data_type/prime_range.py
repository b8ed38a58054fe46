import re
from typing import List, Union

from sympy import primerange

from .value_range import ValueRange

_range_pattern = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


class PrimeRange(ValueRange[int]):
    """Closed integer interval whose primes are iterated over.

    Parameters
    ----------
    lower
        Smallest candidate, inclusive.
    upper
        Largest candidate, inclusive.

    Examples
    --------
    >>> torsionrank.PrimeRange.parse("5..20").primes()
    [5, 7, 11, 13, 17, 19]
    >>> torsionrank.PrimeRange.parse("7").primes()
    [7]

    """

    def __init__(self, lower: int, upper: int) -> None:
        super().__init__(int(lower), int(upper), strict=False)

    @classmethod
    def parse(cls, text: Union[str, int, "PrimeRange"], /) -> "PrimeRange":
        """Parse ``"a..b"`` or a single integer ``"a"``."""
        if isinstance(text, PrimeRange):
            return text
        if isinstance(text, int):
            return cls(text, text)
        match = _range_pattern.match(str(text))
        if match is None:
            raise ValueError(f"Cannot interpret {text!r} as a prime range 'a..b'.")
        lower = int(match.group(1))
        upper = lower if match.group(2) is None else int(match.group(2))
        return cls(lower, upper)

    def primes(self, minimum: int = 5) -> List[int]:
        """Primes ``p`` with ``max(lower, minimum) <= p <= upper``."""
        return [int(p) for p in primerange(max(self.lower, minimum), self.upper + 1)]

    def __str__(self) -> str:
        return f"{self.lower}..{self.upper}"
