"""Collection of data type definitions this package interprets."""

from .prime_range import PrimeRange  # noqa: F401
from .value_range import ValueRange  # noqa: F401
