"""Check the running environment before spawning worker pools."""

from .load_check import LoadChecker  # noqa: F401
from .pool import map_stripes, stripes  # noqa: F401
