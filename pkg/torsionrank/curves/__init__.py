"""Per-prime data of elliptic curves: point counts, group structure, reduction."""

from .curve_mod_p import *  # noqa: F401, F403
from .curve_q import *  # noqa: F401, F403
from .trace_cache import *  # noqa: F401, F403
