"""Bounds on average analytic rank and its moments from the one-level density."""

from .bounds import *  # noqa: F401, F403
from .explicit_formula import *  # noqa: F401, F403
from .fejer import *  # noqa: F401, F403
from .sigma import *  # noqa: F401, F403
