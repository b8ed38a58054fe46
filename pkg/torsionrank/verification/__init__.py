"""Acceptance suite over the whole package."""

from .criteria import *  # noqa: F401, F403
from .params import *  # noqa: F401, F403
from .runner import *  # noqa: F401, F403
