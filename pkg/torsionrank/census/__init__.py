"""Censuses of curves with prescribed torsion and their local statistics."""

from .constants import *  # noqa: F401, F403
from .corollaries import *  # noqa: F401, F403
from .density import *  # noqa: F401, F403
from .enumeration import *  # noqa: F401, F403
from .region import *  # noqa: F401, F403
