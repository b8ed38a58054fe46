"""Elliptic curves over Q with prescribed torsion: local weights, censuses and
explicit-formula rank bounds."""

# Logger configuration
import logging

rootLogger = logging.getLogger()
# Set minimum log level; not just for stream handler but for any handler attached.
# Stream handler selectively handles INFO or higher (``TORSIONRANK_LOG_LEVEL``), but
# DEBUG records may still be consumed by other handlers.
rootLogger.setLevel(logging.DEBUG)
del logging, rootLogger


# Project version
from importlib.metadata import PackageNotFoundError, version  # noqa: E402

try:
    __version__ = version("torsionrank")
except PackageNotFoundError:
    __version__ = "0.0.0"
del version, PackageNotFoundError


# Subpackages
from . import arithmetic  # noqa: F401, E402
from . import core  # noqa: F401, E402
from . import curves  # noqa: F401, E402
from . import torsion  # noqa: F401, E402
from . import weights  # noqa: F401, E402
from . import census  # noqa: F401, E402
from . import rank_bounds  # noqa: F401, E402
from . import recorders  # noqa: F401, E402
from . import verification  # noqa: F401, E402

# Aliases
from .core import config, configure, get_logger  # noqa: F401, E402
from .core.data_type import *  # noqa: F401, E402, F403
from .core.exceptions import *  # noqa: F401, E402, F403
from .torsion.groups import TorsionGroup  # noqa: F401, E402
