"""Writers for tables, summaries and censuses, routed through a recorder."""

# Core recorder
from .recorder import *  # noqa: F401, F403

# Writers
from .census_writer import *  # noqa: F401, F403
from .console_log_writer import *  # noqa: F401, F403
from .json_writer import *  # noqa: F401, F403
from .table_writer import *  # noqa: F401, F403
from .writer_base import *  # noqa: F401, F403
