"""General operations and object model definitions of torsionrank.

Important
---------
The implementations in this namespace must not depend on the arithmetic subpackages
(``arithmetic``, ``curves``, ``torsion`` and those built on them); such dependencies
end in circular imports.

"""

from . import environ  # noqa: F401
from . import security  # noqa: F401
from . import types  # noqa: F401
from .configuration import *  # noqa: F401, F403
from .data_type import *  # noqa: F401, F403
from .exceptions import *  # noqa: F401, F403
from .files import *  # noqa: F401, F403
from .inform import *  # noqa: F401, F403
