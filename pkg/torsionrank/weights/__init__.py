"""Local weights ``|W_{G,J}|``, torsion-weighted class numbers and their moments."""

from .chebyshev import *  # noqa: F401, F403
from .class_number import *  # noqa: F401, F403
from .expectation import *  # noqa: F401, F403
from .weight_table import *  # noqa: F401, F403
