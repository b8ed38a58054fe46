"""Torsion parametrizations: groups, model polynomials, Tate forms and defects."""

from .defect import *  # noqa: F401, F403
from .groups import *  # noqa: F401, F403
from .polynomials import *  # noqa: F401, F403
from .tate import *  # noqa: F401, F403
