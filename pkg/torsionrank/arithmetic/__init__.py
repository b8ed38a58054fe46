"""Modular arithmetic over Z/pZ and F_p[sqrt(-3)]."""

from .quadratic import *  # noqa: F401, F403
from .residue import *  # noqa: F401, F403
