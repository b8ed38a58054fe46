from . import toml
from .general import find_new_path, read

__all__ = ["toml", "read", "find_new_path"]
