__all__ = ["JsonWriter", "jsonable"]

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Mapping, Optional

import numpy as np

from ..core.inform import get_logger
from .table_writer import format_value
from .writer_base import Writer


def jsonable(value: Any, /) -> Any:
    """Plain JSON value; fractions become ``num/den`` strings, floats are rounded to
    the configured significant digits."""
    if isinstance(value, Mapping):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset, np.ndarray)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [jsonable(v) for v in items]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return format_value(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if not np.isfinite(value) else float(format_value(value))
    if value is None or isinstance(value, str):
        return value
    return str(value)


class JsonWriter(Writer):
    """Summaries as sorted-key JSON, handling ``append(name, mapping)`` when ``name``
    ends with ``.json``."""

    def __init__(self) -> None:
        if not self._initialized[self.__class__]:
            self.logger = get_logger(self.__class__.__name__)
            self.record_dir: Optional[Path] = None
            self.written: List[Path] = []
            self._initialized[self.__class__] = True

    def start_recording(self, record_dir: Path) -> None:
        self.record_dir = record_dir
        self.written = []

    def append(self, name: Any = None, summary: Any = None, *args, **kwargs) -> bool:
        if not (isinstance(name, str) and name.endswith(".json")):
            return False
        if not isinstance(summary, Mapping):
            return False
        if self.record_dir is None:
            self.logger.warning("JsonWriter is not recording")
            return False

        path = self._output_path(name)
        path.write_text(json.dumps(jsonable(summary), indent=2, sort_keys=True) + "\n")
        self.written.append(path)
        return True

    def stop_recording(self) -> None:
        self.record_dir = None
