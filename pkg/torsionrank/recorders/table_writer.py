__all__ = ["TableWriter", "format_value", "to_frame"]

from fractions import Fraction
from numbers import Integral, Real
from pathlib import Path
from typing import Any, List, Mapping, Optional, Sequence, Union

import numpy as np
import pandas as pd

from ..core.configuration import config
from ..core.inform import get_logger
from .writer_base import Writer

Rows = Union[pd.DataFrame, Sequence[Mapping[str, Any]]]


def format_value(value: Any, /, digits: Optional[int] = None) -> str:
    """Text form of one table cell.

    Fractions print as ``num/den``, floats with ``digits`` significant digits.

    Examples
    --------
    >>> torsionrank.recorders.format_value(Fraction(7, 300))
    '7/300'
    >>> torsionrank.recorders.format_value(1 / 3)
    '0.333333333333'

    """
    if digits is None:
        digits = config.get("output_digits", 12)
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, Integral):
        return str(int(value))
    if isinstance(value, Real):
        return f"{float(value):.{digits}g}"
    return str(value)


def to_frame(rows: Rows, /) -> pd.DataFrame:
    if isinstance(rows, pd.DataFrame):
        return rows
    return pd.DataFrame(list(rows))


class TableWriter(Writer):
    """Tab-separated tables, one file per ``append``.

    Handles ``append(name, rows)`` when ``name`` ends with ``.tsv``; ``rows`` is a
    DataFrame or a sequence of mappings sharing their keys.

    """

    def __init__(self) -> None:
        if not self._initialized[self.__class__]:
            self.logger = get_logger(self.__class__.__name__)
            self.record_dir: Optional[Path] = None
            self.written: List[Path] = []
            self._initialized[self.__class__] = True

    def start_recording(self, record_dir: Path) -> None:
        self.record_dir = record_dir
        self.written = []

    def append(self, name: Any = None, rows: Any = None, *args, **kwargs) -> bool:
        if not (isinstance(name, str) and name.endswith(".tsv")):
            return False
        if not isinstance(rows, (pd.DataFrame, list, tuple)):
            return False
        if self.record_dir is None:
            self.logger.warning("TableWriter is not recording")
            return False

        frame = to_frame(rows).applymap(format_value)
        path = self._output_path(name)
        path.write_text(frame.to_csv(sep="\t", index=False))
        self.written.append(path)
        self.logger.debug(f"Wrote {len(frame)} rows to {path}")
        return True

    def stop_recording(self) -> None:
        self.record_dir = None
