__all__ = ["CensusWriter", "census_name"]

import json
from pathlib import Path
from typing import Any, List, Optional

from ..census import CensusResult
from ..core.inform import get_logger
from ..torsion import polynomial_checksum
from .json_writer import jsonable
from .writer_base import Writer


def census_name(census: CensusResult, /) -> str:
    """``census_<label>_<X>.txt``."""
    return f"census_{census.G.label}_{census.X}.txt"


class CensusWriter(Writer):
    """Minimal models of a census, one ``A B`` line each, with a
    ``<name>.meta.json`` sidecar describing the run."""

    def __init__(self) -> None:
        if not self._initialized[self.__class__]:
            self.logger = get_logger(self.__class__.__name__)
            self.record_dir: Optional[Path] = None
            self.written: List[Path] = []
            self._initialized[self.__class__] = True

    def start_recording(self, record_dir: Path) -> None:
        self.record_dir = record_dir
        self.written = []

    def append(self, census: Any = None, *args, **kwargs) -> bool:
        if not isinstance(census, CensusResult):
            return False
        if self.record_dir is None:
            self.logger.warning("CensusWriter is not recording")
            return False

        path = self._output_path(census_name(census))
        path.write_text("".join(f"{A} {B}\n" for A, B in census))
        meta = {
            "G": census.G.label,
            "X": census.X,
            "count": len(census),
            "histogram": {str(k): v for k, v in sorted(census.histogram.items())},
            "singular": census.singular,
            "box": list(census.box),
            "multiplicity": census.multiplicity,
            "empirical_multiplicity": census.empirical,
            "polys": polynomial_checksum(),
        }
        meta_path = path.with_name(path.stem + ".meta.json")
        text = json.dumps(jsonable(meta), indent=2, sort_keys=True)
        meta_path.write_text(text + "\n")
        self.written.extend([path, meta_path])
        self.logger.info(f"Saved {len(census)} models to {path}")
        return True

    def stop_recording(self) -> None:
        self.record_dir = None
