__all__ = ["Writer"]

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Optional, Type

from ..core.files import find_new_path


class Writer(ABC):
    """Output sink attached to :class:`Recorder`, one instance per class."""

    _instance: Dict[Type["Writer"], "Writer"] = {}
    _initialized: Dict[Type["Writer"], bool] = {}

    record_dir: Optional[Path]
    written: List[Path]

    def __new__(cls, *args, **kwargs):
        if cls._instance.get(cls) is None:
            cls._instance[cls] = super().__new__(cls)
            cls._initialized[cls] = False
        return cls._instance[cls]

    @abstractmethod
    def start_recording(self, record_dir: Path) -> None: ...

    @abstractmethod
    def append(self, *args: Any, **kwargs: Any) -> bool:
        """Write a piece of output.

        Returns
        -------
        handled
            Whether the data is handled by this writer.

        Notes
        -----
        The subclass should check the input type, as ``Recorder`` passes every piece
        of output to every writer.

        """
        ...

    @abstractmethod
    def stop_recording(self) -> None: ...

    def _new_path(self, name: str) -> Path:
        if self.record_dir is None:
            raise RuntimeError(f"{self.__class__.__name__} is not recording")
        return find_new_path(self.record_dir / Path(name).name)

    def _output_path(self, name: str) -> Path:
        """Path for a named output of the current recording.

        Files left by an earlier run are overwritten, so re-running a command
        reproduces the same file names. A name repeated within one recording gets
        a counter suffix.

        """
        if self.record_dir is None:
            raise RuntimeError(f"{self.__class__.__name__} is not recording")
        path = self.record_dir / Path(name).name
        if path in self.written:
            return find_new_path(path)
        return path
