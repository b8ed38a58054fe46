__all__ = ["Recorder"]

import os
from pathlib import Path
from typing import List, Optional, Union

from ..core.inform import get_logger
from .writer_base import Writer


class Recorder:
    """Route command output to arbitrary writers.

    Parameters
    ----------
    record_root
        Output directory. Writers create their files directly inside it, or inside
        ``record_dir`` given to :meth:`start_recording`.

    Examples
    --------
    >>> recorder = torsionrank.recorders.Recorder("out")
    >>> recorder.add_writer(torsionrank.recorders.TableWriter())
    >>> recorder.start_recording()
    >>> recorder.append("moments.tsv", [{"G": "2", "n": 1, "bound": Fraction(19, 2)}])
    >>> recorder.stop_recording()

    """

    def __init__(self, record_root: Union[os.PathLike, str]) -> None:
        self.__writers: List[Writer] = []
        self.record_root = Path(record_root)
        self.recording_path: Optional[Path] = None
        self.written: List[Path] = []

        self.logger = get_logger(self.__class__.__name__)

    def add_writer(self, *writers: Writer) -> None:
        """Attach writer(s) to this recorder."""
        if any(type(w) is type for w in writers):
            raise TypeError("Writer should be instantiated.")
        self.__writers.extend(writers)

    @property
    def writers(self) -> List[Writer]:
        """List of attached writers."""
        return self.__writers

    def start_recording(self, record_dir: Optional[os.PathLike] = None) -> None:
        """Activate all attached writers."""
        if self.is_recording:
            return
        path = self.record_root
        if record_dir is not None:
            path = path / Path(record_dir)
        path.mkdir(parents=True, exist_ok=True)
        self.recording_path = path
        for writer in self.__writers:
            writer.start_recording(path)

    def append(self, *args, **kwargs) -> None:
        """Pass output to all attached writers."""
        if self.recording_path is None:
            raise RuntimeError("Recorder not started. Incoming data won't be kept.")
        handled = [writer.append(*args, **kwargs) for writer in self.__writers]
        if not any(handled):
            err_msg = f"No writer handled the data: {args, kwargs}"
            self.logger.warning(err_msg[slice(0, min(100, len(err_msg)))])

    def stop_recording(self) -> None:
        """Deactivate all attached writers."""
        if not self.is_recording:
            return
        for writer in self.__writers:
            written = getattr(writer, "written", [])
            self.written.extend(written)
            writer.stop_recording()
        self.recording_path = None

    @property
    def is_recording(self) -> bool:
        """Whether this recorder is accepting output or not."""
        return self.recording_path is not None

    def __enter__(self) -> "Recorder":
        self.start_recording()
        return self

    def __exit__(self, *exc) -> None:
        self.stop_recording()
