__all__ = ["ConsoleLogWriter"]

import logging
from pathlib import Path
from typing import List, Optional

from .writer_base import Writer


class ConsoleLogWriter(Writer):
    """Copy of the console log in the output directory.

    Attributes
    ----------
    log_file_path
        Path to file into which all logs (severity >= ``logging.DEBUG``) are dumped.

    """

    def __init__(self) -> None:
        if not self._initialized[self.__class__]:
            fmt = "%(asctime)-s: [%(levelname)-s: %(filename)s#L%(lineno)s] %(message)s"
            self.log_format = logging.Formatter(fmt)
            self.log_file_path: Optional[Path] = None
            self.record_dir: Optional[Path] = None
            self.fh: Optional[logging.FileHandler] = None
            self.written: List[Path] = []
            self._initialized[self.__class__] = True

    def start_recording(self, record_dir: Path) -> None:
        self.record_dir = record_dir
        self.log_file_path = self._new_path("console.log")
        self.written = [self.log_file_path]

        self.fh = logging.FileHandler(self.log_file_path)
        self.fh.setLevel(logging.DEBUG)
        self.fh.setFormatter(self.log_format)
        logging.getLogger().addHandler(self.fh)

    def append(self, *args, **kwargs) -> bool:
        """This writer doesn't accept any data not issued by ``logging.Logger``."""
        return False

    def stop_recording(self) -> None:
        if self.fh is not None:
            logging.getLogger().removeHandler(self.fh)
            self.fh.close()
        self.fh = self.log_file_path = self.record_dir = None
