import logging
import time
from typing import Dict, Optional, Tuple, Union

from .. import environ

RESET = "\x1b[0m"


class ColorizeLevelNameFormatter(logging.Formatter):
    """Formatter which wraps the level name in an ANSI color sequence.

    The record itself is left untouched, so file handlers attached to the same
    logger still see the plain level name.

    """

    ColorPrefix: Dict[int, str] = {
        logging.NOTSET: RESET,
        logging.DEBUG: "\x1b[35m",
        logging.INFO: "\x1b[32m",
        logging.WARNING: "\x1b[33m",
        logging.ERROR: "\x1b[31m",
        logging.CRITICAL: "\x1b[41;97m",
    }

    def format(self, record: logging.LogRecord) -> str:
        band = min(max(record.levelno, 0) // 10 * 10, logging.CRITICAL)
        colored = logging.makeLogRecord(record.__dict__)
        colored.levelname = f"{self.ColorPrefix[band]}{record.levelname}{RESET}"
        return super().format(colored)


class Throttle(logging.Filter):
    """Drop repeats of a message template within ``duration_sec``.

    Records are keyed by logger name, level and the unformatted message, so
    ``logger.info("Box grown to %d", n)`` called from a loop is shown once per
    window whatever ``n`` is.

    """

    def __init__(self, duration_sec: Union[int, float]) -> None:
        super().__init__(name=self.__class__.__name__)
        self.duration_sec = duration_sec
        self._seen: Dict[Tuple[str, int, str], float] = {}

    def filter(self, record: logging.LogRecord) -> bool:
        now = time.monotonic()
        self._seen = {
            k: t for k, t in self._seen.items() if now - t <= self.duration_sec
        }
        key = (record.name, record.levelno, str(record.msg))
        if key in self._seen:
            return False
        self._seen[key] = now
        return True


class ConsoleHandler(logging.StreamHandler):
    """The one stream handler this package installs on the root logger."""


def _install_console_handler(min_level: Union[int, str]) -> None:
    root = logging.getLogger()
    for handler in [h for h in root.handlers if isinstance(h, ConsoleHandler)]:
        root.removeHandler(handler)
    handler = ConsoleHandler()
    handler.setLevel(min_level)
    handler.setFormatter(
        ColorizeLevelNameFormatter(
            "%(asctime)-s: [%(levelname)-s: %(filename)s#L%(lineno)s] %(message)s"
        )
    )
    root.addHandler(handler)


def get_logger(
    name: Optional[str] = None,
    min_level: Optional[Union[int, str]] = None,
    throttle_duration_sec: Union[int, float] = 1.0,
) -> logging.Logger:
    """Logger under the ``torsionrank`` namespace, printing to the console.

    Parameters
    ----------
    name
        Module or component name. ``__name__`` of a package module is used as is,
        anything else is prefixed with ``torsionrank.``.
    min_level
        Lowest level shown on the console. Defaults to ``TORSIONRANK_LOG_LEVEL``.
    throttle_duration_sec
        Window in which repeats of a message template are dropped.

    Examples
    --------
    >>> logger = torsionrank.get_logger("census")
    >>> logger.debug("Box grown to %d", 120)
    >>> logger.info("Enumerated %d curves", 10421)

    """
    if name is None or name == "torsionrank":
        logger_name = "torsionrank"
    elif name.startswith("torsionrank."):
        logger_name = name
    else:
        logger_name = f"torsionrank.{name}"
    logger = logging.getLogger(logger_name)

    throttles = [f for f in logger.filters if isinstance(f, Throttle)]
    if throttles:
        throttles[0].duration_sec = throttle_duration_sec
    else:
        logger.addFilter(Throttle(throttle_duration_sec))

    if min_level is None:
        min_level = environ.log_level.get()
    _install_console_handler(min_level)
    return logger
