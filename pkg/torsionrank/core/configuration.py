"""Run parameters read from ``config.toml``."""

__all__ = ["config", "configure", "Configuration", "ConfigurationView", "find_config"]

import shutil
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, Optional

from tomlkit.exceptions import ParseError

from . import environ
from .data_type import PrimeRange
from .exceptions import TorsionRankConfigurationError, TorsionRankParameterNameError
from .files import read, toml
from .inform import get_logger

DefaultTorsionRankRoot = Path.home() / ".torsionrank"
DefaultsPath = Path(__file__).parent / ".." / "defaults"
logger = get_logger(__name__)


parsers: Dict[str, Callable[[Any], Any]] = dict(
    _primes=PrimeRange.parse,
)
"""Parsers keyed by the suffix of flattened parameter names."""


def _parse(key: str, value: Any, /) -> Any:
    for suffix, parser in parsers.items():
        if key.endswith(suffix):
            try:
                return parser(value)
            except (TypeError, ValueError) as e:
                raise TorsionRankConfigurationError(
                    f"Invalid value for {key!r}: {value!r}"
                ) from e
    return value


class Configuration:
    """Collection of run parameters, read from a TOML file.

    Tables are flattened with ``_``, so ``[census] x_quick = ...`` is reachable as
    ``config.census_x_quick``, ``config["census_x_quick"]`` or, through a view,
    ``config.census.x_quick``.

    Examples
    --------
    >>> torsionrank.config.census.tol
    0.0001
    >>> torsionrank.config.reload()  # reflect edits to the file or env vars

    """

    _instance: Optional["Configuration"] = None

    def __new__(cls, *args, **kwargs):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._parameters = {}
            cls._instance._path = None
        return cls._instance

    @classmethod
    def from_file(cls, __path, /) -> Dict[str, Any]:
        """Parse a file into flattened, parsed parameters."""
        try:
            doc = toml.read(__path)
        except ParseError as e:
            raise TorsionRankConfigurationError(f"Cannot parse {__path!r}") from e
        return {k: _parse(k, v) for k, v in toml.flatten(doc).items()}

    def reload(self) -> None:
        """Reload the configuration.

        This method is to reflect the changes made to the configuration file or the
        change of environment variables.

        """
        path = find_config()
        self._parameters = self.from_file(path)
        self._path = path

    @classmethod
    def configure(cls) -> None:
        """Copy default configuration files into ``$HOME/.torsionrank/``."""
        DefaultTorsionRankRoot.mkdir(exist_ok=True)
        for file in DefaultsPath.glob("*.toml"):
            _target_path = DefaultTorsionRankRoot / file.name
            if _target_path.exists():
                logger.error(f"'{_target_path}' already exists, skipping...")
                continue
            shutil.copyfile(file, _target_path)
        cls().reload()

    @property
    def path(self) -> Optional[str]:
        """Path of the file the parameters were read from."""
        return self._path

    @property
    def parameters(self) -> Dict[str, Any]:
        return dict(self._parameters)

    def _lookup(self, key: str, /) -> Any:
        params = self.parameters
        if key in params:
            return params[key]
        if any(k.startswith(key + "_") for k in params):
            return self._view(key)
        raise TorsionRankParameterNameError(f"No parameter named {key!r}.")

    def _view(self, key: str, /) -> "ConfigurationView":
        return ConfigurationView(key)

    def __getattr__(self, key: str, /) -> Any:
        if key.startswith("_"):
            raise AttributeError(key)
        return self._lookup(key)

    def __getitem__(self, key: str, /) -> Any:
        try:
            return self._lookup(key)
        except TorsionRankParameterNameError as e:
            raise KeyError(key) from e

    def __contains__(self, key: str, /) -> bool:
        return key in self.parameters

    def __iter__(self) -> Iterator[str]:
        return iter(self.parameters)

    def get(self, key: str, default: Any = None, /) -> Any:
        try:
            return self[key]
        except KeyError:
            return default

    def keys(self):
        return self.parameters.keys()

    def items(self):
        return self.parameters.items()

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.parameters!r})"


class ConfigurationView(Configuration):
    """Sliced configuration, always reflecting the current state of ``config``."""

    def __new__(cls, prefix: str, /):
        return object.__new__(cls)

    def __init__(self, prefix: str, /) -> None:
        self._prefix = prefix

    @property
    def path(self) -> Optional[str]:
        return Configuration().path

    @property
    def parameters(self) -> Dict[str, Any]:
        length = len(self._prefix) + 1
        return {
            k[length:]: v
            for k, v in Configuration().parameters.items()
            if k.startswith(self._prefix + "_")
        }

    def _view(self, key: str, /) -> "ConfigurationView":
        return ConfigurationView(f"{self._prefix}_{key}")

    def reload(self) -> None:
        Configuration().reload()


def find_config() -> str:
    """Look for the configuration file from environment variables and defaults."""
    root_candidates = [str(DefaultTorsionRankRoot)]
    specified = environ.torsionrank_root.get()
    if specified is not None:
        root_candidates.insert(0, specified)

    for root in root_candidates:
        path = Path(root) / "config.toml"
        try:
            read(path)
            logger.info(f"Importing configuration from {str(path)!r}")
            return str(path)
        except FileNotFoundError:
            logger.debug(f"Config file not found at {str(path)!r}")

    logger.debug(
        "Config file not found, using the default parameters. "
        "To create the file with default parameters, run `torsionrank.configure()`."
    )
    return str(DefaultsPath / "config.toml")


config = Configuration()
"""Collection of run parameters."""
config.reload()
configure = Configuration.configure
