"""Persistent a_p cache, one ``"A B p a_p code"`` record per line."""

__all__ = ["TraceCache", "resolve_cache_path"]

import os
from pathlib import Path
from typing import Dict, Iterable, Iterator, Optional, Tuple, Union

from ..core import environ
from ..core.exceptions import CacheIntegrityError
from ..core.inform import get_logger
from ..torsion.polynomials import polynomial_checksum
from .curve_q import CurveQ, LocalData, Reduction, reduction_type

logger = get_logger(__name__)

Key = Tuple[int, int, int]
"""``(p, A, B)``, the sort order of the file."""

_MAGIC = "# torsionrank-cache"


def _package_version() -> str:
    from .. import __version__

    return __version__


def resolve_cache_path(
    explicit: Optional[Union[os.PathLike, str]] = None, /
) -> Optional[Path]:
    """``--cache`` value, else ``$TORSIONRANK_CACHE_DIR/traces.txt``, else none."""
    if explicit is not None:
        return Path(explicit)
    directory = environ.cache_dir.get()
    if directory:
        return Path(directory) / "traces.txt"
    return None


class TraceCache:
    """Mergeable store of local data keyed by ``(p, A, B)``.

    The header carries the package version and the checksum of the model
    polynomials; a mismatch makes the file stale.

    Examples
    --------
    >>> cache = torsionrank.curves.TraceCache()
    >>> cache.local_data(torsionrank.curves.CurveQ(2, 1), 5).a_p
    -1
    >>> cache.save("traces.txt")

    """

    def __init__(self) -> None:
        self._records: Dict[Key, Tuple[int, Reduction]] = {}

    def __len__(self) -> int:
        return len(self._records)

    def __contains__(self, key: Key) -> bool:
        return key in self._records

    def __iter__(self) -> Iterator[Key]:
        return iter(sorted(self._records))

    @staticmethod
    def header() -> str:
        return f"{_MAGIC} version={_package_version()} polys={polynomial_checksum()}"

    def add(self, A: int, B: int, p: int, a_p: int, reduction: Reduction) -> None:
        self._records[(p, A, B)] = (a_p, reduction)

    def get(self, A: int, B: int, p: int) -> Optional[LocalData]:
        try:
            a_p, reduction = self._records[(p, A, B)]
        except KeyError:
            return None
        return LocalData(p, a_p, reduction, A % p, B % p)

    def local_data(self, E: CurveQ, p: int, /) -> LocalData:
        """Cached local data, computed and stored on a miss."""
        cached = self.get(E.A, E.B, p)
        if cached is not None:
            return cached
        data = reduction_type(E, p)
        self.add(E.A, E.B, p, data.a_p, data.reduction)
        return data

    def fill(self, curves: Iterable[CurveQ], primes: Iterable[int]) -> int:
        """Compute missing records; returns the number of new entries."""
        before = len(self)
        primes = list(primes)
        for E in curves:
            for p in primes:
                self.local_data(E, p)
        return len(self) - before

    def merge(self, other: "TraceCache", /) -> "TraceCache":
        """Union of two caches; conflicting records are an integrity error."""
        merged = TraceCache()
        merged._records.update(self._records)
        for key, value in other._records.items():
            if key in merged._records and merged._records[key] != value:
                raise CacheIntegrityError(
                    "<merge>", None, f"conflicting records for (p, A, B) = {key}"
                )
            merged._records[key] = value
        return merged

    def save(self, path: Union[os.PathLike, str], /) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        lines = [self.header()]
        for p, A, B in sorted(self._records):
            a_p, reduction = self._records[(p, A, B)]
            lines.append(f"{A} {B} {p} {a_p} {reduction.code}")
        path.write_text("\n".join(lines) + "\n")
        logger.info(f"Saved {len(self)} local records to {str(path)!r}")
        return path

    @classmethod
    def load(cls, path: Union[os.PathLike, str], /) -> "TraceCache":
        """Read a cache file, validating header, record syntax and ordering.

        Raises
        ------
        CacheIntegrityError
            Naming the file and the 1-based line of the first problem.

        """
        path = Path(path)
        cache = cls()
        with path.open() as f:
            header = f.readline().rstrip("\n")
            if header != cls.header():
                raise CacheIntegrityError(
                    path, 1, f"stale or foreign header {header!r}, expected "
                    f"{cls.header()!r}"
                )
            previous: Optional[Key] = None
            for lineno, line in enumerate(f, start=2):
                if not line.strip():
                    continue
                fields = line.split()
                try:
                    A, B, p, a_p = map(int, fields[:4])
                    reduction = Reduction.from_code(fields[4])
                    if len(fields) != 5:
                        raise ValueError
                except (ValueError, KeyError, IndexError):
                    raise CacheIntegrityError(path, lineno, f"malformed {line!r}")
                key = (p, A, B)
                if previous is not None and key <= previous:
                    raise CacheIntegrityError(path, lineno, "records not sorted")
                previous = key
                cache._records[key] = (a_p, reduction)
        logger.debug(f"Loaded {len(cache)} local records from {str(path)!r}")
        return cache

    @classmethod
    def open(cls, path: Optional[Union[os.PathLike, str]], /) -> "TraceCache":
        """Load ``path`` if it exists, otherwise start empty."""
        if path is not None and Path(path).exists():
            return cls.load(path)
        return cls()
