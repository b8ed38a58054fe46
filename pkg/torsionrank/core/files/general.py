"""General file operations."""

__all__ = ["read", "find_new_path"]

import os
from pathlib import Path
from typing import IO, Union


def read(__path: Union[os.PathLike, str, IO], /) -> str:
    """Read a local file or a file-like object.

    Parameters
    ----------
    __path
        The file path, or an object with ``read`` method.

    Returns
    -------
    content
        The file content.

    Raises
    ------
    FileNotFoundError
        If the file couldn't be found.

    Examples
    --------
    >>> torsionrank.core.files.read("relative/path/to/config.toml")

    """
    if (not isinstance(__path, (str, os.PathLike))) and hasattr(__path, "read"):
        return __path.read()

    path = Path(__path)
    if not path.exists():
        raise FileNotFoundError(f"{str(__path)!r} does not exist.")
    try:
        return path.read_text()
    except UnicodeDecodeError:
        return path.read_bytes().decode("utf-8")


def find_new_path(path: Path, /) -> Path:
    """Return ``path`` or, if taken, ``name(1).ext``, ``name(2).ext`` and so on."""
    path = Path(path)
    if not path.exists():
        return path
    suffix = "".join(path.suffixes)
    stem = path.name[: len(path.name) - len(suffix)] if suffix else path.name
    idx = 1
    while True:
        candidate = path.parent / f"{stem}({idx}){suffix}"
        if not candidate.exists():
            return candidate
        idx += 1
