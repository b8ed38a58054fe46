"""Configuration files in TOML."""

__all__ = ["read", "flatten"]

import os
from typing import IO, Any, Dict, Mapping, Union

from tomlkit import TOMLDocument, parse
from tomlkit.items import Table

from .general import read as read_file


def read(__file: Union[os.PathLike, str, IO], /) -> TOMLDocument:
    """Parse a TOML file, given by path or as an open file.

    Raises
    ------
    tomlkit.exceptions.ParseError
        If the content is not valid TOML.

    """
    return parse(read_file(__file))


def flatten(
    doc: Mapping[str, Any], /, *, prefix: str = "", sep: str = "_"
) -> Dict[str, Any]:
    """Join nested table keys with ``sep`` and unwrap the values.

    Inline tables stay single values, so ``x = { "2" = 1000 }`` is kept as a
    mapping from group label to height bound.

    Examples
    --------
    >>> torsionrank.core.files.toml.flatten({"census": {"x": 1, "tol": 2}, "w": 3})
    {'census_x': 1, 'census_tol': 2, 'w': 3}

    """
    flat: Dict[str, Any] = {}
    for key, value in doc.items():
        name = f"{prefix}{sep}{key}" if prefix else key
        if isinstance(value, Table) or type(value) is dict:
            flat.update(flatten(value, prefix=name, sep=sep))
        else:
            flat[name] = value.unwrap() if hasattr(value, "unwrap") else value
    return flat
