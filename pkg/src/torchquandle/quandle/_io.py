"""Quandle table file format and builtin specifications."""

__all__ = [
    "read_table",
    "read_quandle",
    "load_quandle",
    "format_quandle",
    "bundled_quandle",
    "bundled_quandle_names",
    "quandle_from_spec",
]

import logging

from importlib import resources
from pathlib import Path

import torch

from ..base.errors import ConfigError, OutOfRange, ParseError, UnknownName
from ._families import (
    alexander_quandle,
    conjugation_quandle,
    dihedral_quandle,
    trivial_quandle,
)
from ._quandle import Quandle, validate_quandle

logger = logging.getLogger(__name__)

_BUNDLED = ("four_element", "five_element", "six_element")


def read_table(text: str) -> torch.Tensor:
    """
    Parse the plain-text table format into a 0-indexed long tensor.

    Line 1 holds ``n``; the next ``n`` lines hold ``n`` whitespace-separated
    1-indexed entries. Text after ``#`` is ignored. Group tables use the
    same format.

    Parameters
    ----------
    text : str
        File contents.

    Returns
    -------
    torch.Tensor
        ``(n, n)`` long tensor.

    Raises
    ------
    ParseError
        If the text is malformed.
    OutOfRange
        If an entry lies outside ``1..n``.

    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise ParseError("empty table")

    lineno, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise ParseError(f"expected element count, got {header!r}", lineno) from None
    if n < 1:
        raise ParseError(f"element count must be positive, got {n}", lineno)
    if len(lines) - 1 != n:
        last = lines[-1][0]
        raise ParseError(f"expected {n} table rows, got {len(lines) - 1}", last)

    rows = []
    for lineno, line in lines[1:]:
        try:
            row = [int(token) for token in line.split()]
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", lineno) from None
        if len(row) != n:
            raise ParseError(f"expected {n} entries, got {len(row)}", lineno)
        for value in row:
            if not 1 <= value <= n:
                raise OutOfRange(value - 1, n, where=f"line {lineno}")
        rows.append([value - 1 for value in row])
    return torch.tensor(rows, dtype=torch.long)


def read_quandle(text: str, name: str | None = None) -> Quandle:
    """Parse and validate a quandle table."""
    return validate_quandle(read_table(text), name=name)


def load_quandle(path: str | Path) -> Quandle:
    """Read and validate a quandle table file."""
    path = Path(path)
    return read_quandle(_read_file(path, "quandle table"), name=path.stem)


def format_quandle(q: Quandle) -> str:
    """
    Write a quandle in the plain-text table format (1-indexed).

    Parameters
    ----------
    q : Quandle
        The quandle.

    Returns
    -------
    str
        Text accepted by ``read_quandle``.

    """
    lines = [str(q.n)]
    for row in q.tolist():
        lines.append(" ".join(str(value + 1) for value in row))
    return "\n".join(lines) + "\n"


def bundled_quandle_names() -> tuple[str, ...]:
    """Names accepted by ``bundled_quandle``."""
    return _BUNDLED


def bundled_quandle(name: str) -> Quandle:
    """
    Load one of the bundled quandle tables.

    Parameters
    ----------
    name : str
        ``"four_element"``, ``"five_element"`` or ``"six_element"``.

    Returns
    -------
    Quandle
        The validated quandle.

    Raises
    ------
    UnknownName
        If ``name`` is not bundled.

    """
    if name not in _BUNDLED:
        raise UnknownName(name, kind="bundled quandle")
    text = resources.files("torchquandle.data").joinpath(f"quandles/{name}.txt").read_text()
    return read_quandle(text, name=name)


def quandle_from_spec(spec: str) -> Quandle:
    """
    Build a quandle from a builtin specification or a table file.

    Accepted forms are ``trivial:n``, ``dihedral:n``, ``alexander:n:t``,
    ``conj:<group table file>``, ``bundled:<name>`` and a path to a table
    file.

    Parameters
    ----------
    spec : str
        The specification.

    Returns
    -------
    Quandle
        The quandle.

    Raises
    ------
    ConfigError
        If the specification is malformed or a table file cannot be read.

    """
    family, _, rest = spec.partition(":")
    if family == "conj" and rest:
        path = Path(rest)
        text = _read_file(path, "group table")
        return conjugation_quandle(read_table(text), name=f"conj:{path.stem}")
    if family == "bundled" and rest:
        return bundled_quandle(rest)
    if family in ("trivial", "dihedral", "alexander"):
        try:
            params = [int(token) for token in rest.split(":")]
        except ValueError:
            raise ConfigError(f"malformed quandle spec {spec!r}") from None
        if family == "alexander" and len(params) == 2:
            return alexander_quandle(*params)
        if family != "alexander" and len(params) == 1:
            build = trivial_quandle if family == "trivial" else dihedral_quandle
            return build(params[0])
        raise ConfigError(f"malformed quandle spec {spec!r}")

    path = Path(spec)
    if path.is_file():
        logger.debug("reading quandle table %s", path)
        return load_quandle(path)
    raise ConfigError(f"unknown quandle spec {spec!r}")


# %% local utils
def _read_file(path, kind):
    try:
        return path.read_text()
    except OSError as err:
        raise ConfigError(f"cannot read {kind} {path}: {err.strerror or err}") from None
