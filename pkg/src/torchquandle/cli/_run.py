"""Command-line entry point."""

__all__ = ["run", "main", "expand_links"]

import logging
import sys

from collections.abc import Sequence
from pathlib import Path
from typing import TextIO

from ..base.errors import ConfigError, InputError, InvariantError, LimitError, QuandleError
from ..diagram import corpus_names, diagram_from_source, table_links
from ..homset import enumerate_colorings
from ..quandle import quandle_from_spec
from ..quiver import (
    action_polynomial,
    action_quiver,
    export_dot,
    format_csv,
    full_coloring_quiver,
    TableRow,
)
from .._functional import polynomial_table
from ._config import RunConfig, parse_args
from ._report import reproduce_published_tables

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_INPUT, EXIT_LIMIT, EXIT_INTERNAL = 0, 1, 2, 3


def run(config: RunConfig, stream: TextIO | None = None) -> int:
    """
    Execute one command.

    Parameters
    ----------
    config : RunConfig
        The invocation.
    stream : TextIO | None, optional
        Output stream when ``config.output`` is unset. The default is stdout.

    Returns
    -------
    int
        ``0`` on success, ``1`` on input errors (unreadable files and an
        unwritable output path included), ``2`` when a limit is exceeded and
        ``3`` on internal invariant failures.

    """
    try:
        text, status = _COMMANDS[config.command](config)
    except InputError as err:
        return _fail(err, EXIT_INPUT)
    except LimitError as err:
        return _fail(err, EXIT_LIMIT)
    except InvariantError as err:
        return _fail(err, EXIT_INTERNAL)
    except OSError as err:
        return _fail(ConfigError(f"cannot read {err.filename}: {err.strerror}"), EXIT_INPUT)

    if config.output:
        try:
            Path(config.output).write_text(text)
        except OSError as err:
            message = f"cannot write {config.output}: {err.strerror}"
            return _fail(ConfigError(message), EXIT_INPUT)
    else:
        stream = sys.stdout if stream is None else stream
        stream.write(text)
    return status


def main(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, configure logging and run."""
    try:
        config = parse_args(argv)
    except ConfigError as err:
        return _fail(err, EXIT_INPUT)
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(config.verbose, 2)]
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )
    return run(config)


def expand_links(spec: str) -> tuple[str, ...]:
    """
    Expand a link list: ``all``, a corpus range ``A..B`` or a comma list.

    Raises
    ------
    ConfigError
        If a range endpoint is not a corpus name.

    """
    if spec == "all":
        return table_links()
    if ".." in spec:
        first, _, last = spec.partition("..")
        names = corpus_names()
        if first not in names or last not in names:
            raise ConfigError(f"range {spec!r} needs corpus names at both ends")
        start, stop = names.index(first), names.index(last)
        selected = set(table_links())
        return tuple(name for name in names[start : stop + 1] if name in selected)
    return tuple(token.strip() for token in spec.split(",") if token.strip())


# %% commands
def _validate(config):
    q = _load(quandle_from_spec, config.quandle_source)
    lines = [f"valid quandle {q.name or config.quandle_source} with {q.n} elements"]
    if config.link_source:
        d = _load(diagram_from_source, config.link_source)
        lines.append(
            f"valid diagram {d.name}: {d.arc_count} arcs, {d.crossing_count} crossings, "
            f"{d.component_count} components"
        )
    return "\n".join(lines) + "\n", EXIT_OK


def _colorings(config):
    return _homset(config).format(), EXIT_OK


def _count(config):
    return f"{len(_homset(config))}\n", EXIT_OK


def _quiver(config):
    h = _homset(config)
    if config.full:
        quiver = full_coloring_quiver(h)
    else:
        labels = None if config.labels is None else [x - 1 for x in config.labels]
        quiver = action_quiver(h, labels)
    if config.format == "dot":
        return export_dot(quiver), EXIT_OK
    offset = 0 if config.full else 1
    lines = [f"{source} -> {target} [{label + offset}]" for source, target, label in quiver.edges]
    return "".join(f"{line}\n" for line in lines), EXIT_OK


def _poly(config):
    h = _homset(config)
    elements = range(h.quandle.n) if config.element == "all" else [config.element - 1]
    polynomials = [action_polynomial(h, x) for x in elements]
    if config.format == "csv":
        rows = [
            TableRow(h.diagram.name or "", h.quandle.name or "", p.acting_element, p, len(h))
            for p in polynomials
        ]
        return format_csv(rows), EXIT_OK
    if config.element == "all":
        lines = [f"{p.acting_element + 1}: {p}" for p in polynomials]
    else:
        lines = [str(polynomials[0])]
    return "".join(f"{line}\n" for line in lines), EXIT_OK


def _table(config):
    q = _load(quandle_from_spec, config.quandle_source)
    _log_labels(q, config)
    elements = None if config.element == "all" else [config.element - 1]
    links = [_load(diagram_from_source, link) for link in expand_links(config.links)]
    rows = polynomial_table(q, links, elements, cap=config.cap, workers=config.workers)
    if config.format == "csv":
        return format_csv(rows), EXIT_OK
    lines = [
        f"{row.link}\t{row.element + 1}\t{row.polynomial}\t{row.counting}" for row in rows
    ]
    return "".join(f"{line}\n" for line in lines), EXIT_OK


def _report(config):
    report = reproduce_published_tables(workers=config.workers, cap=config.cap)
    return report.format(), EXIT_OK if report.ok else EXIT_INPUT


_COMMANDS = {
    "validate": _validate,
    "colorings": _colorings,
    "count": _count,
    "quiver": _quiver,
    "poly": _poly,
    "table": _table,
    "report": _report,
}


# %% local utils
def _homset(config):
    q = _load(quandle_from_spec, config.quandle_source)
    _log_labels(q, config)
    d = _load(diagram_from_source, config.link_source)
    return enumerate_colorings(d, q, cap=config.cap)


def _load(loader, source):
    try:
        return loader(source)
    except QuandleError as err:
        if Path(source).is_file():
            err.source = str(source)
        raise


def _log_labels(q, config):
    if config.verbose:
        labels = ", ".join(f"{label}={index}" for index, label in enumerate(q.labels))
        logger.info("element labels of %s (label=internal index): %s", q.name, labels)


def _fail(err, status):
    source = getattr(err, "source", None)
    prefix = f"{source}: " if source else ""
    print(f"error: {prefix}{err}", file=sys.stderr)
    return status
