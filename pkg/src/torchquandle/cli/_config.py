"""Command-line configuration."""

__all__ = ["RunConfig", "parse_args", "COMMANDS", "FORMATS"]

import argparse

from collections.abc import Sequence
from dataclasses import dataclass

from ..base.errors import ConfigError

COMMANDS = ("validate", "colorings", "count", "quiver", "poly", "table", "report")
FORMATS = ("text", "csv", "dot")

_NEEDS_QUANDLE = ("validate", "colorings", "count", "quiver", "poly", "table")
_NEEDS_LINK = ("colorings", "count", "quiver", "poly")


@dataclass
class RunConfig:
    """
    One CLI invocation.

    Elements and labels are 1-indexed, as printed in value tables.
    """

    command: str
    quandle_source: str | None = None
    link_source: str | None = None
    links: str | None = None
    element: int | str | None = None
    labels: tuple[int, ...] | None = None
    full: bool = False
    output: str | None = None
    format: str = "text"
    cap: int | None = None
    workers: int = 1
    verbose: int = 0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise ConfigError(f"unknown format {self.format!r}")
        if self.format == "dot" and self.command != "quiver":
            raise ConfigError("--format dot is only available for 'quiver'")
        if self.format == "csv" and self.command not in ("poly", "table"):
            raise ConfigError("--format csv is only available for 'poly' and 'table'")
        if self.command in _NEEDS_QUANDLE and not self.quandle_source:
            raise ConfigError(f"'{self.command}' needs --quandle")
        if self.command in _NEEDS_LINK and not self.link_source:
            raise ConfigError(f"'{self.command}' needs --link")
        if self.command == "table" and not self.links:
            raise ConfigError("'table' needs --links")
        if self.command == "poly" and self.element is None:
            raise ConfigError("'poly' needs --element (1-indexed) or --element all")
        if isinstance(self.element, int) and self.element < 1:
            raise ConfigError(f"elements are 1-indexed, got {self.element}")
        if self.labels is not None and any(x < 1 for x in self.labels):
            raise ConfigError("labels are 1-indexed")
        if self.cap is not None and self.cap < 1:
            raise ConfigError(f"--cap must be positive, got {self.cap}")
        if self.workers < 1:
            raise ConfigError(f"--workers must be positive, got {self.workers}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def parse_args(argv: Sequence[str] | None = None) -> RunConfig:
    """
    Parse command-line arguments.

    Parameters
    ----------
    argv : Sequence[str] | None, optional
        Arguments without the program name. The default is ``sys.argv[1:]``.

    Returns
    -------
    RunConfig
        The validated configuration.

    Raises
    ------
    ConfigError
        On unknown options or inconsistent settings.

    """
    parser = _Parser(
        prog="torchquandle",
        description="Quandle coloring homsets, action quivers and action polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = _Parser(add_help=False)
    common.add_argument("-q", "--quandle", dest="quandle_source", help=_QUANDLE_HELP)
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    common.add_argument("--cap", type=int, help="homset size cap")
    common.add_argument("-v", "--verbose", action="count", default=0)

    linked = _Parser(add_help=False)
    linked.add_argument("-l", "--link", dest="link_source", help=_LINK_HELP)

    sub.add_parser("validate", parents=[common, linked], help="validate a quandle table")
    sub.add_parser("colorings", parents=[common, linked], help="list all colorings")
    sub.add_parser("count", parents=[common, linked], help="counting invariant")

    quiver = sub.add_parser("quiver", parents=[common, linked], help="action quiver")
    quiver.add_argument("--labels", type=_int_list, help="comma list of acting elements")
    quiver.add_argument(
        "--full", action="store_true", help="full coloring quiver over all endomorphisms"
    )
    quiver.add_argument("--format", choices=("text", "dot"), default="text")

    poly = sub.add_parser("poly", parents=[common, linked], help="action polynomial")
    poly.add_argument("-e", "--element", type=_element, help="acting element or 'all'")
    poly.add_argument("--format", choices=("text", "csv"), default="text")

    table = sub.add_parser("table", parents=[common], help="polynomial table over links")
    table.add_argument("--links", help="comma list, corpus range 'A..B' or 'all'")
    table.add_argument("-e", "--element", type=_element, default="all")
    table.add_argument("--format", choices=("text", "csv"), default="csv")
    table.add_argument("--workers", type=int, default=1)

    report = sub.add_parser("report", help="recompute the published value tables")
    report.add_argument("-o", "--output")
    report.add_argument("--workers", type=int, default=1)
    report.add_argument("-v", "--verbose", action="count", default=0)

    args = vars(parser.parse_args(argv))
    return RunConfig(**{key: value for key, value in args.items() if value is not None})


_QUANDLE_HELP = (
    "table file or builtin: trivial:n, dihedral:n, alexander:n:t, "
    "conj:<group table file>, bundled:<four_element|five_element|six_element>"
)
_LINK_HELP = "corpus name or diagram file (.pd, .gauss, .braid or native)"


# %% local utils
def _element(text):
    if text == "all":
        return text
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'all', got {text!r}")


def _int_list(text):
    try:
        return tuple(int(token) for token in text.split(",") if token.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma list of integers, got {text!r}")
