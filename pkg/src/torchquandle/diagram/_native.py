"""Native crossing-list format."""

__all__ = ["parse_crossing_list", "load_diagram", "serialize"]

import logging

from pathlib import Path

from ..base.errors import ParseError
from ._diagram import Crossing, Diagram, make_diagram

logger = logging.getLogger(__name__)

_SIGNS = {"+1": 1, "1": 1, "+": 1, "-1": -1, "-": -1}


def parse_crossing_list(text: str, name: str | None = None) -> Diagram:
    """
    Parse a diagram in the native crossing-list format.

    The format is line based and 1-indexed::

        name 3_1
        arcs 3
        +1 2 1 3    # sign over under_in under_out
        +1 3 2 1
        +1 1 3 2
        component 1 3 2

    ``name``, ``virtual <k>`` and ``component`` lines are optional.

    Parameters
    ----------
    text : str
        File contents.
    name : str | None, optional
        Identifier used when the text has no ``name`` line.

    Returns
    -------
    Diagram
        The validated diagram.

    Raises
    ------
    ParseError
        On malformed lines or out-of-range arcs.
    ArcConsistencyError
        If the arc bookkeeping is inconsistent.

    """
    arc_count = None
    virtual = 0
    rows = []
    components = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        keyword = tokens[0].lower()
        if keyword == "arcs":
            if arc_count is not None:
                raise ParseError("duplicate 'arcs' line", lineno)
            arc_count = _single_int(tokens, lineno)
            if arc_count < 1:
                raise ParseError(f"arc count must be positive, got {arc_count}", lineno)
        elif keyword == "name":
            if len(tokens) != 2:
                raise ParseError("expected 'name <identifier>'", lineno)
            name = tokens[1]
        elif keyword == "virtual":
            virtual = _single_int(tokens, lineno)
            if virtual < 0:
                raise ParseError("virtual crossing count must be nonnegative", lineno)
        elif keyword == "component":
            components.append((lineno, _ints(tokens[1:], lineno)))
        else:
            if len(tokens) != 4 or tokens[0] not in _SIGNS:
                raise ParseError(
                    f"expected '<sign> <over> <under_in> <under_out>', got {raw.strip()!r}",
                    lineno,
                )
            rows.append((lineno, _SIGNS[tokens[0]], _ints(tokens[1:], lineno)))

    if arc_count is None:
        raise ParseError("missing 'arcs N' line")

    crossings = []
    for lineno, sign, arcs in rows:
        _check_arcs(arcs, arc_count, lineno)
        over, under_in, under_out = (arc - 1 for arc in arcs)
        crossings.append(Crossing(sign, over, under_in, under_out))
    for lineno, arcs in components:
        _check_arcs(arcs, arc_count, lineno)

    explicit = [[arc - 1 for arc in arcs] for _, arcs in components] or None
    return make_diagram(arc_count, crossings, explicit, name, virtual)


def load_diagram(path: str | Path) -> Diagram:
    """Read a native diagram file; the name defaults to the file stem."""
    path = Path(path)
    logger.debug("reading diagram %s", path)
    return parse_crossing_list(path.read_text(), name=path.stem)


def serialize(d: Diagram) -> str:
    """
    Write a diagram in the native format.

    Parameters
    ----------
    d : Diagram
        The diagram.

    Returns
    -------
    str
        Text that ``parse_crossing_list`` reads back into an equal diagram.

    """
    lines = []
    if d.name:
        lines.append(f"name {d.name}")
    if d.virtual_crossing_count:
        lines.append(f"virtual {d.virtual_crossing_count}")
    lines.append(f"arcs {d.arc_count}")
    for c in d.crossings:
        lines.append(f"{c.sign:+d} {c.over + 1} {c.under_in + 1} {c.under_out + 1}")
    for component in d.components:
        lines.append("component " + " ".join(str(arc + 1) for arc in component))
    return "\n".join(lines) + "\n"


# %% local utils
def _ints(tokens, lineno):
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise ParseError(f"non-integer token in {' '.join(tokens)!r}", lineno) from None


def _single_int(tokens, lineno):
    if len(tokens) != 2:
        raise ParseError(f"expected '{tokens[0]} <integer>'", lineno)
    return _ints(tokens[1:], lineno)[0]


def _check_arcs(arcs, arc_count, lineno):
    for arc in arcs:
        if not 1 <= arc <= arc_count:
            raise ParseError(f"arc {arc} outside 1..{arc_count}", lineno)
