"""Signed Gauss code input with virtual crossings."""

__all__ = ["parse_signed_gauss"]

import logging
import re

from ..base.errors import ParseError, UnbalancedCrossing
from ._diagram import Crossing, Diagram, make_diagram

logger = logging.getLogger(__name__)

_CLASSICAL = re.compile(r"^([OU])(\d+)([+-])$", re.IGNORECASE)
_VIRTUAL = re.compile(r"^V(\d+)$", re.IGNORECASE)


def parse_signed_gauss(text: str, name: str | None = None) -> Diagram:
    """
    Parse a signed Gauss code.

    Each component is a sequence of tokens ``O<k><s>`` (pass over crossing
    ``k`` with sign ``s``), ``U<k><s>`` (pass under) and ``V<k>`` (virtual
    crossing). Components are separated by newlines or ``|``; tokens by
    whitespace or commas.

    Parameters
    ----------
    text : str
        The code.
    name : str | None, optional
        Identifier.

    Returns
    -------
    Diagram
        The diagram. Virtual crossings only count towards
        ``virtual_crossing_count``.

    Raises
    ------
    ParseError
        On malformed tokens or conflicting signs.
    UnbalancedCrossing
        If a label is not visited exactly twice with the right roles.

    """
    components = []
    for chunk in re.split(r"[|\n]", text):
        tokens = chunk.replace(",", " ").split()
        if tokens:
            components.append([_token(token) for token in tokens])
    if not components:
        raise ParseError("empty Gauss code")

    overs, unders, virtuals = {}, {}, {}
    arc_count = 0
    for tokens in components:
        under_positions = [i for i, (kind, _, _) in enumerate(tokens) if kind == "U"]
        count = max(len(under_positions), 1)
        arc = count - 1  # tokens before the first U sit on the last arc
        seen_under = 0
        for kind, label, sign in tokens:
            if kind == "V":
                virtuals[label] = virtuals.get(label, 0) + 1
            elif kind == "O":
                _record(overs, label, (arc_count + arc, sign))
            else:
                under_in = arc_count + arc
                arc = seen_under
                seen_under += 1
                _record(unders, label, (under_in, arc_count + arc, sign))
        arc_count += count

    clash = (overs.keys() | unders.keys()) & virtuals.keys()
    if clash:
        raise ParseError(f"label {min(clash)} used for classical and virtual crossings")
    for label, visits in virtuals.items():
        if visits != 2:
            raise UnbalancedCrossing(str(label))

    crossings = []
    for label in sorted(overs.keys() | unders.keys()):
        if label not in overs or label not in unders:
            raise UnbalancedCrossing(str(label), "needs one over and one under visit")
        over, over_sign = overs[label]
        under_in, under_out, under_sign = unders[label]
        if over_sign != under_sign:
            raise ParseError(f"crossing {label}: over and under signs disagree")
        crossings.append(Crossing(over_sign, over, under_in, under_out))

    logger.debug(
        "Gauss code: %d components, %d classical, %d virtual crossings",
        len(components),
        len(crossings),
        len(virtuals),
    )
    return make_diagram(arc_count, crossings, name=name, virtual_crossing_count=len(virtuals))


# %% local utils
def _token(token):
    match = _CLASSICAL.match(token)
    if match:
        kind, label, sign = match.groups()
        return kind.upper(), int(label), 1 if sign == "+" else -1
    match = _VIRTUAL.match(token)
    if match:
        return "V", int(match.group(1)), 0
    raise ParseError(f"malformed Gauss token {token!r}")


def _record(table, label, value):
    if label in table:
        raise UnbalancedCrossing(str(label), "visited more than once in the same role")
    table[label] = value
