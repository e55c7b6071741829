"""Closed braid input."""

__all__ = ["parse_braid", "diagram_from_braid"]

import logging

from collections.abc import Sequence

from networkx.utils import UnionFind

from ..base.errors import ParseError
from ._diagram import Crossing, Diagram, make_diagram

logger = logging.getLogger(__name__)


def parse_braid(text: str, name: str | None = None) -> Diagram:
    """
    Parse a braid word and close it.

    The text is an optional ``strands <m>`` line followed by one line of
    space-separated generators, e.g. ``1 -2 1 -2``. Text after ``#`` is
    ignored.

    Parameters
    ----------
    text : str
        The braid.
    name : str | None, optional
        Identifier.

    Returns
    -------
    Diagram
        The closure.

    """
    strands = None
    word = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if tokens[0].lower() == "strands" and len(tokens) != 2:
            raise ParseError("expected 'strands <m>'", lineno)
        try:
            if tokens[0].lower() == "strands":
                strands = int(tokens[1])
            else:
                word.extend(int(token) for token in tokens)
        except ValueError:
            raise ParseError(f"non-integer token in {raw.strip()!r}", lineno) from None
    return diagram_from_braid(word, strands, name)


def diagram_from_braid(
    word: Sequence[int], strands: int | None = None, name: str | None = None
) -> Diagram:
    """
    Diagram of the closure of a braid word.

    Strands run downwards. Generator ``+i`` is a positive crossing between
    positions ``i`` and ``i+1`` (1-based) in which the strand arriving from
    position ``i+1`` passes over; ``-i`` is its inverse. The closure joins
    bottom position ``j`` to top position ``j``.

    Parameters
    ----------
    word : Sequence[int]
        Nonzero generators.
    strands : int | None, optional
        Number of strands; defaults to ``max |i| + 1``.
    name : str | None, optional
        Identifier.

    Returns
    -------
    Diagram
        The closed braid diagram.

    Raises
    ------
    ParseError
        On a zero generator or too few strands.

    """
    word = [int(g) for g in word]
    if any(g == 0 for g in word):
        raise ParseError("braid generators must be nonzero")
    needed = max((abs(g) for g in word), default=0) + 1
    if strands is None:
        strands = needed
    if strands < max(needed, 1):
        raise ParseError(f"word needs {needed} strands, got {strands}")

    current = list(range(strands))
    fresh = strands
    raw = []
    for g in word:
        i = abs(g) - 1
        under, over = (i, i + 1) if g > 0 else (i + 1, i)
        raw.append((1 if g > 0 else -1, current[over], current[under], fresh))
        current[under] = fresh
        fresh += 1
        current[i], current[i + 1] = current[i + 1], current[i]

    pieces = UnionFind(range(fresh))
    for position, arc in enumerate(current):
        pieces.union(position, arc)
    groups = sorted((sorted(group) for group in pieces.to_sets()), key=lambda g: g[0])
    arc_of = {piece: index for index, group in enumerate(groups) for piece in group}

    crossings = [
        Crossing(sign, arc_of[over], arc_of[under_in], arc_of[under_out])
        for sign, over, under_in, under_out in raw
    ]
    logger.debug("closed %d-strand braid of length %d", strands, len(word))
    return make_diagram(len(groups), crossings, name=name)
