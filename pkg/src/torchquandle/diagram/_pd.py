"""Planar diagram (PD) code input."""

__all__ = ["parse_pd"]

import logging
import re

import networkx as nx

from networkx.utils import UnionFind

from ..base.errors import OrientationAmbiguous, ParseError
from ._diagram import Crossing, Diagram, make_diagram

logger = logging.getLogger(__name__)

_TUPLE = re.compile(r"X\s*\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")
_FILLER = re.compile(r"^[\s,\[\]]*(PD)?[\s,\[\]]*$")

# slot roles: under in, over, under out, over
_UNDER_IN, _UNDER_OUT = 0, 2


def parse_pd(text: str, name: str | None = None) -> Diagram:
    """
    Parse a PD code into a diagram.

    In ``X[a,b,c,d]`` the under-strand enters along edge ``a`` and leaves
    along ``c``; ``b`` and ``d`` are the over-strand edges. Edge labels run
    consecutively along each oriented component. The over-strand runs
    ``b -> d`` when ``d`` follows ``b`` in its component, else ``d -> b``.
    The sign is ``+1`` for ``d -> b`` and ``-1`` for ``b -> d``.

    Parameters
    ----------
    text : str
        ``X[a,b,c,d]`` tuples, optionally wrapped in ``PD[...]``.
    name : str | None, optional
        Identifier.

    Returns
    -------
    Diagram
        The converted diagram.

    Raises
    ------
    ParseError
        On malformed input or labels that do not form oriented components.
    OrientationAmbiguous
        If an over-strand direction cannot be resolved.

    """
    tuples = [tuple(int(v) for v in m.groups()) for m in _TUPLE.finditer(text)]
    if not tuples:
        raise ParseError("no X[a,b,c,d] tuples in PD input")
    if not _FILLER.match(_TUPLE.sub(" ", text)):
        raise ParseError("unexpected text between PD tuples")

    occurrences = {}
    for k, labels in enumerate(tuples):
        for slot, label in enumerate(labels):
            occurrences.setdefault(label, []).append((k, slot))
    for label, seen in occurrences.items():
        if len(seen) != 2:
            raise ParseError(f"edge {label} appears {len(seen)} times, expected 2")

    successor = _component_successors(tuples)
    for k, (a, _, c, _) in enumerate(tuples):
        if successor[a] != c:
            raise ParseError(f"crossing {k + 1}: under-strand {a} -> {c} is not consecutive")

    forward = _orient_over_strands(tuples, successor, occurrences)

    arcs = UnionFind(sorted(occurrences))
    for _, b, _, d in tuples:
        arcs.union(b, d)
    groups = sorted((sorted(group) for group in arcs.to_sets()), key=lambda g: g[0])
    arc_of = {label: index for index, group in enumerate(groups) for label in group}

    crossings = [
        Crossing(
            sign=-1 if forward[k] else 1,
            over=arc_of[b],
            under_in=arc_of[a],
            under_out=arc_of[c],
        )
        for k, (a, b, c, _) in enumerate(tuples)
    ]
    logger.debug("PD code: %d crossings, %d arcs", len(crossings), len(groups))
    return make_diagram(len(groups), crossings, name=name)


# %% subroutines
def _component_successors(tuples):
    graph = nx.Graph()
    for a, b, c, d in tuples:
        graph.add_edge(a, c)
        graph.add_edge(b, d)
    successor = {}
    for component in nx.connected_components(graph):
        lo, hi = min(component), max(component)
        if len(component) != hi - lo + 1:
            raise ParseError(f"edges {sorted(component)} are not a consecutive label range")
        for label in component:
            successor[label] = label + 1 if label < hi else lo
    return successor


def _orient_over_strands(tuples, successor, occurrences):
    # forward[k]: over-strand at crossing k runs b -> d
    forward = {}
    for k, (_, b, _, d) in enumerate(tuples):
        ahead, behind = successor[b] == d, successor[d] == b
        if not (ahead or behind):
            raise ParseError(f"crossing {k + 1}: over-strand {b}, {d} is not consecutive")
        if ahead != behind:
            forward[k] = ahead

    pending = [k for k in range(len(tuples)) if k not in forward]
    while pending:
        resolved = []
        for k in pending:
            b = tuples[k][1]
            (other,) = [seen for seen in occurrences[b] if seen != (k, 1)]
            entering = _enters(other, forward)
            if entering is not None:
                # b leaves the other crossing iff it enters this one
                forward[k] = not entering
                resolved.append(k)
        if not resolved:
            raise OrientationAmbiguous(pending[0] + 1)
        pending = [k for k in pending if k not in resolved]
    return forward


def _enters(occurrence, forward):
    k, slot = occurrence
    if slot == _UNDER_IN:
        return True
    if slot == _UNDER_OUT:
        return False
    if k not in forward:
        return None
    return forward[k] == (slot == 1)
