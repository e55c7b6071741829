"""DOT and CSV export of quivers and polynomial tables."""

__all__ = ["TableRow", "export_dot", "format_csv", "enhancement_pairs"]

import csv
import io

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from networkx.drawing import nx_pydot

from ._polynomial import ActionPolynomial

CSV_HEADER = ("link", "quandle", "element", "polynomial", "counting")


@dataclass(frozen=True)
class TableRow:
    """One (link, quandle, element) cell; ``element`` is 0-indexed."""

    link: str
    quandle: str
    element: int
    polynomial: ActionPolynomial
    counting: int

    def as_csv(self) -> tuple[str, str, str, str, str]:
        return (
            self.link,
            self.quandle,
            str(self.element + 1),
            str(self.polynomial),
            str(self.counting),
        )


def export_dot(quiver) -> str:
    """
    Render a quiver as a Graphviz digraph.

    Nodes are canonical coloring indices with a ``coloring`` attribute;
    edges carry a ``label`` attribute. Output is deterministic.

    Parameters
    ----------
    quiver : ActionQuiver | FullQuiver | networkx.MultiDiGraph
        The quiver.

    Returns
    -------
    str
        DOT text.

    """
    graph = quiver.to_networkx() if hasattr(quiver, "to_networkx") else quiver
    quoted = nx.MultiDiGraph(name="quiver")
    for node, data in sorted(graph.nodes(data=True)):
        quoted.add_node(node, **{key: _quote(value) for key, value in data.items()})
    for source, target, data in sorted(
        graph.edges(data=True), key=lambda e: (e[0], e[2].get("label", 0), e[1])
    ):
        quoted.add_edge(source, target, **{key: _quote(value) for key, value in data.items()})
    return nx_pydot.to_pydot(quoted).to_string()


def format_csv(rows: Iterable[TableRow]) -> str:
    """CSV text with header ``link,quandle,element,polynomial,counting``."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(row.as_csv() for row in rows)
    return buffer.getvalue()


def enhancement_pairs(rows: Iterable[TableRow]) -> tuple[tuple[str, str, int], ...]:
    """
    Link pairs separated by the polynomial but not by the counting invariant.

    Parameters
    ----------
    rows : Iterable[TableRow]
        Table cells.

    Returns
    -------
    tuple[tuple[str, str, int], ...]
        ``(link_a, link_b, element)`` for every pair of rows with the same
        quandle and element, equal counting invariants and different
        polynomials.

    """
    groups = {}
    for row in rows:
        groups.setdefault((row.quandle, row.element), []).append(row)
    pairs = []
    for (_, element), cells in groups.items():
        for a, b in combinations(cells, 2):
            if a.counting == b.counting and a.polynomial != b.polynomial:
                pairs.append((a.link, b.link, element))
    return tuple(pairs)


# %% local utils
def _quote(value):
    return f'"{value}"'
