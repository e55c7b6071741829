"""Quandle action quivers and action polynomials."""

__all__ = [
    "ActionQuiver",
    "CycleGraph",
    "action_quiver",
    "action_polynomial",
    "polynomial_for_all_elements",
    "cycle_structure",
    "reconstruct_from_polynomial",
]

import logging

from collections.abc import Iterable
from dataclasses import dataclass

import networkx as nx
import torch

from ..base.decorators import checked
from ..base.errors import InvariantError, LabelNotPresent
from ..homset import Homset, action_permutation, loop_length
from ..quandle import inner_map
from ..quandle._inner import _check_element
from ..utils import cycle_lengths, permutation_cycles
from ._polynomial import ActionPolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ActionQuiver:
    """
    Quiver with a vertex per coloring and an ``x``-labeled edge ``v -> x.v``.

    Attributes
    ----------
    homset : Homset
        Vertices, by canonical index.
    edge_labels : tuple[int, ...]
        Acting elements, ascending.
    targets : torch.Tensor
        ``(len(edge_labels), M)`` long tensor; row ``k`` is the permutation
        of ``edge_labels[k]``.

    """

    homset: Homset
    edge_labels: tuple[int, ...]
    targets: torch.Tensor

    @property
    def vertex_count(self) -> int:
        return len(self.homset)

    @property
    def edge_count(self) -> int:
        return len(self.edge_labels) * self.vertex_count

    @property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """``(source, target, label)`` triples sorted by source, then label."""
        rows = self.targets.tolist()
        return tuple(
            (v, rows[k][v], x)
            for v in range(self.vertex_count)
            for k, x in enumerate(self.edge_labels)
        )

    def permutation(self, x: int) -> torch.Tensor:
        """Permutation of the ``x``-labeled edges."""
        if x not in self.edge_labels:
            raise LabelNotPresent(x)
        return self.targets[self.edge_labels.index(x)]

    def subquiver(self, x: int) -> "ActionQuiver":
        """Quiver of the ``x``-labeled edges only."""
        return ActionQuiver(self.homset, (x,), self.permutation(x)[None, :])

    def to_networkx(self) -> nx.MultiDiGraph:
        """
        Convert to a ``networkx.MultiDiGraph``.

        Nodes carry the 1-indexed coloring text as ``coloring``; edges carry
        the 1-indexed acting element as ``label``.
        """
        graph = nx.MultiDiGraph()
        for v, c in enumerate(self.homset):
            graph.add_node(v, coloring=str(c))
        for source, target, x in self.edges:
            graph.add_edge(source, target, label=x + 1)
        return graph

    def __repr__(self) -> str:
        return (
            f"ActionQuiver(vertices={self.vertex_count}, "
            f"labels={tuple(x + 1 for x in self.edge_labels)})"
        )


class CycleGraph(nx.MultiDiGraph):
    """Disjoint union of directed cycles."""

    def cycle_lengths(self) -> tuple[int, ...]:
        """Cycle lengths, ascending."""
        return tuple(sorted(len(c) for c in nx.weakly_connected_components(self)))


def action_quiver(h: Homset, labels: Iterable[int] | None = None) -> ActionQuiver:
    """
    Build the action quiver of a homset.

    Parameters
    ----------
    h : Homset
        The homset.
    labels : Iterable[int] | None, optional
        Acting elements (0-indexed). Defaults to every element.

    Returns
    -------
    ActionQuiver
        One edge ``v -> x.v`` per vertex and label.

    """
    if labels is None:
        labels = range(h.quandle.n)
    labels = tuple(sorted(set(int(x) for x in labels)))
    for x in labels:
        _check_element(h.quandle, x)
    if labels:
        targets = torch.stack([action_permutation(h, x) for x in labels])
    else:
        targets = torch.zeros((0, len(h)), dtype=torch.long)
    return ActionQuiver(h, labels, targets)


def _agrees_with_loop_lengths(result, h, x):
    q = h.quandle
    if result.evaluate(1) != len(h):
        raise InvariantError(f"{result} does not count the {len(h)} colorings")
    order = inner_map(q, x).order
    for j, c in result.terms:
        if c % j or order % j:
            raise InvariantError(f"term {c}u^{j} violates cycle divisibility (order {order})")
    direct = ActionPolynomial.from_loop_lengths(loop_length(q, x, c) for c in h)
    if direct != result:
        raise InvariantError(f"cycle decomposition gives {result}, orbits give {direct}")


@checked(_agrees_with_loop_lengths)
def action_polynomial(h: Homset, x: int) -> ActionPolynomial:
    """
    Quandle action polynomial ``sum_v u^l(v, x)``.

    ``l(v, x)`` is the length of the ``x``-cycle through ``v``, read off the
    cycle decomposition of the action permutation.

    Parameters
    ----------
    h : Homset
        The homset.
    x : int
        Acting element (0-indexed).

    Returns
    -------
    ActionPolynomial
        The polynomial.

    Examples
    --------
    >>> from torchquandle.diagram import load_corpus
    >>> from torchquandle.homset import enumerate_colorings
    >>> from torchquandle.quandle import dihedral_quandle
    >>> h = enumerate_colorings(load_corpus("3_1"), dihedral_quandle(3))
    >>> str(action_polynomial(h, 0))
    '8u^2 + u'

    """
    perm = action_permutation(h, x)
    polynomial = ActionPolynomial.from_loop_lengths(
        cycle_lengths(perm.numpy()).tolist(), acting_element=x
    )
    logger.debug("action polynomial of %d on %r: %s", x, h, polynomial)
    return polynomial


def polynomial_for_all_elements(h: Homset) -> dict[int, ActionPolynomial]:
    """Action polynomial of every element of the quandle."""
    return {x: action_polynomial(h, x) for x in range(h.quandle.n)}


def cycle_structure(aq: ActionQuiver, x: int) -> tuple[int, ...]:
    """
    Cycle lengths of the ``x``-labeled subquiver, ascending.

    Raises
    ------
    LabelNotPresent
        If ``x`` is not an edge label of ``aq``.

    """
    cycles = permutation_cycles(aq.permutation(x).numpy())
    return tuple(sorted(len(cycle) for cycle in cycles))


def reconstruct_from_polynomial(p: ActionPolynomial) -> CycleGraph:
    """
    Quiver shape determined by a polynomial: ``c_j / j`` cycles of length ``j``.

    Parameters
    ----------
    p : ActionPolynomial
        The polynomial.

    Returns
    -------
    CycleGraph
        Disjoint union of directed cycles.

    Raises
    ------
    MalformedPolynomial
        If some coefficient is not divisible by its exponent.

    """
    graph = CycleGraph()
    start = 0
    for j in p.cycle_lengths():
        if j == 1:
            graph.add_edge(start, start)
        else:
            nx.add_cycle(graph, range(start, start + j))
        start += j
    return graph
