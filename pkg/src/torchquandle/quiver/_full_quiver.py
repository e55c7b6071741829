"""Quandle endomorphisms and full coloring quivers."""

__all__ = [
    "FullQuiver",
    "is_endomorphism",
    "enumerate_endomorphisms",
    "inner_endomorphisms",
    "full_coloring_quiver",
]

import logging

from collections.abc import Sequence
from dataclasses import dataclass

import networkx as nx
import torch

from ..base.config import prepare_search_limits
from ..base.errors import NotEndomorphism, OutOfRange, ParseError, TooLarge
from ..homset import Homset
from ..quandle import Quandle

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FullQuiver:
    """
    Quiver with an edge ``v -> f(v)`` per coloring and endomorphism.

    Attributes
    ----------
    homset : Homset
        Vertices, by canonical index.
    endos : tuple[tuple[int, ...], ...]
        Endomorphisms in one-line notation.
    targets : torch.Tensor
        ``(len(endos), M)`` long tensor of image indices.

    """

    homset: Homset
    endos: tuple[tuple[int, ...], ...]
    targets: torch.Tensor

    @property
    def vertex_count(self) -> int:
        return len(self.homset)

    @property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """``(source, target, endomorphism index)`` sorted by source, then index."""
        rows = self.targets.tolist()
        return tuple(
            (v, rows[k][v], k) for v in range(self.vertex_count) for k in range(len(self.endos))
        )

    def to_networkx(self) -> nx.MultiDiGraph:
        """Convert to a ``networkx.MultiDiGraph``; edge ``label`` is the endomorphism index."""
        graph = nx.MultiDiGraph()
        for v, c in enumerate(self.homset):
            graph.add_node(v, coloring=str(c))
        for source, target, k in self.edges:
            graph.add_edge(source, target, label=k)
        return graph

    def __repr__(self) -> str:
        return f"FullQuiver(vertices={self.vertex_count}, endomorphisms={len(self.endos)})"


def is_endomorphism(q: Quandle, f: Sequence[int]) -> tuple[int, int] | None:
    """
    Check ``f(a > b) == f(a) > f(b)`` for all ``a, b``.

    Parameters
    ----------
    q : Quandle
        The quandle.
    f : Sequence[int]
        Map in one-line notation.

    Returns
    -------
    tuple[int, int] | None
        A failing pair ``(a, b)``, or ``None`` for an endomorphism.

    """
    f = _as_map(q, f)
    lhs = f[q.table]
    rhs = q.table[f[:, None], f[None, :]]
    bad = (lhs != rhs).nonzero()
    if bad.shape[0]:
        a, b = bad[0].tolist()
        return a, b
    return None


def enumerate_endomorphisms(q: Quandle, limit: int | None = None) -> tuple[tuple[int, ...], ...]:
    """
    All endomorphisms of a quandle, in lexicographic order.

    Images are assigned element by element. After each choice the images
    forced by ``f(a > b) = f(a) > f(b)`` over the assigned elements are
    propagated, pruning contradictions.

    Parameters
    ----------
    q : Quandle
        The quandle.
    limit : int | None, optional
        Largest order searched. Defaults to ``TORCHQUANDLE_ENDOMORPHISM_LIMIT``
        or ``8``.

    Returns
    -------
    tuple[tuple[int, ...], ...]
        Endomorphisms in one-line notation.

    Raises
    ------
    TooLarge
        If ``q.n`` exceeds the limit.

    """
    limits = prepare_search_limits(endomorphism_limit=limit)
    if q.n > limits.endomorphism_limit:
        raise TooLarge(q.n, limits.endomorphism_limit)
    table = q.tolist()
    found = []
    _extend(table, [-1] * q.n, found)
    found.sort()
    logger.debug("%r has %d endomorphisms", q, len(found))
    return tuple(found)


def inner_endomorphisms(q: Quandle) -> tuple[tuple[int, ...], ...]:
    """Inner maps ``a -> a > x`` in element order."""
    return tuple(tuple(q.column(x).tolist()) for x in range(q.n))


def full_coloring_quiver(
    h: Homset, endos: Sequence[Sequence[int]] | None = None
) -> FullQuiver:
    """
    Build the full coloring quiver over a set of endomorphisms.

    Parameters
    ----------
    h : Homset
        The homset.
    endos : Sequence[Sequence[int]] | None, optional
        Endomorphisms in one-line notation. Defaults to all of them.

    Returns
    -------
    FullQuiver
        One edge ``v -> f(v)`` per vertex and endomorphism.

    Raises
    ------
    NotEndomorphism
        If a map is not an endomorphism.

    """
    q = h.quandle
    if endos is None:
        endos = enumerate_endomorphisms(q)
    maps = []
    for k, f in enumerate(endos):
        witness = is_endomorphism(q, f)
        if witness is not None:
            raise NotEndomorphism(k, witness)
        maps.append(_as_map(q, f))
    if maps:
        targets = torch.stack([h.index_of(f[h.colorings]) for f in maps])
    else:
        targets = torch.zeros((0, len(h)), dtype=torch.long)
    return FullQuiver(h, tuple(tuple(f.tolist()) for f in maps), targets)


# %% subroutines
def _extend(table, f, found):
    f = _propagate(table, f)
    if f is None:
        return
    if -1 not in f:
        found.append(tuple(f))
        return
    a = f.index(-1)
    for image in range(len(table)):
        g = list(f)
        g[a] = image
        _extend(table, g, found)


def _propagate(table, f):
    changed = True
    while changed:
        changed = False
        assigned = [a for a, image in enumerate(f) if image >= 0]
        for a in assigned:
            for b in assigned:
                c, want = table[a][b], table[f[a]][f[b]]
                if f[c] < 0:
                    f[c] = want
                    changed = True
                elif f[c] != want:
                    return None
    return f


def _as_map(q, f):
    f = torch.as_tensor(list(f), dtype=torch.long)
    if f.shape != (q.n,):
        raise ParseError(f"map has {f.numel()} entries, expected {q.n}")
    for value in f.tolist():
        if not 0 <= value < q.n:
            raise OutOfRange(value, q.n, where="map image")
    return f
