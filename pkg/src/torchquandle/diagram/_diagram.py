"""Oriented link diagrams as arcs and signed crossings."""

__all__ = [
    "Crossing",
    "Relation",
    "Diagram",
    "make_diagram",
    "crossing_relations",
    "linking_numbers",
]

import logging

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..base.errors import ArcConsistencyError, ParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Crossing:
    """
    Classical crossing; arc indices are 0-based.

    The under-strand leaves ``under_in`` and continues as ``under_out``,
    with ``under_out = under_in > over`` for ``sign=+1`` and
    ``under_out = under_in >^-1 over`` for ``sign=-1``.
    """

    sign: int
    over: int
    under_in: int
    under_out: int


@dataclass(frozen=True)
class Relation:
    """Coloring relation ``lhs = rhs_base op rhs_actor``."""

    lhs: int
    rhs_base: int
    rhs_actor: int
    sign: int

    @property
    def op(self) -> str:
        """Operation symbol."""
        return "▷" if self.sign > 0 else "▷⁻¹"


@dataclass(frozen=True)
class Diagram:
    """
    Oriented classical or virtual link diagram.

    Attributes
    ----------
    arc_count : int
        Number of arcs.
    crossings : tuple[Crossing, ...]
        Classical crossings.
    components : tuple[tuple[int, ...], ...]
        Arcs of each component in travel order. Each component starts at
        its smallest arc; components are sorted by that arc.
    name : str | None
        Optional identifier.
    virtual_crossing_count : int
        Number of virtual crossings (they impose no relation).

    """

    arc_count: int
    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...]
    name: str | None = None
    virtual_crossing_count: int = 0

    @property
    def crossing_count(self) -> int:
        """Number of classical crossings."""
        return len(self.crossings)

    @property
    def component_count(self) -> int:
        """Number of link components."""
        return len(self.components)

    def component_of(self) -> tuple[int, ...]:
        """Component index of every arc."""
        owner = [0] * self.arc_count
        for index, component in enumerate(self.components):
            for arc in component:
                owner[arc] = index
        return tuple(owner)

    def __repr__(self) -> str:
        name = f"{self.name!r}, " if self.name else ""
        return (
            f"Diagram({name}arcs={self.arc_count}, crossings={self.crossing_count}, "
            f"components={self.component_count})"
        )


def make_diagram(
    arc_count: int,
    crossings: Iterable[Crossing],
    components: Sequence[Sequence[int]] | None = None,
    name: str | None = None,
    virtual_crossing_count: int = 0,
) -> Diagram:
    """
    Validate arc bookkeeping and build a diagram.

    Every arc appears at most once as ``under_in`` and at most once as
    ``under_out``, and both counts agree. Arcs that never pass under are
    single-arc components. Components are inferred by following
    ``under_in -> under_out``.

    Parameters
    ----------
    arc_count : int
        Number of arcs.
    crossings : Iterable[Crossing]
        Crossings with 0-based arc indices.
    components : Sequence[Sequence[int]] | None, optional
        Explicit components; checked against the inferred ones.
    name : str | None, optional
        Identifier.
    virtual_crossing_count : int, optional
        Number of virtual crossings. The default is ``0``.

    Returns
    -------
    Diagram
        The validated diagram.

    Raises
    ------
    ArcConsistencyError
        If the bookkeeping or the explicit components are inconsistent.

    """
    if arc_count < 1:
        raise ParseError(f"a diagram needs at least one arc, got {arc_count}")
    if virtual_crossing_count < 0:
        raise ParseError("virtual crossing count must be nonnegative")
    crossings = tuple(crossings)

    incoming = [0] * arc_count
    outgoing = [0] * arc_count
    successor = {}
    for crossing in crossings:
        if crossing.sign not in (1, -1):
            raise ParseError(f"crossing sign must be +1 or -1, got {crossing.sign}")
        for arc in (crossing.over, crossing.under_in, crossing.under_out):
            if not 0 <= arc < arc_count:
                raise ArcConsistencyError(arc + 1, f"outside 1..{arc_count}")
        incoming[crossing.under_in] += 1
        outgoing[crossing.under_out] += 1
        successor[crossing.under_in] = crossing.under_out

    for arc in range(arc_count):
        if incoming[arc] > 1:
            raise ArcConsistencyError(arc + 1, f"ends at {incoming[arc]} undercrossings")
        if outgoing[arc] > 1:
            raise ArcConsistencyError(arc + 1, f"starts at {outgoing[arc]} undercrossings")
        if incoming[arc] != outgoing[arc]:
            raise ArcConsistencyError(arc + 1, "under-in and under-out counts differ")

    inferred = _trace_components(arc_count, successor)
    if components is not None:
        given = _canonical_components(components, arc_count)
        if given != inferred:
            raise ArcConsistencyError(
                given[0][0] + 1 if given else 1,
                "component lines do not match the crossing structure",
            )

    diagram = Diagram(
        arc_count=arc_count,
        crossings=crossings,
        components=inferred,
        name=name,
        virtual_crossing_count=virtual_crossing_count,
    )
    logger.debug("built %r", diagram)
    return diagram


def crossing_relations(d: Diagram) -> tuple[Relation, ...]:
    """
    Coloring relations of a diagram, one per classical crossing.

    Parameters
    ----------
    d : Diagram
        The diagram.

    Returns
    -------
    tuple[Relation, ...]
        ``under_out = under_in op over`` with ``op`` given by the sign.

    """
    return tuple(
        Relation(
            lhs=crossing.under_out,
            rhs_base=crossing.under_in,
            rhs_actor=crossing.over,
            sign=crossing.sign,
        )
        for crossing in d.crossings
    )


def linking_numbers(d: Diagram) -> npt.NDArray[np.float64]:
    """
    Pairwise linking numbers of the components.

    Half the signed count of crossings between two distinct components.

    Parameters
    ----------
    d : Diagram
        The diagram.

    Returns
    -------
    npt.NDArray[np.float64]
        Symmetric ``(c, c)`` matrix with zero diagonal.

    """
    owner = d.component_of()
    c = d.component_count
    total = np.zeros((c, c), dtype=np.float64)
    for crossing in d.crossings:
        i, j = owner[crossing.over], owner[crossing.under_in]
        if i != j:
            total[i, j] += crossing.sign
            total[j, i] += crossing.sign
    return total / 2


# %% local utils
def _trace_components(arc_count, successor):
    seen = [False] * arc_count
    components = []
    for start in range(arc_count):
        if seen[start]:
            continue
        component = [start]
        seen[start] = True
        arc = successor.get(start, start)
        while arc != start:
            component.append(arc)
            seen[arc] = True
            arc = successor[arc]
        components.append(tuple(component))
    return tuple(components)


def _canonical_components(components, arc_count):
    flat = [arc for component in components for arc in component]
    if sorted(flat) != list(range(arc_count)):
        raise ArcConsistencyError(1, "component lines must list every arc exactly once")
    canonical = []
    for component in components:
        component = list(component)
        if not component:
            raise ArcConsistencyError(1, "empty component line")
        pivot = component.index(min(component))
        canonical.append(tuple(component[pivot:] + component[:pivot]))
    return tuple(sorted(canonical))
