"""Colorings and homsets."""

__all__ = ["Coloring", "Homset", "satisfies", "format_colorings"]

import logging

from collections.abc import Iterator
from dataclasses import dataclass, field

import torch

from ..base.errors import InvariantError
from ..diagram import Diagram, crossing_relations
from ..quandle import Quandle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Coloring:
    """
    Assignment of quandle elements to the arcs of a diagram.

    Attributes
    ----------
    values : tuple[int, ...]
        ``values[i]`` is the color of arc ``i`` (0-indexed).
    diagram : Diagram | None
        Diagram the coloring belongs to, when known. Not part of equality.

    """

    values: tuple[int, ...]
    diagram: Diagram | None = field(default=None, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return ",".join(str(value + 1) for value in self.values)


@dataclass(frozen=True, eq=False)
class Homset:
    """
    All colorings of a diagram by a quandle, in lexicographic order.

    Attributes
    ----------
    diagram : Diagram
        The colored diagram.
    quandle : Quandle
        The coloring quandle.
    colorings : torch.Tensor
        ``(M, arc_count)`` long tensor, rows sorted lexicographically.

    """

    diagram: Diagram
    quandle: Quandle
    colorings: torch.Tensor
    _index: dict = field(default_factory=dict, repr=False)

    @classmethod
    def from_rows(cls, diagram: Diagram, quandle: Quandle, rows: torch.Tensor) -> "Homset":
        """Sort and deduplicate rows and build the lookup index."""
        if rows.shape[0]:
            rows = torch.unique(rows, dim=0, sorted=True)
        index = {tuple(row): i for i, row in enumerate(rows.tolist())}
        return cls(diagram, quandle, rows, index)

    def __len__(self) -> int:
        return int(self.colorings.shape[0])

    def __iter__(self) -> Iterator[Coloring]:
        for row in self.colorings.tolist():
            yield Coloring(tuple(row), self.diagram)

    def __getitem__(self, i: int) -> Coloring:
        return Coloring(tuple(self.colorings[i].tolist()), self.diagram)

    def __contains__(self, c: object) -> bool:
        values = c.values if isinstance(c, Coloring) else tuple(c)
        return values in self._index

    def index(self, c: Coloring) -> int:
        """Canonical index of a coloring."""
        return int(self.index_of(torch.tensor([c.values], dtype=torch.long))[0])

    def index_of(self, rows: torch.Tensor) -> torch.Tensor:
        """
        Canonical indices of a batch of colorings.

        Parameters
        ----------
        rows : torch.Tensor
            ``(k, arc_count)`` long tensor.

        Returns
        -------
        torch.Tensor
            ``(k,)`` long tensor of row indices.

        Raises
        ------
        InvariantError
            If a row is not a member of the homset.

        """
        out = []
        for row in rows.tolist():
            try:
                out.append(self._index[tuple(row)])
            except KeyError:
                raise InvariantError(f"coloring {row} is not in the homset") from None
        return torch.tensor(out, dtype=torch.long)

    def format(self) -> str:
        """One coloring per line, comma-separated 1-indexed labels."""
        return "".join(f"{c}\n" for c in self)

    def __repr__(self) -> str:
        return f"Homset({self.diagram!r}, {self.quandle!r}, size={len(self)})"


def satisfies(d: Diagram, q: Quandle, rows: torch.Tensor) -> torch.Tensor:
    """
    Mask of the rows that satisfy every crossing relation of ``d``.

    Parameters
    ----------
    d : Diagram
        The diagram.
    q : Quandle
        The quandle.
    rows : torch.Tensor
        ``(k, arc_count)`` long tensor of assignments.

    Returns
    -------
    torch.Tensor
        ``(k,)`` boolean tensor.

    """
    mask = torch.ones(rows.shape[0], dtype=torch.bool)
    for r in crossing_relations(d):
        image = q.operation(r.sign)[rows[:, r.rhs_base], rows[:, r.rhs_actor]]
        mask &= rows[:, r.lhs] == image
    return mask


def format_colorings(h: Homset) -> str:
    """Serialize a homset, one 1-indexed coloring per line."""
    return h.format()
