"""Finite quandle representation and axiom validation."""

__all__ = ["Quandle", "validate_quandle"]

import logging

from collections.abc import Sequence
from dataclasses import dataclass

import torch

from ..base.decorators import autocast
from ..base.errors import AxiomViolation, OutOfRange, ParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Quandle:
    """
    Validated finite quandle.

    Elements are ``0..n-1``. Build instances with ``validate_quandle`` or
    one of the family constructors.

    Attributes
    ----------
    table : torch.Tensor
        ``(n, n)`` long tensor, ``table[a, b] = a > b``.
    inv_table : torch.Tensor
        ``(n, n)`` long tensor, ``inv_table[a, b] = a >^-1 b``.
    labels : tuple[str, ...]
        Display names of the elements (``"1".."n"`` by default).
    name : str | None
        Optional identifier used in reports.

    """

    table: torch.Tensor
    inv_table: torch.Tensor
    labels: tuple[str, ...]
    name: str | None = None

    @property
    def n(self) -> int:
        """Number of elements."""
        return int(self.table.shape[0])

    def op(self, a: int, b: int, sign: int = 1) -> int:
        """Return ``a > b`` for ``sign=1`` and ``a >^-1 b`` for ``sign=-1``."""
        source = self.table if sign > 0 else self.inv_table
        return int(source[a, b])

    def operation(self, sign: int = 1) -> torch.Tensor:
        """Table of ``>`` (``sign=1``) or ``>^-1`` (``sign=-1``)."""
        return self.table if sign > 0 else self.inv_table

    def column(self, x: int) -> torch.Tensor:
        """Column ``x`` of the table, i.e. the map ``a -> a > x``."""
        return self.table[:, x]

    def tolist(self) -> list[list[int]]:
        """Table as nested lists (0-indexed)."""
        return self.table.tolist()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quandle):
            return NotImplemented
        return torch.equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(tuple(self.table.reshape(-1).tolist()))

    def __repr__(self) -> str:
        name = f"{self.name!r}, " if self.name else ""
        return f"Quandle({name}n={self.n})"


@autocast
def validate_quandle(
    table: torch.Tensor,
    labels: Sequence[str] | None = None,
    name: str | None = None,
) -> Quandle:
    """
    Validate an operation table and build a quandle.

    The three axioms are checked exhaustively, in the order idempotence,
    right-invertibility, self-distributivity; the first failure is reported.

    Parameters
    ----------
    table : torch.Tensor
        ``(n, n)`` integer array-like with 0-indexed entries,
        ``table[a][b] = a > b``.
    labels : Sequence[str] | None, optional
        Display names. The default is ``"1".."n"``.
    name : str | None, optional
        Identifier used in reports.

    Returns
    -------
    Quandle
        The validated quandle with derived inverse table.

    Raises
    ------
    ParseError
        If ``table`` is not a non-empty square array.
    OutOfRange
        If an entry lies outside ``0..n-1``.
    AxiomViolation
        If an axiom fails.

    Examples
    --------
    >>> q = validate_quandle([[0, 2, 1], [2, 1, 0], [1, 0, 2]])
    >>> q.n
    3

    """
    if not isinstance(table, torch.Tensor) or table.ndim != 2:
        raise ParseError("quandle table must be a two-dimensional array")
    n = table.shape[0]
    if n == 0 or table.shape[1] != n:
        raise ParseError(f"quandle table must be square and non-empty, got {tuple(table.shape)}")
    table = table.to(torch.long).contiguous()

    bad = ((table < 0) | (table >= n)).nonzero()
    if bad.shape[0]:
        a, b = bad[0].tolist()
        raise OutOfRange(int(table[a, b]), n, where=f"row {a}, column {b}")

    idx = torch.arange(n)

    # idempotence
    bad = (table.diagonal() != idx).nonzero()
    if bad.shape[0]:
        raise AxiomViolation("idempotence", (int(bad[0]),))

    # right-invertibility
    sorted_columns = torch.sort(table, dim=0).values
    bad = (sorted_columns != idx[:, None]).any(dim=0).nonzero()
    if bad.shape[0]:
        raise AxiomViolation("right-invertibility", (int(bad[0]),))

    # self-distributivity: (a > b) > c == (a > c) > (b > c)
    lhs = table[table.unsqueeze(2), idx.view(1, 1, n)]
    rhs = table[table.unsqueeze(1), table.unsqueeze(0)]
    bad = (lhs != rhs).nonzero()
    if bad.shape[0]:
        raise AxiomViolation("self-distributivity", tuple(bad[0].tolist()))

    inv_table = torch.empty_like(table)
    inv_table.scatter_(0, table, idx[:, None].expand(n, n).contiguous())

    if labels is None:
        labels = tuple(str(a + 1) for a in range(n))
    else:
        labels = tuple(str(label) for label in labels)
        if len(labels) != n:
            raise ParseError(f"expected {n} labels, got {len(labels)}")

    logger.debug("validated quandle %s of order %d", name or "<anonymous>", n)
    return Quandle(table=table, inv_table=inv_table, labels=labels, name=name)
