"""Inner maps and action equivalence."""

__all__ = ["InnerMap", "inner_map", "action_equivalent"]

import math

from dataclasses import dataclass

import torch

from ..base.errors import OutOfRange
from ..utils import permutation_cycles
from ._quandle import Quandle


@dataclass(frozen=True)
class InnerMap:
    """
    Permutation ``a -> a > x`` induced by an element ``x``.

    Attributes
    ----------
    element : int
        Acting element ``x``.
    perm : tuple[int, ...]
        One-line notation, ``perm[a] = a > x``.
    cycles : tuple[tuple[int, ...], ...]
        Disjoint cycles, each starting at its smallest point.
    order : int
        Smallest ``k > 0`` with ``perm^k = id``.

    """

    element: int
    perm: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]
    order: int

    def is_identity(self) -> bool:
        """Return ``True`` if ``x`` acts trivially."""
        return self.order == 1


def inner_map(q: Quandle, x: int) -> InnerMap:
    """
    Inner map of ``x``: column ``x`` of the table as a permutation.

    Parameters
    ----------
    q : Quandle
        The quandle.
    x : int
        Acting element (0-indexed).

    Returns
    -------
    InnerMap
        Permutation, cycles and order.

    Examples
    --------
    >>> from torchquandle.quandle import dihedral_quandle
    >>> m = inner_map(dihedral_quandle(3), 0)
    >>> m.cycles, m.order
    (((0,), (1, 2)), 2)

    """
    _check_element(q, x)
    perm = tuple(q.column(x).tolist())
    cycles = permutation_cycles(perm)
    order = math.lcm(*(len(cycle) for cycle in cycles))
    return InnerMap(element=x, perm=perm, cycles=cycles, order=order)


def action_equivalent(q: Quandle, x: int, y: int) -> bool:
    """Return ``True`` if ``z > x == z > y`` for every ``z``."""
    _check_element(q, x)
    _check_element(q, y)
    return bool(torch.equal(q.column(x), q.column(y)))


# %% local utils
def _check_element(q, x):
    if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < q.n:
        raise OutOfRange(x, q.n, where="acting element")
