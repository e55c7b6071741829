"""Quandle action on colorings."""

__all__ = ["act", "loop_length", "action_permutation"]

from collections.abc import Sequence

import torch

from ..base.decorators import checked
from ..base.errors import InvariantError
from ..quandle import Quandle, inner_map
from ..quandle._inner import _check_element
from ._coloring import Coloring, Homset, satisfies


def _valid_image(result, q, x, c):
    d = result.diagram
    if d is not None and not bool(satisfies(d, q, torch.tensor([result.values]))[0]):
        raise InvariantError(f"acting by {x} on {c} left the homset")


@checked(_valid_image)
def act(q: Quandle, x: int, c: Coloring | Sequence[int]) -> Coloring:
    """
    Act on a coloring by ``x``: every arc color ``a`` becomes ``a > x``.

    Parameters
    ----------
    q : Quandle
        The quandle.
    x : int
        Acting element (0-indexed).
    c : Coloring | Sequence[int]
        The coloring.

    Returns
    -------
    Coloring
        The image, attached to the same diagram as ``c``.

    Examples
    --------
    >>> from torchquandle.quandle import dihedral_quandle
    >>> act(dihedral_quandle(3), 0, [0, 1, 2]).values
    (0, 2, 1)

    """
    _check_element(q, x)
    if not isinstance(c, Coloring):
        c = Coloring(tuple(int(value) for value in c))
    column = q.column(x).tolist()
    return Coloring(tuple(column[value] for value in c.values), c.diagram)


def loop_length(q: Quandle, x: int, c: Coloring | Sequence[int]) -> int:
    """
    Smallest ``k > 0`` with ``x^k . c = c``.

    The result divides the order of the inner map of ``x``.
    """
    order = inner_map(q, x).order
    start = c if isinstance(c, Coloring) else Coloring(tuple(int(v) for v in c))
    current = start
    for k in range(1, order + 1):
        current = act(q, x, current)
        if current.values == start.values:
            return k
    raise InvariantError(f"orbit of {start} under {x} exceeds the inner map order {order}")


def action_permutation(h: Homset, x: int) -> torch.Tensor:
    """
    Action of ``x`` on a homset as a permutation of canonical indices.

    Parameters
    ----------
    h : Homset
        The homset.
    x : int
        Acting element (0-indexed).

    Returns
    -------
    torch.Tensor
        ``(M,)`` long tensor; entry ``i`` is the index of ``x . h[i]``.

    Raises
    ------
    InvariantError
        If an image is missing from the homset.

    """
    _check_element(h.quandle, x)
    images = h.quandle.table[h.colorings, x]
    return h.index_of(images)
