"""Permutation cycle decomposition routines."""

__all__ = ["permutation_cycles", "cycle_lengths", "permutation_order"]

import math

import numpy.typing as npt
import numpy as np

import scipy.sparse
from scipy.sparse.csgraph import connected_components


def cycle_lengths(perm: npt.ArrayLike) -> npt.NDArray[np.int64]:
    """
    Length of the cycle through each point of a permutation.

    Parameters
    ----------
    perm : npt.ArrayLike
        Permutation of ``0..m-1`` in one-line notation (``perm[i]`` is the
        image of ``i``).

    Returns
    -------
    npt.NDArray[np.int64]
        Array of shape ``(m,)``; entry ``i`` is the length of the cycle
        containing ``i``.

    Raises
    ------
    ValueError
        If ``perm`` is not a permutation.

    """
    labels, sizes = _components(perm)
    return sizes[labels]


def permutation_cycles(perm: npt.ArrayLike) -> tuple[tuple[int, ...], ...]:
    """
    Disjoint cycle decomposition of a permutation.

    Each cycle starts at its smallest point; cycles are sorted by that point.
    Fixed points appear as 1-cycles.

    Parameters
    ----------
    perm : npt.ArrayLike
        Permutation of ``0..m-1`` in one-line notation.

    Returns
    -------
    tuple[tuple[int, ...], ...]
        The cycles.

    Examples
    --------
    >>> permutation_cycles([0, 2, 1])
    ((0,), (1, 2))

    """
    perm = _as_permutation(perm)
    labels, _ = _components(perm)
    _, starts = np.unique(labels, return_index=True)
    cycles = []
    for start in sorted(starts.tolist()):
        cycle = [start]
        nxt = int(perm[start])
        while nxt != start:
            cycle.append(nxt)
            nxt = int(perm[nxt])
        cycles.append(tuple(cycle))
    return tuple(cycles)


def permutation_order(perm: npt.ArrayLike) -> int:
    """Order of a permutation (lcm of its cycle lengths)."""
    _, sizes = _components(perm)
    return math.lcm(*sizes.tolist()) if sizes.size else 1


# %% subroutines
def _as_permutation(perm):
    perm = np.asarray(perm, dtype=np.int64).reshape(-1)
    m = perm.size
    if m and (
        perm.min() < 0
        or perm.max() >= m
        or not np.all(np.bincount(perm, minlength=m) == 1)
    ):
        raise ValueError(f"not a permutation of 0..{m - 1}: {perm.tolist()}")
    return perm


def _components(perm):
    """Weakly connected components of the functional graph i -> perm[i]."""
    perm = _as_permutation(perm)
    m = perm.size
    if m == 0:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    graph = scipy.sparse.csr_matrix(
        (np.ones(m, dtype=np.int8), (np.arange(m), perm)), shape=(m, m)
    )
    ncomp, labels = connected_components(graph, directed=True, connection="weak")
    sizes = np.bincount(labels, minlength=ncomp).astype(np.int64)
    return labels.astype(np.int64), sizes
