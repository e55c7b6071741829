"""Counting invariant table."""

__all__ = ["counting_table"]

import torch

from ..models.counting import CountingModel


def counting_table(quandle, links, cap: int | None = None, workers: int = 1) -> torch.Tensor:
    """
    Counting invariant of each link.

    Parameters
    ----------
    quandle : Quandle | str | npt.ArrayLike
        Quandle, builtin spec (``"dihedral:3"``), table file or 0-indexed table.
    links : Diagram | str | Sequence
        Diagrams, corpus names or diagram files.
    cap : int | None, optional
        Homset size cap. The default is ``None`` (``TORCHQUANDLE_CAP``).
    workers : int, optional
        Number of threads. The default is ``1``.

    Returns
    -------
    torch.Tensor
        Long tensor of shape ``(len(links),)``.

    """
    model = CountingModel(cap, workers)
    model.set_algebra(quandle)
    model.set_links(links)
    return model()
