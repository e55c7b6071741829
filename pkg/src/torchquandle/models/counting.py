"""Counting invariant over a batch of links."""

__all__ = ["CountingModel"]

import torch

from ..base import AbstractInvariant
from ..homset import counting_invariant
from ._utils import resolve_links, resolve_quandle


class CountingModel(AbstractInvariant):
    """
    Number of colorings of each link by a quandle.

    Examples
    --------
    >>> from torchquandle.models import CountingModel
    >>> model = CountingModel()
    >>> model.set_algebra("dihedral:3")
    >>> model.set_links(["0_1", "3_1"])
    >>> model().tolist()
    [3, 9]

    """

    def set_algebra(self, quandle):
        """
        Set the coloring quandle.

        Parameters
        ----------
        quandle : Quandle | str | npt.ArrayLike
            Quandle, builtin spec (e.g. ``"dihedral:3"``), table file or
            0-indexed table.

        """
        self.algebra.quandle = resolve_quandle(quandle)

    def set_links(self, links):
        """
        Set the links.

        Parameters
        ----------
        links : Diagram | str | Sequence
            Diagrams, corpus names or diagram files.

        """
        self.links.diagrams = resolve_links(links)

    @staticmethod
    def _engine(diagram, quandle, cap=None):
        return counting_invariant(diagram, quandle, cap=cap)

    def _collect(self, results):
        return torch.as_tensor(results, dtype=torch.long)
