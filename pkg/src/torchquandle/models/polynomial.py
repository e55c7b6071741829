"""Action polynomials over a batch of links."""

__all__ = ["ActionPolynomialModel"]

import logging

from ..base import AbstractInvariant
from ..homset import enumerate_colorings
from ..quiver import TableRow, action_polynomial
from ._utils import resolve_elements, resolve_links, resolve_quandle

logger = logging.getLogger(__name__)


class ActionPolynomialModel(AbstractInvariant):
    """
    Quandle action polynomials of each link for a set of acting elements.

    The homset of every link is computed once and shared by all elements.
    Calling the model returns one ``TableRow`` per (link, element), links
    outermost.

    Methods
    -------
    set_algebra(quandle, elements=None):
        Set the quandle and the 0-indexed acting elements.

    set_links(links):
        Set the diagrams.

    Examples
    --------
    >>> from torchquandle.models import ActionPolynomialModel
    >>> model = ActionPolynomialModel()
    >>> model.set_algebra("dihedral:3", elements=[0])
    >>> model.set_links("3_1")
    >>> [str(row.polynomial) for row in model()]
    ['8u^2 + u']

    """

    def set_algebra(self, quandle, elements=None):
        """
        Set the quandle and acting elements.

        Parameters
        ----------
        quandle : Quandle | str | npt.ArrayLike
            Quandle, builtin spec, table file or 0-indexed table.
        elements : int | Iterable[int] | None, optional
            0-indexed acting elements. The default is every element.

        """
        self.algebra.quandle = resolve_quandle(quandle)
        self.algebra.elements = resolve_elements(self.algebra.quandle, elements)

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
    def _engine(diagram, quandle, elements, cap=None):
        homset = enumerate_colorings(diagram, quandle, cap=cap)
        rows = []
        for x in elements:
            polynomial = action_polynomial(homset, x)
            rows.append(
                TableRow(
                    link=diagram.name or "",
                    quandle=quandle.name or "",
                    element=x,
                    polynomial=polynomial,
                    counting=len(homset),
                )
            )
            logger.info("%s, element %d: %s", diagram.name, x + 1, polynomial)
        return rows

    def _collect(self, results):
        return [row for rows in results for row in rows]
