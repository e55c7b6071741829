"""Action polynomial table."""

__all__ = ["polynomial_table"]

from ..models.polynomial import ActionPolynomialModel
from ..quiver import TableRow


def polynomial_table(
    quandle,
    links,
    elements=None,
    cap: int | None = None,
    workers: int = 1,
) -> list[TableRow]:
    """
    Action polynomials of each link for a set of acting elements.

    Parameters
    ----------
    quandle : Quandle | str | npt.ArrayLike
        Quandle, builtin spec, table file or 0-indexed table.
    links : Diagram | str | Sequence
        Diagrams, corpus names or diagram files.
    elements : int | Iterable[int] | None, optional
        0-indexed acting elements. The default is every element.
    cap : int | None, optional
        Homset size cap. The default is ``None`` (``TORCHQUANDLE_CAP``).
    workers : int, optional
        Number of threads. The default is ``1``.

    Returns
    -------
    list[TableRow]
        Rows ordered by link, then element.

    """
    model = ActionPolynomialModel(cap, workers)
    model.set_algebra(quandle, elements)
    model.set_links(links)
    return model()
