"""Input normalization shared by the invariant models."""

__all__ = ["resolve_quandle", "resolve_links", "resolve_elements"]

from collections.abc import Iterable
from pathlib import Path

import numpy as np
import torch

from ..diagram import Diagram, diagram_from_source
from ..quandle import Quandle, quandle_from_spec, validate_quandle
from ..quandle._inner import _check_element


def resolve_quandle(quandle) -> Quandle:
    """Accept a Quandle, a builtin spec or file path, or a 0-indexed table."""
    if isinstance(quandle, Quandle):
        return quandle
    if isinstance(quandle, (str, Path)):
        return quandle_from_spec(str(quandle))
    if isinstance(quandle, (torch.Tensor, np.ndarray, list, tuple)):
        return validate_quandle(quandle)
    raise TypeError(f"cannot build a quandle from {type(quandle).__name__}")


def resolve_links(links) -> tuple[Diagram, ...]:
    """Accept a diagram, a corpus name or path, or an iterable of those."""
    if isinstance(links, (Diagram, str, Path)):
        links = [links]
    return tuple(
        link if isinstance(link, Diagram) else diagram_from_source(link) for link in links
    )


def resolve_elements(q: Quandle, elements: Iterable[int] | None) -> tuple[int, ...]:
    """0-indexed acting elements; every element when ``None``."""
    if elements is None:
        return tuple(range(q.n))
    if isinstance(elements, int):
        elements = [elements]
    elements = tuple(int(x) for x in elements)
    for x in elements:
        _check_element(q, x)
    return elements
