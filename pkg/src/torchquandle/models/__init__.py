"""Invariant models sub-package."""

__all__ = []

from .counting import CountingModel  # noqa

__all__.append("CountingModel")


from .polynomial import ActionPolynomialModel  # noqa

__all__.append("ActionPolynomialModel")
