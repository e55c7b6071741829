"""Functional interface for invariant models."""

__all__ = []

from ._counting import counting_table  # noqa

__all__.append("counting_table")


from ._polynomial import polynomial_table  # noqa

__all__.append("polynomial_table")
