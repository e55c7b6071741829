"""Utilities subroutines."""

__all__ = []

from . import _cycles  # noqa
from ._cycles import *  # noqa

__all__.extend(_cycles.__all__)
