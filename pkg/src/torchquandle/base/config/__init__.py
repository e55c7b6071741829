"""Search configuration helpers"""

__all__ = []

from .limits import *  # noqa
from . import limits as _limits

__all__.extend(_limits.__all__)
