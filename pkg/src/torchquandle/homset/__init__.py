"""Coloring homsets and the quandle action on them."""

__all__ = []

from . import _coloring  # noqa
from ._coloring import *  # noqa

__all__.extend(_coloring.__all__)

from . import _enumerate  # noqa
from ._enumerate import *  # noqa

__all__.extend(_enumerate.__all__)

from . import _action  # noqa
from ._action import *  # noqa

__all__.extend(_action.__all__)
