"""Finite quandles: validation, standard families, inner maps and table I/O."""

__all__ = []

from . import _quandle  # noqa
from ._quandle import *  # noqa

__all__.extend(_quandle.__all__)

from . import _families  # noqa
from ._families import *  # noqa

__all__.extend(_families.__all__)

from . import _inner  # noqa
from ._inner import *  # noqa

__all__.extend(_inner.__all__)

from . import _io  # noqa
from ._io import *  # noqa

__all__.extend(_io.__all__)
