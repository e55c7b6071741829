"""Base invariant, configuration, decorators and errors."""

__all__ = []

from .errors import *  # noqa
from .config import *  # noqa
from .decorators import *  # noqa
from .base import *  # noqa

from . import errors  # noqa
from . import config  # noqa
from . import decorators  # noqa
from . import base  # noqa

__all__.extend(errors.__all__)
__all__.extend(config.__all__)
__all__.extend(decorators.__all__)
__all__.extend(base.__all__)
