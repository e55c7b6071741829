"""Command-line interface."""

__all__ = []

from . import _config  # noqa
from ._config import *  # noqa

__all__.extend(_config.__all__)

from . import _report  # noqa
from ._report import *  # noqa

__all__.extend(_report.__all__)

from . import _run  # noqa
from ._run import *  # noqa

__all__.extend(_run.__all__)
