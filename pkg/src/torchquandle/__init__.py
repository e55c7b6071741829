"""Main TorchQuandle API."""

__all__ = []

from . import base  # noqa
from . import utils  # noqa
from . import quandle  # noqa
from . import diagram  # noqa
from . import homset  # noqa
from . import quiver  # noqa
from . import models  # noqa
from . import cli  # noqa

from . import _functional  # noqa
from ._functional import *  # noqa

__all__.extend(_functional.__all__)
