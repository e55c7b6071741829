"""Oriented link diagrams: representation, input formats and bundled corpus."""

__all__ = []

from . import _diagram  # noqa
from ._diagram import *  # noqa

__all__.extend(_diagram.__all__)

from . import _native  # noqa
from ._native import *  # noqa

__all__.extend(_native.__all__)

from . import _pd  # noqa
from ._pd import *  # noqa

__all__.extend(_pd.__all__)

from . import _gauss  # noqa
from ._gauss import *  # noqa

__all__.extend(_gauss.__all__)

from . import _braid  # noqa
from ._braid import *  # noqa

__all__.extend(_braid.__all__)

from . import _corpus  # noqa
from ._corpus import *  # noqa

__all__.extend(_corpus.__all__)
