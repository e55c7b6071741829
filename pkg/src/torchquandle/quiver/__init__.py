"""Action quivers, full coloring quivers and action polynomials."""

__all__ = []

from . import _polynomial  # noqa
from ._polynomial import *  # noqa

__all__.extend(_polynomial.__all__)

from . import _action_quiver  # noqa
from ._action_quiver import *  # noqa

__all__.extend(_action_quiver.__all__)

from . import _full_quiver  # noqa
from ._full_quiver import *  # noqa

__all__.extend(_full_quiver.__all__)

from . import _export  # noqa
from ._export import *  # noqa

__all__.extend(_export.__all__)
