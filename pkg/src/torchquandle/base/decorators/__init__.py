"""Helper decorators to reduce boilerplate."""

__all__ = []

from ._autocast import autocast  # noqa
from ._checked import checked  # noqa

__all__.extend(["autocast", "checked"])
