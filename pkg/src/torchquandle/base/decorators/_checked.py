"""Post-condition checks."""

__all__ = ["checked"]

from functools import wraps
from typing import Callable

from ..config import checks_enabled


def checked(validator: Callable) -> Callable:
    """
    Run ``validator(result, *args, **kwargs)`` after the decorated function.

    The validator raises on failure. It only runs when checks are enabled
    (see ``checks_enabled``).
    """

    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args, **kwargs):
            result = func(*args, **kwargs)
            if checks_enabled():
                validator(result, *args, **kwargs)
            return result

        return wrapper

    return decorator
