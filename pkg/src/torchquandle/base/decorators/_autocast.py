"""Automatic integer tensor converter."""

__all__ = ["autocast"]

from collections.abc import Sequence
from functools import wraps
from typing import Callable

import numpy as np
import torch

from ..errors import ParseError


def autocast(func: Callable) -> Callable:
    """
    Force array-like inputs to be ``torch.long`` tensors on the CPU.

    Nested sequences and numpy arrays are converted. Scalars, strings and
    other objects are passed through unchanged.
    """

    @wraps(func)
    def wrapper(*args, **kwargs):
        args = [_to_long_tensor(arg) for arg in args]
        kwargs = {k: _to_long_tensor(v) for k, v in kwargs.items()}
        return func(*args, **kwargs)

    return wrapper


# %% subroutines
def _is_array_like(obj):
    if isinstance(obj, (torch.Tensor, np.ndarray)):
        return True
    if isinstance(obj, (str, bytes)) or not isinstance(obj, Sequence):
        return False
    return len(obj) > 0 and all(
        isinstance(item, (Sequence, np.ndarray, torch.Tensor))
        and not isinstance(item, (str, bytes))
        for item in obj
    )


def _to_long_tensor(obj):
    if not _is_array_like(obj):
        return obj
    if isinstance(obj, torch.Tensor):
        tensor = obj.detach().cpu()
    else:
        try:
            tensor = torch.as_tensor(np.asarray(obj))
        except (ValueError, TypeError) as err:
            raise ParseError(f"table is not rectangular: {err}") from None
    if tensor.is_floating_point():
        if not torch.equal(tensor, tensor.round()):
            raise ParseError("table entries must be integers")
    elif tensor.dtype == torch.bool or tensor.is_complex():
        raise ParseError("table entries must be integers")
    return tensor.to(torch.long)
