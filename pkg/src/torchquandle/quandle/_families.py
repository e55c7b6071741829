"""Standard quandle constructions."""

__all__ = [
    "trivial_quandle",
    "dihedral_quandle",
    "alexander_quandle",
    "conjugation_quandle",
]

import math

import torch

from ..base.decorators import autocast
from ..base.errors import ConfigError, NonUnitParameter, NotAGroup, OutOfRange, ParseError
from ._quandle import Quandle, validate_quandle


def trivial_quandle(n: int) -> Quandle:
    """
    Trivial quandle of order ``n``: ``a > b = a``.

    Parameters
    ----------
    n : int
        Number of elements, ``n >= 1``.

    Returns
    -------
    Quandle
        The trivial quandle.

    """
    _check_order(n)
    idx = torch.arange(n)
    table = idx[:, None].expand(n, n)
    return validate_quandle(table, name=f"trivial:{n}")


def dihedral_quandle(n: int) -> Quandle:
    """
    Dihedral quandle of order ``n``: ``a > b = 2b - a mod n``.

    Parameters
    ----------
    n : int
        Number of elements, ``n >= 1``.

    Returns
    -------
    Quandle
        The dihedral quandle.

    Examples
    --------
    >>> dihedral_quandle(3).tolist()
    [[0, 2, 1], [2, 1, 0], [1, 0, 2]]

    """
    _check_order(n)
    idx = torch.arange(n)
    table = (2 * idx[None, :] - idx[:, None]) % n
    return validate_quandle(table, name=f"dihedral:{n}")


def alexander_quandle(n: int, t: int) -> Quandle:
    """
    Alexander quandle on ``Z_n``: ``a > b = t a + (1 - t) b mod n``.

    Parameters
    ----------
    n : int
        Number of elements, ``n >= 1``.
    t : int
        Parameter, must be a unit modulo ``n``.

    Returns
    -------
    Quandle
        The Alexander quandle.

    Raises
    ------
    NonUnitParameter
        If ``gcd(t, n) != 1``.

    """
    _check_order(n)
    if math.gcd(t, n) != 1:
        raise NonUnitParameter(n, t)
    idx = torch.arange(n)
    table = (t * idx[:, None] + (1 - t) * idx[None, :]) % n
    return validate_quandle(table, name=f"alexander:{n}:{t}")


@autocast
def conjugation_quandle(group_table: torch.Tensor, name: str | None = None) -> Quandle:
    """
    Conjugation quandle of a finite group: ``a > b = b^-1 a b``.

    Parameters
    ----------
    group_table : torch.Tensor
        ``(n, n)`` 0-indexed multiplication table, ``group_table[a][b] = ab``.
    name : str | None, optional
        Identifier used in reports.

    Returns
    -------
    Quandle
        The conjugation quandle.

    Raises
    ------
    NotAGroup
        If the table lacks an identity or inverses, or is not associative.

    """
    group = _check_group(group_table)
    n = group.shape[0]
    idx = torch.arange(n)
    identity = int(_identity(group))
    inverse = (group == identity).to(torch.long).argmax(dim=1)

    # b^-1 a, then (b^-1 a) b
    left = group[inverse[None, :], idx[:, None]]
    table = group[left, idx[None, :]]
    return validate_quandle(table, name=name or f"conj:{n}")


# %% local utils
def _check_order(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ConfigError(f"quandle order must be a positive integer, got {n!r}")


def _identity(group):
    n = group.shape[0]
    idx = torch.arange(n)
    rows = (group == idx[None, :]).all(dim=1)
    cols = (group == idx[:, None]).all(dim=0)
    candidates = (rows & cols).nonzero()
    if candidates.shape[0] == 0:
        raise NotAGroup("no identity element")
    return candidates[0, 0]


def _check_group(group):
    if not isinstance(group, torch.Tensor) or group.ndim != 2:
        raise ParseError("group table must be a two-dimensional array")
    n = group.shape[0]
    if n == 0 or group.shape[1] != n:
        raise ParseError(f"group table must be square and non-empty, got {tuple(group.shape)}")
    bad = ((group < 0) | (group >= n)).nonzero()
    if bad.shape[0]:
        a, b = bad[0].tolist()
        raise OutOfRange(int(group[a, b]), n, where=f"group row {a}, column {b}")

    identity = _identity(group)
    is_identity = group == identity
    has_right = is_identity.any(dim=1)
    bad = (~has_right).nonzero()
    if bad.shape[0]:
        raise NotAGroup("missing inverse", (int(bad[0, 0]),))
    inverse = is_identity.to(torch.long).argmax(dim=1)
    bad = (group[inverse, torch.arange(n)] != identity).nonzero()
    if bad.shape[0]:
        raise NotAGroup("inverse is not two-sided", (int(bad[0, 0]),))

    # (ab)c == a(bc)
    idx = torch.arange(n)
    lhs = group[group.unsqueeze(2), idx.view(1, 1, n)]
    rhs = group[idx.view(n, 1, 1), group.unsqueeze(0)]
    bad = (lhs != rhs).nonzero()
    if bad.shape[0]:
        raise NotAGroup("not associative", tuple(bad[0].tolist()))
    return group
