"""Search limits."""

__all__ = ["prepare_search_limits", "checks_enabled"]

import os

from types import SimpleNamespace

from ..errors import ConfigError

DEFAULT_CAP = 1_000_000
DEFAULT_ORACLE_LIMIT = 10**8
DEFAULT_ENDOMORPHISM_LIMIT = 8
DEFAULT_CHUNK_SIZE = 65_536


def prepare_search_limits(
    cap: int | None = None,
    oracle_limit: int | None = None,
    endomorphism_limit: int | None = None,
    chunk_size: int | None = None,
) -> SimpleNamespace:
    """
    Prepare size limits for homset and endomorphism searches.

    Explicit arguments take precedence over the environment variables
    ``TORCHQUANDLE_CAP``, ``TORCHQUANDLE_ORACLE_LIMIT``,
    ``TORCHQUANDLE_ENDOMORPHISM_LIMIT`` and ``TORCHQUANDLE_CHUNK_SIZE``.

    Parameters
    ----------
    cap : int | None, optional
        Maximum homset size. The default is ``1_000_000``.
    oracle_limit : int | None, optional
        Maximum number of assignments checked by brute force.
        The default is ``10**8``.
    endomorphism_limit : int | None, optional
        Maximum quandle order for endomorphism enumeration.
        The default is ``8``.
    chunk_size : int | None, optional
        Maximum number of rows in a search tensor before splitting.
        The default is ``65_536``.

    Returns
    -------
    SimpleNamespace
        Namespace with ``cap``, ``oracle_limit``, ``endomorphism_limit``
        and ``chunk_size`` fields.

    Raises
    ------
    ConfigError
        If a value is not a positive integer.

    """
    return SimpleNamespace(
        cap=_resolve("cap", cap, "TORCHQUANDLE_CAP", DEFAULT_CAP),
        oracle_limit=_resolve(
            "oracle_limit",
            oracle_limit,
            "TORCHQUANDLE_ORACLE_LIMIT",
            DEFAULT_ORACLE_LIMIT,
        ),
        endomorphism_limit=_resolve(
            "endomorphism_limit",
            endomorphism_limit,
            "TORCHQUANDLE_ENDOMORPHISM_LIMIT",
            DEFAULT_ENDOMORPHISM_LIMIT,
        ),
        chunk_size=_resolve(
            "chunk_size", chunk_size, "TORCHQUANDLE_CHUNK_SIZE", DEFAULT_CHUNK_SIZE
        ),
    )


def checks_enabled() -> bool:
    """Return ``True`` if post-condition checks are active."""
    if not __debug__:
        return False
    flag = os.environ.get("TORCHQUANDLE_CHECKS", "1").strip().lower()
    return flag not in ("0", "false", "no", "off")


# %% local utils
def _resolve(name, value, env, default):
    if value is None:
        raw = os.environ.get(env)
        if raw is None or raw.strip() == "":
            return default
        try:
            value = int(raw)
        except ValueError:
            raise ConfigError(f"{env}={raw!r} is not an integer") from None
    if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
        raise ConfigError(f"{name} must be a positive integer, got {value!r}")
    return value
