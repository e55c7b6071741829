"""Test search limits."""

import pytest

from torchquandle.base.config import checks_enabled, prepare_search_limits
from torchquandle.base.errors import ConfigError


def test_defaults(monkeypatch):
    for name in ("CAP", "ORACLE_LIMIT", "ENDOMORPHISM_LIMIT", "CHUNK_SIZE"):
        monkeypatch.delenv(f"TORCHQUANDLE_{name}", raising=False)
    limits = prepare_search_limits()
    assert limits.cap == 1_000_000
    assert limits.oracle_limit == 10**8
    assert limits.endomorphism_limit == 8
    assert limits.chunk_size == 65_536


def test_environment(monkeypatch):
    monkeypatch.setenv("TORCHQUANDLE_CAP", "50")
    monkeypatch.setenv("TORCHQUANDLE_CHUNK_SIZE", " ")
    limits = prepare_search_limits()
    assert limits.cap == 50
    assert limits.chunk_size == 65_536


def test_argument_overrides_environment(monkeypatch):
    monkeypatch.setenv("TORCHQUANDLE_CAP", "50")
    assert prepare_search_limits(cap=3).cap == 3


def test_bad_environment(monkeypatch):
    monkeypatch.setenv("TORCHQUANDLE_ORACLE_LIMIT", "many")
    with pytest.raises(ConfigError):
        prepare_search_limits()


@pytest.mark.parametrize("cap", [0, -5, 2.5, True])
def test_bad_argument(cap):
    with pytest.raises(ConfigError):
        prepare_search_limits(cap=cap)


@pytest.mark.parametrize(
    "value, expected", [(None, True), ("1", True), ("off", False), ("0", False), ("False", False)]
)
def test_checks_enabled(monkeypatch, value, expected):
    if value is None:
        monkeypatch.delenv("TORCHQUANDLE_CHECKS", raising=False)
    else:
        monkeypatch.setenv("TORCHQUANDLE_CHECKS", value)
    assert checks_enabled() is expected
