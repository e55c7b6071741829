"""Test error hierarchy."""

import pytest

from torchquandle.base import errors


@pytest.mark.parametrize(
    "error, family",
    [
        (errors.AxiomViolation("idempotence", (0,)), errors.InputError),
        (errors.ParseError("bad", 3), errors.InputError),
        (errors.CapExceeded(10), errors.LimitError),
        (errors.OracleTooLarge(100, 10), errors.LimitError),
        (errors.TooLarge(9, 8), errors.LimitError),
        (errors.InvariantError("broken"), errors.QuandleError),
    ],
)
def test_hierarchy(error, family):
    assert isinstance(error, family)
    assert isinstance(error, errors.QuandleError)


def test_input_errors_are_value_errors():
    assert issubclass(errors.InputError, ValueError)
    assert issubclass(errors.LimitError, RuntimeError)


def test_messages():
    assert str(errors.ParseError("bad token", 3)) == "line 3: bad token"
    assert str(errors.OutOfRange(5, 4, where="row 0")) == "value 5 outside 0..3 (row 0)"
    assert str(errors.CapExceeded(10)) == "homset exceeds cap of 10 colorings"
    assert errors.AxiomViolation("self-distributivity", [0, 1, 2]).witness == (0, 1, 2)
