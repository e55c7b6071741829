"""Test action polynomials."""

import pytest
import sympy

from torchquandle.base.errors import MalformedPolynomial
from torchquandle.quiver import ActionPolynomial, parse_polynomial


@pytest.mark.parametrize(
    "text, expected",
    [
        ("4u+9u^3", "9u^3 + 4u"),
        ("9u+4u^2", "4u^2 + 9u"),
        ("8u^2 + u", "8u^2 + u"),
        ("12u^6 + 15u^3 + 8u^2 + u", "12u^6 + 15u^3 + 8u^2 + u"),
        ("u + u + 2*u**2", "2u^2 + 2u"),
        ("0", "0"),
    ],
)
def test_parse(text, expected):
    assert str(parse_polynomial(text)) == expected


def test_misprint_reads_literally():
    assert parse_polynomial("12^2u+4u") == ActionPolynomial(((1, 148),))
    assert parse_polynomial("12^2u+4u") != parse_polynomial("12u^2+4u")


@pytest.mark.parametrize("text", ["u + 1", "x + u", "-u", "u/2", "u +", "1/u", "u^0"])
def test_malformed(text):
    with pytest.raises(MalformedPolynomial):
        parse_polynomial(text)


def test_construction():
    p = ActionPolynomial(((1, 4), (3, 9), (1, 0)))
    assert p.terms == ((3, 9), (1, 4))
    assert p == ActionPolynomial.from_terms({3: 9, 1: 4})
    assert p.degree == 3
    assert p.coefficient(3) == 9
    assert p.coefficient(2) == 0


def test_acting_element_not_compared():
    assert ActionPolynomial(((1, 2),), acting_element=0) == ActionPolynomial(((1, 2),), 1)


def test_negative_coefficient():
    with pytest.raises(MalformedPolynomial):
        ActionPolynomial(((1, -1),))
    with pytest.raises(MalformedPolynomial):
        ActionPolynomial(((0, 1),))


def test_from_lengths():
    assert str(ActionPolynomial.from_loop_lengths([1, 2, 2, 2, 2, 2, 2, 2, 2])) == "8u^2 + u"
    assert str(ActionPolynomial.from_cycle_lengths([1, 2, 2, 2, 2])) == "8u^2 + u"


def test_evaluate():
    p = parse_polynomial("8u^2 + u")
    assert p.evaluate() == 9
    assert p.evaluate(2) == 34
    assert ActionPolynomial(()).evaluate() == 0
    assert ActionPolynomial(()).degree == 0


def test_cycle_lengths():
    assert parse_polynomial("8u^2 + u").cycle_lengths() == (1, 2, 2, 2, 2)
    assert parse_polynomial("9u^3 + 4u").cycle_lengths() == (1, 1, 1, 1, 3, 3, 3)
    with pytest.raises(MalformedPolynomial):
        parse_polynomial("3u^2").cycle_lengths()


def test_as_expr():
    u = sympy.Symbol("u")
    assert parse_polynomial("8u^2 + u").as_expr() == 8 * u**2 + u
