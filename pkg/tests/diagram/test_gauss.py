"""Test signed Gauss code input."""

import pytest

from torchquandle.base.errors import ParseError, UnbalancedCrossing
from torchquandle.diagram import Crossing, linking_numbers, parse_signed_gauss


def test_trefoil():
    d = parse_signed_gauss("O1+ U2+ O3+ U1+ O2+ U3+")
    assert d.arc_count == 3
    assert d.component_count == 1
    assert d.crossings == (
        Crossing(1, 2, 0, 1),
        Crossing(1, 1, 2, 0),
        Crossing(1, 0, 1, 2),
    )


def test_commas_and_case():
    a = parse_signed_gauss("o1+, u2+, o3+, u1+, o2+, u3+")
    b = parse_signed_gauss("O1+ U2+ O3+ U1+ O2+ U3+")
    assert a == b


def test_hopf():
    d = parse_signed_gauss("O1+ U2+ | U1+ O2+")
    assert d.arc_count == 2
    assert d.component_count == 2
    assert linking_numbers(d)[0, 1] == 1.0


def test_virtual_trefoil():
    d = parse_signed_gauss("O1+ V3 O2+ U1+ V3 U2+", name="2.1")
    assert d.name == "2.1"
    assert d.arc_count == 2
    assert d.crossing_count == 2
    assert d.virtual_crossing_count == 1


def test_virtual_only():
    d = parse_signed_gauss("V1 V1")
    assert d.arc_count == 1
    assert d.crossing_count == 0


@pytest.mark.parametrize("text", ["O1+ U2+", "O1+ O1+ U1+", "O1+ U1+ V2"])
def test_unbalanced(text):
    with pytest.raises(UnbalancedCrossing):
        parse_signed_gauss(text)


@pytest.mark.parametrize("text", ["", "O1+ U1-", "X1+ U1+", "O1+ V1 U1+ V1"])
def test_malformed(text):
    with pytest.raises(ParseError):
        parse_signed_gauss(text)
