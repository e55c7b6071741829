"""Test PD code input."""

import pytest

from torchquandle.base.errors import ParseError
from torchquandle.diagram import linking_numbers, parse_pd


def test_hopf():
    d = parse_pd("PD[X[4,1,3,2], X[2,3,1,4]]", name="hopf")
    assert d.name == "hopf"
    assert d.arc_count == 2
    assert d.component_count == 2
    assert [c.sign for c in d.crossings] == [-1, -1]
    assert linking_numbers(d)[0, 1] == -1.0


def test_trefoil():
    d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
    assert d.arc_count == 3
    assert d.component_count == 1
    assert [c.sign for c in d.crossings] == [-1, -1, -1]

    # under-strand 1 -> 2 and over-strand 4 -> 5 at the first crossing
    first = d.crossings[0]
    assert (first.under_in, first.under_out, first.over) == (0, 1, 2)


@pytest.mark.parametrize(
    "text",
    [
        "X[1,2,3]",
        "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] junk",
        "X[1,2,3,4]",
        "X[1,4,3,5] X[2,6,4,1] X[5,3,6,2]",
    ],
)
def test_malformed(text):
    with pytest.raises(ParseError):
        parse_pd(text)
