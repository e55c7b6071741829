"""Test counting table."""

import pytest

from torchquandle import counting_table
from torchquandle.base.errors import CapExceeded


def test_counting_table():
    assert counting_table("dihedral:3", ["0_1", "3_1", "L2a1", "L6a4"]).tolist() == [3, 9, 3, 3]


def test_four_element_counts():
    links = "L4a1 L5a1 L6a1 L6a5 L6n1 L7a1 L7a2 L7a3 L7a4 L7a7 L7n1 L7n2".split()
    counts = counting_table("bundled:four_element", links, workers=2)
    assert counts.tolist() == [16] * len(links)


def test_cap():
    with pytest.raises(CapExceeded):
        counting_table("trivial:3", "L6a4", cap=26)
