"""Test DOT and CSV export."""

import re

from torchquandle.diagram import load_corpus
from torchquandle.homset import enumerate_colorings
from torchquandle.quandle import dihedral_quandle, trivial_quandle
from torchquandle.quiver import (
    TableRow,
    action_quiver,
    enhancement_pairs,
    export_dot,
    format_csv,
    full_coloring_quiver,
    parse_polynomial,
)


def row(link, polynomial, counting, element=0):
    return TableRow(link, "five_element", element, parse_polynomial(polynomial), counting)


def test_dot():
    h = enumerate_colorings(load_corpus("0_1"), trivial_quandle(2))
    dot = export_dot(action_quiver(h))
    assert dot.lstrip().startswith("digraph")
    assert "quiver" in dot
    assert 'coloring="1"' in dot
    assert 'coloring="2"' in dot
    assert 'label="2"' in dot
    assert dot.count("->") == 4
    assert dot == export_dot(action_quiver(h))


# Edges of a node are ordered by numeric label
def test_dot_label_order():
    h = enumerate_colorings(load_corpus("0_1"), trivial_quandle(11))
    dot = export_dot(action_quiver(h))
    labels = re.findall(r"^\s*0 -> 0 .*label=\"(\d+)\"", dot, flags=re.MULTILINE)
    assert labels == [str(label) for label in range(1, 12)]


def test_dot_full_quiver():
    h = enumerate_colorings(load_corpus("3_1"), dihedral_quandle(3))
    dot = export_dot(full_coloring_quiver(h))
    assert dot.count("->") == 81


def test_csv():
    text = format_csv([row("L2a1", "4u+9u^3", 13), row("L5a1", "4u+21u^3", 25, element=1)])
    assert text == (
        "link,quandle,element,polynomial,counting\n"
        "L2a1,five_element,1,9u^3 + 4u,13\n"
        "L5a1,five_element,2,21u^3 + 4u,25\n"
    )


def test_csv_empty():
    assert format_csv([]) == "link,quandle,element,polynomial,counting\n"


def test_enhancement_pairs():
    rows = [
        row("A", "8u^2 + 8u", 16),
        row("B", "12u^2 + 4u", 16),
        row("C", "12u^2 + 4u", 16),
        row("D", "4u^2 + 4u", 8),
        row("A", "16u", 16, element=1),
        row("B", "16u", 16, element=1),
    ]
    assert enhancement_pairs(rows) == (("A", "B", 0), ("A", "C", 0))
