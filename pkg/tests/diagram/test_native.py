"""Test native crossing-list format."""

import pytest

from torchquandle.base.errors import ArcConsistencyError, ParseError
from torchquandle.diagram import (
    Crossing,
    crossing_relations,
    linking_numbers,
    load_corpus,
    load_diagram,
    make_diagram,
    parse_crossing_list,
    serialize,
)

TREFOIL = """
name 3_1
arcs 3
+1 2 1 3   # over, under in, under out
+1 3 2 1
+  1 3 2
"""


@pytest.fixture
def trefoil():
    return parse_crossing_list(TREFOIL)


def test_parse(trefoil):
    assert trefoil.name == "3_1"
    assert trefoil.arc_count == 3
    assert trefoil.crossings[0] == Crossing(1, 1, 0, 2)
    assert trefoil.components == ((0, 2, 1),)
    assert trefoil.component_count == 1
    assert trefoil.virtual_crossing_count == 0


def test_matches_corpus(trefoil):
    assert trefoil == load_corpus("3_1")


def test_relations(trefoil):
    relation = crossing_relations(trefoil)[0]
    assert (relation.lhs, relation.rhs_base, relation.rhs_actor) == (2, 0, 1)
    assert relation.op == "▷"


def test_serialize(trefoil):
    assert serialize(trefoil) == (
        "name 3_1\narcs 3\n+1 2 1 3\n+1 3 2 1\n+1 1 3 2\ncomponent 1 3 2\n"
    )
    assert parse_crossing_list(serialize(trefoil)) == trefoil


def test_serialize_virtual_link():
    d = make_diagram(2, [Crossing(-1, 0, 1, 1)], name="v", virtual_crossing_count=2)
    again = parse_crossing_list(serialize(d))
    assert again == d
    assert again.virtual_crossing_count == 2


def test_unknot():
    d = parse_crossing_list("arcs 1\n", name="0_1")
    assert d.components == ((0,),)
    assert d.crossing_count == 0


def test_load_diagram(tmp_path):
    path = tmp_path / "trefoil.txt"
    path.write_text(TREFOIL.replace("name 3_1\n", ""))
    assert load_diagram(path).name == "trefoil"


def test_explicit_components():
    d = parse_crossing_list(TREFOIL + "component 3 2 1\n")
    assert d.components == ((0, 2, 1),)


def test_component_mismatch():
    with pytest.raises(ArcConsistencyError):
        parse_crossing_list(TREFOIL + "component 1 2 3\n")


def test_inconsistent_arcs():
    with pytest.raises(ArcConsistencyError) as err:
        parse_crossing_list("arcs 2\n+1 1 1 2\n")
    assert err.value.arc == 1


def test_arc_entered_twice():
    with pytest.raises(ArcConsistencyError):
        parse_crossing_list("arcs 2\n+1 1 1 2\n+1 2 1 2\n")


@pytest.mark.parametrize(
    "text",
    [
        "+1 1 1 1\n",
        "arcs 0\n",
        "arcs 2\narcs 2\n",
        "arcs 2\n+1 3 1 2\n",
        "arcs 2\n2 1 1 2\n",
        "arcs 2\n+1 1 1\n",
        "arcs 2\n+1 a 1 2\n",
    ],
)
def test_malformed(text):
    with pytest.raises(ParseError):
        parse_crossing_list(text)


def test_parse_error_line():
    with pytest.raises(ParseError) as err:
        parse_crossing_list("arcs 3\n\n+1 2 1 3\n+1 9 2 1\n")
    assert err.value.line == 4


def test_linking_numbers():
    hopf = make_diagram(2, [Crossing(1, 1, 0, 0), Crossing(1, 0, 1, 1)])
    assert linking_numbers(hopf).tolist() == [[0.0, 1.0], [1.0, 0.0]]
    assert linking_numbers(load_corpus("3_1")).tolist() == [[0.0]]
