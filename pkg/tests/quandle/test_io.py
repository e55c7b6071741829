"""Test quandle table I/O and builtin specifications."""

import pytest
import torch

from torchquandle.base.errors import ConfigError, OutOfRange, ParseError, UnknownName
from torchquandle.quandle import (
    alexander_quandle,
    bundled_quandle,
    bundled_quandle_names,
    dihedral_quandle,
    format_quandle,
    load_quandle,
    quandle_from_spec,
    read_quandle,
    read_table,
    trivial_quandle,
)


def test_read_table():
    table = read_table("# comment\n3\n1 3 2\n3 2 1  # trailing\n2 1 3\n")
    assert torch.equal(table, dihedral_quandle(3).table)


def test_format_then_read():
    q = alexander_quandle(5, 3)
    assert read_quandle(format_quandle(q)) == q


def test_format_quandle():
    assert format_quandle(dihedral_quandle(3)) == "3\n1 3 2\n3 2 1\n2 1 3\n"


@pytest.mark.parametrize(
    "text",
    ["", "x\n", "0\n", "2\n1 1\n", "2\n1 1\n2\n", "2\n1 a\n2 2\n"],
)
def test_read_table_malformed(text):
    with pytest.raises(ParseError):
        read_table(text)


def test_read_table_out_of_range():
    with pytest.raises(OutOfRange):
        read_table("2\n1 3\n2 2\n")


def test_parse_error_line_number():
    with pytest.raises(ParseError) as err:
        read_table("2\n1 1\n2 x\n")
    assert err.value.line == 3


def test_load_quandle(tmp_path):
    path = tmp_path / "r3.txt"
    path.write_text(format_quandle(dihedral_quandle(3)))
    q = load_quandle(path)
    assert q.name == "r3"
    assert q == dihedral_quandle(3)


@pytest.mark.parametrize("name", bundled_quandle_names())
def test_bundled(name):
    q = bundled_quandle(name)
    assert q.name == name
    assert q.n == {"four_element": 4, "five_element": 5, "six_element": 6}[name]


def test_bundled_unknown():
    with pytest.raises(UnknownName):
        bundled_quandle("seven_element")


def test_specs(tmp_path):
    assert quandle_from_spec("trivial:3") == trivial_quandle(3)
    assert quandle_from_spec("dihedral:4") == dihedral_quandle(4)
    assert quandle_from_spec("alexander:5:2") == alexander_quandle(5, 2)
    assert quandle_from_spec("bundled:four_element") == bundled_quandle("four_element")

    path = tmp_path / "table.txt"
    path.write_text(format_quandle(dihedral_quandle(5)))
    assert quandle_from_spec(str(path)) == dihedral_quandle(5)


def test_conjugation_spec(tmp_path):
    path = tmp_path / "z3.txt"
    path.write_text("3\n1 2 3\n2 3 1\n3 1 2\n")
    q = quandle_from_spec(f"conj:{path}")
    assert q.name == "conj:z3"
    assert q == trivial_quandle(3)


def test_missing_table_files(tmp_path):
    missing = tmp_path / "missing.txt"
    with pytest.raises(ConfigError, match="cannot read group table"):
        quandle_from_spec(f"conj:{missing}")
    with pytest.raises(ConfigError, match="cannot read quandle table"):
        load_quandle(missing)


@pytest.mark.parametrize("spec", ["dihedral", "dihedral:x", "alexander:5", "trivial:2:3", "nope"])
def test_bad_specs(spec):
    with pytest.raises(ConfigError):
        quandle_from_spec(spec)
