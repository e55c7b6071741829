"""Test command-line interface."""

import pytest

from torchquandle.base.errors import ConfigError
from torchquandle.cli import RunConfig, expand_links, main, parse_args
from torchquandle.diagram import table_links


def test_poly(capsys):
    assert main(["poly", "-q", "dihedral:3", "-l", "3_1", "-e", "1"]) == 0
    assert capsys.readouterr().out == "8u^2 + u\n"


def test_poly_all(capsys):
    assert main(["poly", "-q", "dihedral:3", "-l", "3_1", "-e", "all"]) == 0
    assert capsys.readouterr().out == "1: 8u^2 + u\n2: 8u^2 + u\n3: 8u^2 + u\n"


def test_poly_csv(capsys):
    assert main(["poly", "-q", "dihedral:3", "-l", "3_1", "-e", "2", "--format", "csv"]) == 0
    assert capsys.readouterr().out == (
        "link,quandle,element,polynomial,counting\n3_1,dihedral:3,2,8u^2 + u,9\n"
    )


def test_count(capsys):
    assert main(["count", "-q", "trivial:3", "-l", "3_1"]) == 0
    assert capsys.readouterr().out == "3\n"


def test_colorings(capsys):
    assert main(["colorings", "-q", "trivial:2", "-l", "3_1"]) == 0
    assert capsys.readouterr().out == "1,1,1\n2,2,2\n"


def test_validate(capsys):
    assert main(["validate", "-q", "dihedral:3", "-l", "L2a1"]) == 0
    assert capsys.readouterr().out == (
        "valid quandle dihedral:3 with 3 elements\n"
        "valid diagram L2a1: 2 arcs, 2 crossings, 2 components\n"
    )


def test_quiver(capsys):
    assert main(["quiver", "-q", "trivial:2", "-l", "0_1"]) == 0
    assert capsys.readouterr().out == "0 -> 0 [1]\n0 -> 0 [2]\n1 -> 1 [1]\n1 -> 1 [2]\n"


def test_quiver_labels_dot(capsys):
    assert main(["quiver", "-q", "dihedral:3", "-l", "3_1", "--labels", "2", "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.count("->") == 9
    assert 'label="2"' in out


def test_full_quiver(capsys):
    assert main(["quiver", "-q", "dihedral:3", "-l", "3_1", "--full"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 81


def test_table(capsys):
    argv = ["table", "-q", "bundled:five_element", "--links", "L2a1,L5a1", "-e", "1"]
    assert main(argv) == 0
    assert capsys.readouterr().out == (
        "link,quandle,element,polynomial,counting\n"
        "L2a1,five_element,1,9u^3 + 4u,13\n"
        "L5a1,five_element,1,21u^3 + 4u,25\n"
    )


def test_output_file(tmp_path, capsys):
    path = tmp_path / "count.txt"
    assert main(["count", "-q", "dihedral:3", "-l", "3_1", "-o", str(path)]) == 0
    assert path.read_text() == "9\n"
    assert capsys.readouterr().out == ""


def test_diagram_file(tmp_path, capsys):
    path = tmp_path / "hopf.gauss"
    path.write_text("O1+ U2+ | U1+ O2+\n")
    assert main(["count", "-q", "dihedral:3", "-l", str(path)]) == 0
    assert capsys.readouterr().out == "3\n"


# Exit codes: 1 input, 2 limit
def test_unknown_link(capsys):
    assert main(["count", "-q", "dihedral:3", "-l", "L9z9"]) == 1
    assert capsys.readouterr().err.startswith("error: ")


def test_invalid_quandle_file(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("2\n2 2\n1 1\n")
    assert main(["validate", "-q", str(path)]) == 1
    assert f"error: {path}: idempotence" in capsys.readouterr().err


def test_missing_group_table(tmp_path, capsys):
    missing = tmp_path / "group.txt"
    assert main(["count", "-q", f"conj:{missing}", "-l", "3_1"]) == 1
    assert capsys.readouterr().err.startswith("error: cannot read group table")


def test_unwritable_output(tmp_path, capsys):
    path = tmp_path / "missing" / "count.txt"
    assert main(["count", "-q", "dihedral:3", "-l", "3_1", "-o", str(path)]) == 1
    assert not path.exists()
    assert capsys.readouterr().err.startswith(f"error: cannot write {path}")


def test_element_out_of_range(capsys):
    assert main(["poly", "-q", "dihedral:3", "-l", "3_1", "-e", "4"]) == 1


def test_cap_exceeded(capsys):
    assert main(["count", "-q", "dihedral:3", "-l", "3_1", "--cap", "8"]) == 2
    assert "cap of 8" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["count", "-q", "trivial:2"],
        ["poly", "-q", "trivial:2", "-l", "3_1"],
        ["poly", "-q", "trivial:2", "-l", "3_1", "-e", "0"],
        ["poly", "-q", "trivial:2", "-l", "3_1", "-e", "1", "--format", "dot"],
        ["table", "-q", "trivial:2"],
        ["table", "-q", "trivial:2", "--links", "all", "--workers", "0"],
        ["frobnicate"],
    ],
)
def test_bad_arguments(argv, capsys):
    assert main(argv) == 1
    with pytest.raises(ConfigError):
        parse_args(argv)


def test_parse_args():
    config = parse_args(["table", "-q", "trivial:2", "--links", "all", "-vv"])
    assert config == RunConfig(
        command="table",
        quandle_source="trivial:2",
        links="all",
        element="all",
        format="csv",
        verbose=2,
    )


def test_run_config():
    with pytest.raises(ConfigError):
        RunConfig("count", quandle_source="trivial:2", link_source="3_1", format="csv")


def test_expand_links():
    assert expand_links("all") == table_links()
    assert expand_links("L2a1..L4a1") == ("L2a1", "L4a1")
    assert expand_links("L6a1..L6n1") == ("L6a1", "L6a2", "L6a3", "L6a4", "L6a5", "L6n1")
    assert expand_links("L2a1, 3_1,") == ("L2a1", "3_1")
    with pytest.raises(ConfigError):
        expand_links("L2a1..L9a9")
