"""Test the bundled link corpus."""

from importlib import resources

import numpy as np
import pytest

from torchquandle.base.errors import UnknownName
from torchquandle.diagram import (
    corpus_names,
    diagram_from_source,
    freeze_corpus,
    invariance_pairs,
    linking_numbers,
    load_corpus,
    parse_pd,
    published_pd_codes,
    table_links,
)
from torchquandle.homset import enumerate_colorings
from torchquandle.quandle import bundled_quandle
from torchquandle.quiver import action_polynomial

TABLE = (
    "L2a1 L4a1 L5a1 L6a1 L6a2 L6a3 L6a4 L6a5 L6n1 "
    "L7a1 L7a2 L7a3 L7a4 L7a5 L7a6 L7a7 L7n1 L7n2"
).split()

# off-diagonal linking numbers of the published orientations
LINKING = {
    "L2a1": [-1],
    "L4a1": [-2],
    "L5a1": [0],
    "L6a1": [-2],
    "L6a2": [-3],
    "L6a3": [-3],
    "L6a4": [0, 0, 0],
    "L6a5": [-1, -1, -1],
    "L6n1": [-1, 1, 1],
    "L7a1": [0],
    "L7a2": [-2],
    "L7a3": [0],
    "L7a4": [0],
    "L7a5": [-1],
    "L7a6": [1],
    "L7a7": [-1, -1, 1],
    "L7n1": [-2],
    "L7n2": [0],
}


def test_names():
    names = corpus_names()
    assert names[:2] == ("0_1", "3_1")
    assert names[2:20] == tuple(TABLE)
    assert len(set(names)) == len(names)
    assert table_links() == tuple(TABLE)


def test_pairs():
    pairs = invariance_pairs()
    assert pairs[:4] == (
        ("3_1", "3_1_r1r2"),
        ("L2a1", "L2a1_r1"),
        ("L5a1", "L5a1_r2"),
        ("L6n1", "L6n1_r3"),
    )
    assert pairs[4:] == tuple((name, f"{name}_braid") for name in TABLE)


def test_published_codes():
    codes = published_pd_codes()
    assert list(codes) == TABLE
    assert codes["L2a1"] == ("L2a1{0}", "PD[X[4, 1, 3, 2], X[2, 3, 1, 4]]")
    assert codes["L6a4"][0] == "L6a4{0,0}"


# Committed files are exactly what the converter writes
def test_freeze(tmp_path):
    written = freeze_corpus(tmp_path / "links")
    assert [path.stem for path in written] == TABLE
    bundled = resources.files("torchquandle.data").joinpath("links")
    for path in written:
        assert path.read_text() == bundled.joinpath(path.name).read_text()


@pytest.mark.parametrize("name", TABLE)
def test_frozen_matches_pd(name):
    _, pd = published_pd_codes()[name]
    d = parse_pd(pd, name=name)
    assert load_corpus(name) == d


@pytest.mark.parametrize("name", corpus_names())
def test_load(name):
    d = load_corpus(name)
    assert d.name == name
    assert d.virtual_crossing_count == 0


def test_hopf():
    d = load_corpus("L2a1")
    assert d.arc_count == 2
    assert [c.sign for c in d.crossings] == [-1, -1]
    assert [(c.over, c.under_in, c.under_out) for c in d.crossings] == [(0, 1, 1), (1, 0, 0)]


@pytest.mark.parametrize(
    "name, components",
    [
        ("0_1", 1),
        ("3_1", 1),
        ("L2a1", 2),
        ("L4a1", 2),
        ("L5a1", 2),
        ("L6a1", 2),
        ("L6a4", 3),
        ("L6a5", 3),
        ("L6n1", 3),
        ("L7a7", 3),
    ],
)
def test_component_counts(name, components):
    assert load_corpus(name).component_count == components


@pytest.mark.parametrize("name", TABLE)
def test_linking_numbers(name):
    lk = linking_numbers(load_corpus(name))
    assert sorted(lk[np.triu_indices_from(lk, k=1)]) == LINKING[name]


def test_linking_matrix():
    expected = [[0, -1, 1], [-1, 0, 1], [1, 1, 0]]
    np.testing.assert_array_equal(linking_numbers(load_corpus("L6n1")), expected)


# Variants share the component count and linking numbers up to order
@pytest.mark.parametrize("base, variant", invariance_pairs())
def test_variants_agree(base, variant):
    a, b = load_corpus(base), load_corpus(variant)
    assert a.component_count == b.component_count
    lk_a = np.sort(linking_numbers(a).ravel())
    lk_b = np.sort(linking_numbers(b).ravel())
    np.testing.assert_array_equal(lk_a, lk_b)


# L7a3 and L7a4 are distinct links, not mirror diagrams of one link
def test_l7a3_l7a4_differ():
    q = bundled_quandle("six_element")
    a = enumerate_colorings(load_corpus("L7a3"), q)
    b = enumerate_colorings(load_corpus("L7a4"), q)
    assert len(a) == 48
    assert len(b) == 36
    assert str(action_polynomial(a, 3)) == "36u^6 + 3u^3 + 8u^2 + u"
    assert str(action_polynomial(b, 3)) == "12u^6 + 15u^3 + 8u^2 + u"


def test_unknown():
    with pytest.raises(UnknownName):
        load_corpus("L9a1")


def test_diagram_from_source(tmp_path):
    assert diagram_from_source("L2a1") is load_corpus("L2a1")

    path = tmp_path / "hopf.pd"
    path.write_text("X[4,1,3,2] X[2,3,1,4]")
    assert diagram_from_source(path).name == "hopf"

    path = tmp_path / "trefoil.braid"
    path.write_text("1 1 1\n")
    assert diagram_from_source(str(path)).crossings == load_corpus("3_1").crossings

    path = tmp_path / "trefoil.gauss"
    path.write_text("O1+ U2+ O3+ U1+ O2+ U3+\n")
    assert diagram_from_source(path).arc_count == 3
