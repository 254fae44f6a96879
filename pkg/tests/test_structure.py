import pytest

from dbmw.heckerep import hd_dim, parse_label
from dbmw.structure import (
    adjacent, bd_component_labels, bmw_dim_identity, bmw_dimension, bratteli, hecke_dimension, quotient_dim_check,
    tower_report,
)


def test_level_three():
    g = bratteli(3)
    dims = [g.dims[(3, l)] for l in g.levels[3]]
    assert dims == [1, 2, 1, 3, 3, 6]
    assert g.level_total(3) == 60


def test_level_four_table():
    g = bratteli(4)
    got = {str(l): g.dims[(4, l)] for l in g.levels[4]}
    assert g.level_total(4) == 840
    for label in ("{4|}", "{3,1|}", "{2,2|}", "{3|1}", "{2,1|1}", "{2|2}+", "{1,1|1,1}-"):
        assert got[label] == hd_dim(parse_label(label))


@pytest.mark.parametrize("n", range(2, 7))
def test_identities(n):
    assert bmw_dim_identity(n)
    assert quotient_dim_check(n)
    assert tower_report(n).ok


def test_dimension_formulas():
    assert [bmw_dimension(m) for m in (2, 3, 4, 5)] == [6, 60, 840, 15120]
    assert [hecke_dimension(m) for m in (2, 3, 4)] == [4, 24, 192]


def test_label_counts():
    assert [len(bd_component_labels(m)) for m in (2, 3, 4)] == [6, 6, 19]
    with pytest.raises(ValueError):
        bd_component_labels(1)


def test_adjacency_ignores_signs():
    assert adjacent(parse_label("{1|1}+"), parse_label("{2|1}"))
    assert adjacent(parse_label("{1|1}-"), parse_label("{2|1}"))
    assert not adjacent(parse_label("{2|}"), parse_label("{1|1}+"))
    assert not adjacent(parse_label("{1|}"), parse_label("{1,1|1}"))


def test_text_export_lists_every_edge():
    g = bratteli(4)
    text = g.to_text()
    assert text.count(" -- ") == sum(len(v) for v in g.edges.values())
