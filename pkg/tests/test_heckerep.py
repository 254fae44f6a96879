from fractions import Fraction
from math import factorial

import pytest

from dbmw.heckerep import (
    BiTableau, Bipartition, NonGenericPoint, are_equivalent, bitableau_count, enumerate_bipartitions, format_shape,
    hb_rep, hd_dim, hd_index_set, hd_rep, hd_rep_of_shape, hd_restrict, hecke_dim_identity, hook_count,
    is_irreducible, parse_label, parse_shape, partitions, standard_bitableaux, swap_split,
)

P1 = {"q": Fraction(4), "p0": Fraction(7)}
P2 = {"q": Fraction(5), "p0": Fraction(3)}


def test_partitions():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert partitions(0) == ((),)
    assert hook_count((2, 1)) == 2
    assert hook_count((3, 2)) == 5


def test_shape_literals():
    s = parse_shape("[2,1|1]")
    assert s == Bipartition((2, 1), (1,))
    assert format_shape(s) == "[2,1|1]"
    assert format_shape(parse_shape("[|1]")) == "[|1]"
    with pytest.raises(ValueError):
        parse_shape("[1,2|]")


@pytest.mark.parametrize("n", range(1, 6))
def test_bitableau_counts_match_enumeration(n):
    for bp in enumerate_bipartitions(n):
        tabs = standard_bitableaux(bp)
        assert len(tabs) == bitableau_count(bp)
        assert all(t.is_standard() for t in tabs)
    assert sum(bitableau_count(bp) ** 2 for bp in enumerate_bipartitions(n)) == 2 ** n * factorial(n)


@pytest.mark.parametrize("shape", ["[2|1]", "[1|1,1]", "[2,1|1]", "[1|2]", "[|2,1]"])
@pytest.mark.parametrize("point", [P1, P2])
def test_hb_and_hd_relations(shape, point):
    rep = hb_rep(shape, point)
    assert rep.dim == bitableau_count(parse_shape(shape))
    hd = hd_restrict(rep)
    assert hd.algebra == "HD"


def test_non_generic_point():
    with pytest.raises(NonGenericPoint):
        hb_rep("[1|1]", {"q": Fraction(4), "p0": Fraction(3), "p1": Fraction(3)})


@pytest.mark.parametrize("shape", ["[1|1]", "[2|2]", "[1,1|1,1]"])
def test_swap_split(shape):
    rep = hd_rep_of_shape(shape, P1)
    split = swap_split(rep)
    assert split.commutes and split.involution and split.projectors_ok
    assert split.plus.dim == split.minus.dim == rep.dim // 2
    assert is_irreducible(split.plus) and is_irreducible(split.minus)
    assert not is_irreducible(rep)
    assert not are_equivalent(split.plus, split.minus)


def test_swapped_components_are_equivalent_for_hd():
    a = hd_rep_of_shape("[2|1,1]", P1)
    b = hd_rep_of_shape("[1,1|2]", P1)
    assert is_irreducible(a)
    assert are_equivalent(a, b)


def test_split_refuses_unequal_components():
    with pytest.raises(ValueError):
        swap_split(hd_rep_of_shape("[2|1]", P1))


@pytest.mark.parametrize("n", range(2, 7))
def test_hd_dimension_identity(n):
    assert hecke_dim_identity(n)
    assert sum(hd_dim(l) ** 2 for l in hd_index_set(n)) == 2 ** (n - 1) * factorial(n)


def test_labels():
    labels = [str(l) for l in hd_index_set(2)]
    assert "{1|1}+" in labels and "{1|1}-" in labels
    assert len(labels) == len(set(labels)) == 4
    assert parse_label("{1|1}+").sign == 1
    assert str(parse_label("{2|}")) == "{2|}"
    assert hd_dim(parse_label("{1|1}+")) == 1


def test_hd_rep_by_label():
    rep = hd_rep(parse_label("{2|2}-"), P2)
    assert rep.dim == hd_dim(parse_label("{2|2}-")) == 3


def test_tableau_exchange_and_swap():
    t = standard_bitableaux(parse_shape("[1|1]"))[0]
    assert isinstance(t, BiTableau)
    assert t.exchange(1).is_standard()
    assert t.swap_components().swap_components() == t
