import random

import pytest

from dbmw.coxeter import (
    SignedPerm, compose, compose_all, enumerate_group, even_signed, format_signed_perm, parse_signed_perm,
    random_element, verify_embedding, wb_generator, wb_generators, wd_generator, wd_generators,
)
from dbmw.models import GroupModel, check_relations_in_model
from dbmw.presentations import builtin_presentation


def test_generators():
    y = wb_generator(2, "Y")
    assert (y.images, y.signs) == ((1, 2), (-1, 1))
    x1 = wb_generator(2, "X1")
    assert (x1.images, x1.signs) == ((2, 1), (1, 1))
    x0 = wd_generator(2, "X0")
    assert (x0.images, x0.signs) == ((2, 1), (-1, -1))
    with pytest.raises(ValueError):
        wb_generator(3, "X3")
    with pytest.raises(ValueError):
        wb_generator(3, "Z")


def test_small_relations():
    n = 3
    g = wb_generators(n)
    e = SignedPerm.identity(n)
    assert compose(g["Y"], g["Y"]) == e
    assert compose(g["X1"], g["X1"]) == e
    x0 = compose_all((g["Y"], g["X1"], g["Y"]), n)
    assert compose(x0, x0) == e
    assert compose_all((g["X1"], g["X2"], g["X1"]), n) == compose_all((g["X2"], g["X1"], g["X2"]), n)
    d = wd_generators(n)
    assert compose_all((d["X0"], d["X2"], d["X0"]), n) == compose_all((d["X2"], d["X0"], d["X2"]), n)
    assert compose(d["X0"], d["X1"]) == compose(d["X1"], d["X0"])


def test_group_orders():
    assert len(enumerate_group(wb_generators(3).values())) == 48
    assert len(enumerate_group(wd_generators(3).values())) == 24
    assert enumerate_group([SignedPerm.identity(3)]) == [SignedPerm.identity(3)]


@pytest.mark.parametrize("n,size", [(2, 4), (3, 24), (4, 192)])
def test_embedding(n, size):
    rep = verify_embedding(n)
    assert rep.ok
    assert rep.image_size == size
    assert rep.even_characterization


def test_embedding_bounds():
    with pytest.raises(ValueError):
        verify_embedding(1)
    with pytest.raises(ValueError):
        verify_embedding(6)


def test_group_axioms_on_random_triples():
    rng = random.Random(7)
    for n in (2, 3, 4):
        e = SignedPerm.identity(n)
        for _ in range(100):
            a, b, c = (random_element(n, rng) for _ in range(3))
            assert compose(compose(a, b), c) == compose(a, compose(b, c))
            assert compose(a, a.inverse()) == e == compose(a.inverse(), a)
            assert compose(a, e) == a
            assert compose(a, b).sign_product() == a.sign_product() * b.sign_product()


def test_image_lies_in_even_part():
    for n in (2, 3, 4):
        image = enumerate_group(wd_generators(n).values())
        assert all(g.sign_product() == 1 for g in image)
        assert image == even_signed(n)


@pytest.mark.parametrize("n", range(2, 7))
def test_wb_relations_hold(n):
    model = GroupModel(n)
    assign = {k: model.element(v) for k, v in wb_generators(n).items()}
    assert check_relations_in_model(assign, builtin_presentation("WB", n), model).ok


def test_literal_round_trip():
    g = parse_signed_perm("[2,-1,3]")
    assert format_signed_perm(g) == "[2,-1,3]"
    assert g.apply(1) == 2 and g.apply(2) == -1
    with pytest.raises(ValueError):
        parse_signed_perm("[1,1]")
    with pytest.raises(ValueError):
        parse_signed_perm("2,1")
    with pytest.raises(ValueError):
        compose(SignedPerm.identity(2), SignedPerm.identity(3))
