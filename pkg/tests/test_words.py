import pytest

from dbmw.presentations import (
    BD_FAMILIES, Presentation, Relation, bd_to_bbprime_images, builtin_presentation, image_under_morphism,
)
from dbmw.scalars import ScalarFraction, lam, q
from dbmw.words import E, LinComb, X, Xi, format_lincomb, format_word, parse_lincomb, parse_word, word


def test_word_round_trip():
    w = parse_word("X0 e1 X1^-1 X2^-1")
    assert w == word(X(0), E(1), Xi(1), Xi(2))
    assert parse_word(format_word(w)) == w
    assert parse_word("") == ()
    with pytest.raises(ValueError):
        parse_word("Z1")
    with pytest.raises(ValueError):
        parse_word("e1^-1")


def test_lincomb_arithmetic():
    a = parse_lincomb("X1 + (2) e1")
    assert (a - a).is_zero()
    b = parse_lincomb("(q - q^-1) X1 e1 + (-1) X0")
    assert parse_lincomb(format_lincomb(b)) == b
    assert parse_lincomb("X1") * parse_lincomb("e1") == parse_lincomb("X1 e1")
    assert parse_lincomb("(l^-1)") == LinComb.scalar(ScalarFraction.of(lam ** -1))
    assert parse_lincomb("((q)/(q + 1)) X1").terms[word(X(1))] == ScalarFraction(q, q + 1)


def test_bd_families_all_present():
    pres = builtin_presentation("BD", 3)
    fams = pres.families()
    for f in BD_FAMILIES:
        assert f in fams
    assert pres.by_family("bd3a")
    assert pres.relation("lem1la")
    assert "lem1ha'[+]" in [r.name for r in pres.relations]


def test_bbprime_y_square():
    pres = builtin_presentation("BBprime", 3)
    rel = [r for r in pres.relations if r.lhs == parse_lincomb("Y Y")]
    assert rel and rel[0].rhs == parse_lincomb("(l^-1)")


def test_alphabets():
    bad = Relation("bad", "bad", parse_lincomb("Y X1"), parse_lincomb("X1 Y"))
    with pytest.raises(ValueError):
        Presentation("HD", 3, builtin_presentation("HD", 3).alphabet, [bad])
    with pytest.raises(ValueError):
        builtin_presentation("NOPE", 3)


def test_morphism_images():
    images = bd_to_bbprime_images()
    assert images[X(0)] == parse_lincomb("(l) Y X1 Y")
    assert image_under_morphism(parse_lincomb("e0")) == parse_lincomb("(l) Y e1 Y")
    assert image_under_morphism(parse_lincomb("X2 e1")) == parse_lincomb("X2 e1")


@pytest.mark.parametrize("name", ["WD", "WB", "HD", "HB", "BD", "BBprime"])
def test_presentations_build(name):
    pres = builtin_presentation(name, 4)
    assert pres.relations
    names = [r.name for r in pres.relations]
    assert len(names) == len(set(names))
