from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dbmw.diagrams import DiagElem, DiagramModel, classical_generators, dot_generator
from dbmw.models import evaluate
from dbmw.presentations import builtin_presentation, image_under_morphism
from dbmw.prover import BULLETS, Inconclusive, Proved, apply_step, derive_rules, prove_equal, replay
from dbmw.words import LinComb, parse_lincomb, parse_word


@pytest.fixture(scope="module")
def bbp():
    return builtin_presentation("BBprime", 3)


@pytest.fixture(scope="module")
def rules(bbp):
    return derive_rules(bbp)


def test_trivial_equality(bbp):
    a = parse_lincomb("X1 e1")
    res = prove_equal(a, a, bbp)
    assert isinstance(res, Proved) and res.length == 0


def test_single_rule(bbp, rules):
    res = prove_equal(parse_lincomb("X1 e1"), parse_lincomb("(l) e1"), bbp, rules=rules)
    assert res.ok and res.length == 1
    assert res.check()


def test_e0_square_bullet(bbp, rules):
    lhs = image_under_morphism(parse_lincomb("e0 e0"))
    rhs = image_under_morphism(parse_lincomb("(x) e0"))
    res = prove_equal(lhs, rhs, bbp, rules=rules)
    assert res.ok and res.check()
    assert replay(lhs, res.left, rules) == replay(rhs, res.right, rules)


def test_symmetric_in_arguments(bbp, rules):
    lhs = image_under_morphism(parse_lincomb("e1 X0"))
    rhs = image_under_morphism(parse_lincomb("e1"))
    a = prove_equal(lhs, rhs, bbp, rules=rules)
    b = prove_equal(rhs, lhs, bbp, rules=rules)
    assert a.ok and b.ok
    assert a.length == b.length
    assert a.meet == b.meet


def test_tiny_budget_is_inconclusive(bbp, rules):
    lhs = image_under_morphism(parse_lincomb("e0 X2 e0"))
    rhs = image_under_morphism(parse_lincomb("(l^-1) e0"))
    res = prove_equal(lhs, rhs, bbp, budget_states=5, rules=rules)
    assert isinstance(res, Inconclusive)
    assert res.status == "inconclusive"


def test_alphabet_is_enforced(bbp):
    with pytest.raises(ValueError):
        prove_equal(parse_lincomb("X0"), parse_lincomb("X0"), bbp)


def test_step_application_validates(rules):
    from dbmw.prover import Step
    lc = parse_lincomb("X1 e1")
    r = next(r for r in rules if r.pattern == parse_word("X1 e1"))
    out = apply_step(lc, Step(parse_word("X1 e1"), 0, r.index), rules)
    assert out == parse_lincomb("(l) e1")
    with pytest.raises(ValueError):
        apply_step(lc, Step(parse_word("X1 e1"), 1, r.index), rules)
    with pytest.raises(ValueError):
        apply_step(lc, Step(parse_word("e1"), 0, r.index), rules)


def test_bullets_are_twelve_with_one_unparsed():
    assert len(BULLETS) == 12
    assert [k for k, b in enumerate(BULLETS, 1) if b[1] is None] == [10]


def _classical(n):
    gens = classical_generators(n)
    pres = builtin_presentation("BBprime", n)
    by_name = {str(t): t for t in pres.alphabet}
    names = {"Y": dot_generator(n)}
    for i in range(1, n):
        names[f"X{i}"] = names[f"X{i}^-1"] = gens[f"X{i}"]
        names[f"e{i}"] = gens[f"e{i}"]
    assign = {by_name[k]: DiagElem.of(v) for k, v in names.items()}
    model = DiagramModel(n, point={"q": Fraction(1), "l": Fraction(1), "A": Fraction(0)})
    return assign, model


_ASSIGN, _MODEL = _classical(3)


def _defined_classically(rule):
    # rules solved for a term with coefficient divisible by delta blow up at q = 1
    try:
        for _, c in rule.replacement:
            _MODEL.scalar(c)
    except ZeroDivisionError:
        return False
    return True


_RULES = [r for r in derive_rules(builtin_presentation("BBprime", 3)) if _defined_classically(r)]
_ALPHA = [str(t) for t in builtin_presentation("BBprime", 3).alphabet]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.sampled_from(_ALPHA), max_size=3), st.lists(st.sampled_from(_ALPHA), max_size=3),
       st.integers(0, len(_RULES) - 1))
def test_every_rule_preserves_the_classical_value(pre, post, k):
    r = _RULES[k]
    pre_w, post_w = parse_word(" ".join(pre)), parse_word(" ".join(post))
    before = LinComb.of_word(pre_w + r.pattern + post_w)
    after = LinComb([(pre_w + v + post_w, c) for v, c in r.replacement])
    assert evaluate(before, _ASSIGN, _MODEL) == evaluate(after, _ASSIGN, _MODEL)
