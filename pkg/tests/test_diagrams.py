import random
from fractions import Fraction

import pytest

from dbmw.diagrams import (
    DiagElem, DottedDiagram, classical_generators, closure_trace, diagram_trace, double_factorial,
    enumerate_even_basis, expected_basis_size, format_diagram, gram_entry_oracle, gram_matrix, gram_report, multiply,
    parse_diagram, perfect_matchings, random_basis_element, symbolic_gram_det, trace_axioms, verify_bbprime_classical,
    verify_bd_classical,
)
from dbmw.scalars import ONE, parse_poly, x


def _rand(n, rng):
    match = rng.choice(perfect_matchings(2 * n))
    return DottedDiagram.from_arcs(n, [(a, b, rng.randint(0, 1)) for a, b in match])


def test_literal_round_trip():
    d = parse_diagram("n=3; (t1-b2:1)(t2-t3:0)(b1-b3:1)")
    assert parse_diagram(format_diagram(d)) == d
    with pytest.raises(ValueError):
        parse_diagram("n=2; (t1-b2:0)")


def test_identity_and_closed_loops():
    g = classical_generators(2)
    one = DottedDiagram.identity(2)
    assert multiply(one, g["e1"]) == (ONE, g["e1"])
    c, d = multiply(g["e1"], g["e1"])
    assert (c, d) == (x, g["e1"])
    # a loop carrying one dot vanishes
    c, _ = multiply(g["e0"], g["e1"])
    assert c.is_zero()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_associativity_and_star(n):
    rng = random.Random(n)
    for _ in range(100):
        a, b, c = (DiagElem.of(_rand(n, rng)) for _ in range(3))
        assert a.mul(b).mul(c) == a.mul(b.mul(c))
        assert a.mul(b).star() == b.star().mul(a.star())
        assert a.star().star() == a


@pytest.mark.parametrize("n", [2, 3, 4])
def test_trace_is_cyclic(n):
    rng = random.Random(10 + n)
    for _ in range(100):
        a, b = DiagElem.of(random_basis_element(n, rng)), DiagElem.of(random_basis_element(n, rng))
        assert closure_trace(a.mul(b)) == closure_trace(b.mul(a))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_markov(n):
    rep = trace_axioms(n)
    assert rep.ok, rep.witnesses


def test_trace_values():
    g = classical_generators(3)
    assert diagram_trace(DottedDiagram.identity(3)) == ONE
    assert diagram_trace(g["e1"]) == x ** -1
    assert diagram_trace(g["X1"]) == x ** -1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_basis_counts(n):
    basis = enumerate_even_basis(n)
    assert len(basis) == expected_basis_size(n) == 2 ** (n - 1) * double_factorial(2 * n - 1)
    assert all(d.is_even() for d in basis)
    assert len(set(basis)) == len(basis)


@pytest.mark.parametrize("n", [2, 3])
def test_gram_matches_product_oracle(n):
    g = gram_matrix(n)
    for i, a in enumerate(g.basis):
        for j, b in enumerate(g.basis):
            assert g.entry(i, j) == gram_entry_oracle(a, b)
    assert g.is_symmetric()


def test_gram_two_strands():
    g = gram_matrix(2)
    sym = symbolic_gram_det(g)
    # (x - 2)^2 (x + 4) / x^3
    assert sym == parse_poly("1 - 12*x^-2 + 16*x^-3")
    rep = gram_report(2, points=[3])
    assert rep.det_at_points[0]["value"] == "7/27"
    assert rep.ok and rep.degree_certificate


def test_gram_three_strands_nonzero():
    rep = gram_report(3, points=[3, 5, 7])
    assert rep.ok
    assert all(Fraction(p["value"]) != 0 for p in rep.det_at_points)


@pytest.mark.slow
def test_gram_four_strands_modular():
    rep = gram_report(4, points=[3], workers=2)
    assert rep.basis_size == 840
    assert rep.ok
    assert rep.det_at_points[0]["method"] == "modular"


@pytest.mark.parametrize("n", [2, 3])
def test_relations_in_model(n):
    assert verify_bd_classical(n).ok
    assert verify_bbprime_classical(n).ok
