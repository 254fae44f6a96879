import random
from fractions import Fraction

import numpy as np
import pytest

from dbmw.matrix import ExactMatrix, det, det_cofactor, det_mod_p, mat_rank_det_nullspace, nullspace


def test_identity():
    e = mat_rank_det_nullspace(ExactMatrix.identity(3))
    assert (e.rank, e.det, e.nullspace) == (3, 1, [])


def test_rank_one():
    m = ExactMatrix([[1, 1], [1, 1]])
    e = mat_rank_det_nullspace(m)
    assert e.rank == 1 and e.det == 0
    assert len(e.nullspace) == 1
    v = e.nullspace[0]
    assert v[0] == -v[1] != 0


@pytest.mark.parametrize("seed", range(20))
def test_det_matches_cofactor_oracle(seed):
    rng = random.Random(seed)
    rows = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(5)]
    assert det(ExactMatrix(rows)) == det_cofactor(rows)


@pytest.mark.parametrize("seed", range(10))
def test_nullspace_vectors_are_annihilated(seed):
    rng = random.Random(seed)
    base = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(6)] for _ in range(3)]
    rows = base + [[a + b for a, b in zip(base[0], base[1])]]
    m = ExactMatrix(rows)
    for v in nullspace(m):
        col = ExactMatrix([[c] for c in v])
        assert (m @ col).is_zero()
    assert mat_rank_det_nullspace(m).rank + len(nullspace(m)) == 6


def test_det_mod_p_agrees_with_exact():
    rng = random.Random(3)
    p = 2147483629
    for _ in range(5):
        rows = [[rng.randint(-50, 50) for _ in range(7)] for _ in range(7)]
        assert det_mod_p(np.array(rows), p) == int(det(ExactMatrix(rows))) % p


def test_rational_determinant():
    m = ExactMatrix([[Fraction(1, 2), 1], [Fraction(1, 3), 1]])
    assert det(m) == Fraction(1, 6)


def test_shape_errors():
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2]]) @ ExactMatrix([[1, 2]])
    with pytest.raises(ValueError):
        det(ExactMatrix([[1, 2]]))
