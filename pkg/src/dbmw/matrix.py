"""Exact dense matrices over the rationals (and small symbolic determinants)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

Row = tuple[Fraction, ...]


class ExactMatrix:
    """Immutable rectangular matrix of :class:`fractions.Fraction`."""

    __slots__ = ("rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Sequence[Sequence], ncols: int | None = None):
        self.rows: tuple[Row, ...] = tuple(tuple(Fraction(v) for v in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, r: int, c: int) -> "ExactMatrix":
        return cls([[0] * c for _ in range(r)], ncols=c)

    @classmethod
    def diagonal(cls, entries: Sequence) -> "ExactMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows)) if other.rows else []
        out = []
        for r in self.rows:
            nz = [(k, v) for k, v in enumerate(r) if v]
            out.append([sum((v * col[k] for k, v in nz), Fraction(0)) for col in cols])
        return ExactMatrix(out, ncols=other.ncols)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], ncols=self.ncols)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "ExactMatrix":
        c = Fraction(c)
        return ExactMatrix([[c * v for v in r] for r in self.rows], ncols=self.ncols)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(c) for c in zip(*self.rows)], ncols=self.nrows)

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.rows for v in r)

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def flat(self) -> list[Fraction]:
        return [v for r in self.rows for v in r]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in r) for r in self.rows)
        return f"ExactMatrix([{body}])"


@dataclass(frozen=True)
class Elimination:
    rank: int
    det: Fraction | None
    nullspace: list[list[Fraction]]


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [list(map(Fraction, r)) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(m: ExactMatrix) -> list[list[Fraction]]:
    red, pivots = rref(m.rows, m.ncols)
    free = [c for c in range(m.ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def rank(m: ExactMatrix) -> int:
    return len(rref(m.rows, m.ncols)[1])


def det(m: ExactMatrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination on a common-denominator integer matrix."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return Fraction(1)
    from math import lcm
    scale = Fraction(1)
    a: list[list[int]] = []
    for r in m.rows:
        L = lcm(*(v.denominator for v in r))
        scale /= L
        a.append([int(v * L) for v in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1] * scale


def mat_rank_det_nullspace(m: ExactMatrix) -> Elimination:
    return Elimination(rank=rank(m), det=det(m) if m.nrows == m.ncols else None, nullspace=nullspace(m))


def det_cofactor(m: Sequence[Sequence], zero=0, one=1):
    """Laplace expansion along the first row, memoized over column subsets.

    Works over any commutative ring whose elements support ``+``, ``-`` and
    ``*`` (used for symbolic Laurent-polynomial determinants and as an oracle).
    """
    n = len(m)
    if n == 0:
        return one

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> object:
        if row == n:
            return one
        total = zero
        for pos, c in enumerate(sorted(cols)):
            entry = m[row][c]
            if entry == 0:
                continue
            term = entry * minor(row + 1, cols - {c})
            total = total + term if pos % 2 == 0 else total - term
        return total

    return minor(0, frozenset(range(n)))


def det_mod_p(rows: np.ndarray, p: int) -> int:
    """Determinant of an integer matrix modulo a prime ``p < 2**31``."""
    a = np.array(rows, dtype=np.int64) % p
    n = a.shape[0]
    d = 1
    for k in range(n):
        nz = np.nonzero(a[k:, k])[0]
        if nz.size == 0:
            return 0
        piv = k + int(nz[0])
        if piv != k:
            a[[k, piv]] = a[[piv, k]]
            d = -d
        akk = int(a[k, k])
        d = (d * akk) % p
        inv = pow(akk, p - 2, p)
        if k + 1 < n:
            factors = (a[k + 1:, k] * inv) % p
            a[k + 1:, k:] = (a[k + 1:, k:] - (factors[:, None] * a[k, k:][None, :]) % p) % p
    return d % p


def matrix_from(fn: Callable[[int, int], Fraction], r: int, c: int) -> ExactMatrix:
    return ExactMatrix([[fn(i, j) for j in range(c)] for i in range(r)], ncols=c)
