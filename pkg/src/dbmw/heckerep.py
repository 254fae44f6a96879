"""Seminormal representations of the type B and type D Hecke algebras.

Simple HB_n modules are indexed by bipartitions of n and have a basis of
standard bitableaux.  ``Y`` acts diagonally by the parameter of the component
holding 1, and ``X_i`` acts inside the span of ``t`` and the tableau with
``i, i+1`` exchanged.  Restricting along ``X0 -> k Y X1 Y`` gives HD_n modules.

Conventions
-----------
The content of ``m`` in component ``j`` of ``t`` is ``c(t, m) = p_j q^(col - row)``
with ``p_1 = -p_0`` unless the point says otherwise.  For a pair ``t, t'`` with
``rho = c(t, i) / c(t, i+1)`` the block of ``X_i`` in the basis ``(t, t')`` is::

    [[a, b],        a = (q - 1) / (1 - rho)
     [c, d]]        d = (q - 1) / (1 - 1/rho)

so ``a + d = q - 1`` and ``a d - b c = -q``.  The off-diagonal entries are 1 and
``a d + q``; ``b = 1`` when the cell of ``i`` precedes the cell of ``i + 1`` in
the key ``(row, col, component)``.  When the two cells only differ in their
component the block is made symmetric, ``b = c = (q + 1) / 2``, so that the
component swap is a plain permutation of the basis.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Mapping

from .matrix import ExactMatrix, nullspace, rank
from .models import MatrixModel, check_relations_in_model
from .presentations import builtin_presentation

Partition = tuple[int, ...]


# -- partitions and tableaux ------------------------------------------------------------

@lru_cache(maxsize=None)
def partitions(k: int, largest: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``k`` in reverse lexicographic order: (3), (2,1), (1,1,1)."""
    if k == 0:
        return ((),)
    largest = k if largest is None else largest
    out = []
    for first in range(min(k, largest), 0, -1):
        for rest in partitions(k - first, first):
            out.append((first,) + rest)
    return tuple(out)


class Bipartition(tuple):
    """Ordered pair ``(first, second)`` of partitions."""

    def __new__(cls, first=(), second=()):
        for part in (first, second):
            if any(a < b for a, b in zip(part, part[1:])) or any(p <= 0 for p in part):
                raise ValueError(f"{part} is not a partition")
        return super().__new__(cls, (tuple(first), tuple(second)))

    @property
    def first(self) -> Partition:
        return self[0]

    @property
    def second(self) -> Partition:
        return self[1]

    @property
    def n(self) -> int:
        return sum(self[0]) + sum(self[1])

    def swapped(self) -> "Bipartition":
        return Bipartition(self[1], self[0])

    def __repr__(self):
        return f"Bipartition{tuple(self)}"

    def __str__(self):
        return format_shape(self)


def format_shape(shape: Bipartition) -> str:
    return "[" + ",".join(map(str, shape[0])) + "|" + ",".join(map(str, shape[1])) + "]"


def parse_shape(text: str) -> Bipartition:
    m = re.fullmatch(r"\s*\[([\d,\s]*)\|([\d,\s]*)\]\s*", text)
    if not m:
        raise ValueError(f"bad shape literal {text!r}; expected e.g. [2,1|1]")
    parts = [tuple(int(v) for v in g.split(",") if v.strip()) for g in m.groups()]
    return Bipartition(*parts)


def enumerate_bipartitions(n: int) -> list[Bipartition]:
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Bipartition(a, b) for k in range(n, -1, -1) for a in partitions(k) for b in partitions(n - k)]


def hook_count(shape: Partition) -> int:
    """Number of standard Young tableaux (hook length formula)."""
    n = sum(shape)
    cols = [sum(1 for r in shape if r > c) for c in range(shape[0])] if shape else []
    hooks = 1
    for i, r in enumerate(shape):
        for j in range(r):
            hooks *= (r - j - 1) + (cols[j] - i - 1) + 1
    return factorial(n) // hooks


def bitableau_count(shape: Bipartition) -> int:
    return comb(shape.n, sum(shape[0])) * hook_count(shape[0]) * hook_count(shape[1])


Cell = tuple[int, int, int]  # (component, row, col)


@dataclass(frozen=True, order=True)
class BiTableau:
    """Standard filling: ``rows[j][r]`` lists the entries of row ``r`` of component ``j``."""

    rows: tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]

    @property
    def shape(self) -> Bipartition:
        return Bipartition(*(tuple(len(r) for r in comp) for comp in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for comp in self.rows for r in comp)

    def cell(self, m: int) -> Cell:
        return self._cells()[m]

    def _cells(self) -> dict[int, Cell]:
        return {v: (j, r, c) for j, comp in enumerate(self.rows) for r, row in enumerate(comp) for c, v in enumerate(row)}

    def exchange(self, i: int) -> "BiTableau":
        """Swap the entries ``i`` and ``i + 1``."""
        sw = {i: i + 1, i + 1: i}
        return BiTableau(tuple(tuple(tuple(sw.get(v, v) for v in row) for row in comp) for comp in self.rows))

    def swap_components(self) -> "BiTableau":
        return BiTableau((self.rows[1], self.rows[0]))

    def is_standard(self) -> bool:
        for comp in self.rows:
            for r, row in enumerate(comp):
                if any(a >= b for a, b in zip(row, row[1:])):
                    return False
                if r and any(comp[r - 1][c] >= v for c, v in enumerate(row)):
                    return False
        return True

    def __str__(self):
        return " | ".join("/".join(",".join(map(str, row)) for row in comp) or "-" for comp in self.rows)


def _standard_tableaux(shape: Partition, labels: tuple[int, ...]) -> list[tuple[tuple[int, ...], ...]]:
    """Standard fillings of ``shape`` with the increasing label list ``labels``."""
    if not labels:
        return [tuple(() for _ in shape)]
    top = labels[-1]
    out = []
    for r, length in enumerate(shape):
        below = shape[r + 1] if r + 1 < len(shape) else 0
        if length > below:  # removable corner
            smaller = tuple(v - (k == r) for k, v in enumerate(shape))
            trimmed = tuple(v for v in smaller if v)
            for sub in _standard_tableaux(trimmed, labels[:-1]):
                rows = [list(row) for row in sub] + [[] for _ in range(len(shape) - len(sub))]
                rows[r].append(top)
                out.append(tuple(tuple(row) for row in rows))
    return out


def standard_bitableaux(shape: Bipartition) -> list[BiTableau]:
    n = shape.n
    k = sum(shape[0])
    out = []
    for first in combinations(range(1, n + 1), k):
        rest = tuple(v for v in range(1, n + 1) if v not in first)
        for t0 in _standard_tableaux(shape[0], first):
            for t1 in _standard_tableaux(shape[1], rest):
                out.append(BiTableau((t0, t1)))
    return sorted(out)


# -- representations ----------------------------------------------------------------------

@dataclass(frozen=True)
class Rep:
    algebra: str
    n: int
    label: str
    basis: tuple
    matrices: Mapping[str, ExactMatrix]
    point: Mapping[str, Fraction] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def generators(self) -> list[str]:
        return list(self.matrices)


class NonGenericPoint(ValueError):
    pass


def _params(point: Mapping[str, Fraction]) -> tuple[Fraction, Fraction, Fraction]:
    qv = Fraction(point["q"])
    p0v = Fraction(point["p0"])
    p1v = Fraction(point.get("p1", -p0v))
    return qv, p0v, p1v


def _content(t: BiTableau, m: int, qv: Fraction, ps: tuple[Fraction, Fraction]) -> Fraction:
    j, r, c = t.cell(m)
    return ps[j] * qv ** (c - r)


def seminormal_block(t: BiTableau, i: int, qv: Fraction, ps) -> tuple[Fraction, Fraction | None]:
    """Diagonal entry of ``X_i`` at ``t`` and the coefficient of the exchanged tableau."""
    ji, ri, ci = t.cell(i)
    jk, rk, ck = t.cell(i + 1)
    if ji == jk and ri == rk:
        return qv, None
    if ji == jk and ci == ck:
        return Fraction(-1), None
    rho = _content(t, i, qv, ps) / _content(t, i + 1, qv, ps)
    if rho == 1:
        raise NonGenericPoint(f"contents of {i} and {i + 1} coincide in {t}")
    a = (qv - 1) / (1 - rho)
    d = (qv - 1) / (1 - 1 / rho)
    if (ri, ci) == (rk, ck):
        return a, (qv + 1) / 2
    # coefficient of t' in X_i t: column t of the block
    first = (ri, ci, ji) < (rk, ck, jk)
    return a, (Fraction(1) if first else a * d + qv)


def _hb_matrices(basis: list[BiTableau], n: int, qv, ps) -> dict[str, ExactMatrix]:
    pos = {t: k for k, t in enumerate(basis)}
    d = len(basis)
    mats = {"Y": ExactMatrix.diagonal([ps[t.cell(1)[0]] for t in basis]) if n >= 1 else ExactMatrix.identity(d)}
    for i in range(1, n):
        m = [[Fraction(0)] * d for _ in range(d)]
        for t, k in pos.items():
            diag, off = seminormal_block(t, i, qv, ps)
            m[k][k] = diag
            if off is not None:
                m[pos[t.exchange(i)]][k] = off
        mats[f"X{i}"] = ExactMatrix(m, ncols=d)
    return mats


def _check(rep: Rep, presentation: str, extra_quadratic: tuple | None = None):
    if rep.n < 2:
        return
    pres = builtin_presentation(presentation, rep.n)
    fams = None
    if extra_quadratic is not None:
        fams = {f for f in pres.families() if f != "hb6"}
    report = check_relations_in_model(rep.matrices, pres, MatrixModel(rep.dim, rep.point), fams)
    if not report.ok:
        raise ValueError(f"{presentation} relations fail for {rep.label}: {[e['relation'] for e in report.failures]}")
    if extra_quadratic is not None:
        y = rep.matrices["Y"]
        r0, r1 = extra_quadratic
        eye = ExactMatrix.identity(rep.dim)
        if not ((y - eye.scale(r0)) @ (y - eye.scale(r1))).is_zero():
            raise ValueError(f"Y does not satisfy its quadratic in {rep.label}")


def hb_rep(shape: Bipartition | str, point: Mapping[str, Fraction], validate: bool = True) -> Rep:
    """Seminormal HB_n module of ``shape`` with exact matrices at ``point``."""
    shape = parse_shape(shape) if isinstance(shape, str) else shape
    qv, p0v, p1v = _params(point)
    basis = standard_bitableaux(shape)
    mats = _hb_matrices(basis, shape.n, qv, (p0v, p1v))
    pt = {"q": qv, "p0": p0v, "p1": p1v}
    rep = Rep("HB", shape.n, format_shape(shape), tuple(basis), mats, pt)
    if validate:
        _check(rep, "HB", None if p1v == -p0v else (p0v, p1v))
    return rep


def hd_restrict(rep: Rep, validate: bool = True) -> Rep:
    """Add ``X0 = k Y X1 Y`` with ``k = -1/(p0 p1)`` and drop ``Y``."""
    if rep.algebra != "HB":
        raise ValueError("restriction starts from an HB module")
    _, p0v, p1v = _params(rep.point)
    if p0v + p1v != 0:
        raise ValueError("restriction to HD needs p0 + p1 = 0")
    if rep.n < 2:
        raise ValueError("X0 needs n >= 2")
    k = -1 / (p0v * p1v)
    y, x1 = rep.matrices["Y"], rep.matrices["X1"]
    mats = {"X0": (y @ x1 @ y).scale(k)}
    mats.update({g: m for g, m in rep.matrices.items() if g != "Y"})
    out = Rep("HD", rep.n, rep.label, rep.basis, mats, rep.point)
    if validate:
        _check(out, "HD")
    return out


def hd_rep_of_shape(shape: Bipartition | str, point: Mapping[str, Fraction]) -> Rep:
    return hd_restrict(hb_rep(shape, point))


def swap_matrix(rep: Rep) -> ExactMatrix:
    pos = {t: k for k, t in enumerate(rep.basis)}
    d = rep.dim
    m = [[Fraction(0)] * d for _ in range(d)]
    for t, k in pos.items():
        m[pos[t.swap_components()]][k] = Fraction(1)
    return ExactMatrix(m, ncols=d)


@dataclass(frozen=True)
class SplitReport:
    swap: ExactMatrix
    plus: Rep
    minus: Rep
    commutes: bool
    involution: bool
    projectors_ok: bool


def swap_split(rep: Rep) -> SplitReport:
    """Split an HD module with equal components along ``P_+- = (1 +- P)/2``."""
    shape = parse_shape(rep.label)
    if shape[0] != shape[1]:
        raise ValueError(f"components of {rep.label} differ; nothing to split")
    if rep.algebra != "HD":
        raise ValueError("splitting applies to HD modules")
    p = swap_matrix(rep)
    eye = ExactMatrix.identity(rep.dim)
    commutes = all(p @ m == m @ p for m in rep.matrices.values())
    involution = p @ p == eye
    pp, pm = (eye + p).scale(Fraction(1, 2)), (eye - p).scale(Fraction(1, 2))
    projectors_ok = pp @ pp == pp and pm @ pm == pm and (pp @ pm).is_zero() and pp + pm == eye
    halves = []
    for sign in (1, -1):
        reps = [t for t in rep.basis if t < t.swap_components()]
        pos = {t: k for k, t in enumerate(rep.basis)}
        cols = []
        for t in reps:
            v = [Fraction(0)] * rep.dim
            v[pos[t]] += 1
            v[pos[t.swap_components()]] += sign
            cols.append(v)
        b = ExactMatrix(cols, ncols=rep.dim).transpose()
        left = ExactMatrix(cols, ncols=rep.dim).scale(Fraction(1, 2))
        mats = {g: left @ m @ b for g, m in rep.matrices.items()}
        label = f"{rep.label}{'+' if sign > 0 else '-'}"
        halves.append(Rep("HD", rep.n, label, tuple(reps), mats, rep.point))
    for h in halves:
        _check(h, "HD")
    return SplitReport(p, halves[0], halves[1], commutes, involution, projectors_ok)


# -- structure tests ------------------------------------------------------------------------

def _flat(m: ExactMatrix) -> list[Fraction]:
    return m.flat()


def algebra_span_dim(rep: Rep) -> int:
    """Dimension of the algebra generated by the representing matrices."""
    d = rep.dim
    gens = list(rep.matrices.values())
    echelon: dict[int, list[Fraction]] = {}

    def reduce(v: list[Fraction]) -> list[Fraction]:
        v = list(v)
        for piv in sorted(echelon):
            if v[piv]:
                row = echelon[piv]
                f = v[piv]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def insert(m: ExactMatrix) -> bool:
        v = reduce(_flat(m))
        piv = next((k for k, c in enumerate(v) if c), None)
        if piv is None:
            return False
        inv = 1 / v[piv]
        v = [c * inv for c in v]
        for k, row in echelon.items():
            if row[piv]:
                f = row[piv]
                echelon[k] = [a - f * b for a, b in zip(row, v)]
        echelon[piv] = v
        return True

    frontier = [ExactMatrix.identity(d)]
    insert(frontier[0])
    while frontier and len(echelon) < d * d:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = m @ g
                if insert(prod):
                    nxt.append(prod)
        frontier = nxt
    return len(echelon)


def is_irreducible(rep: Rep) -> bool:
    return algebra_span_dim(rep) == rep.dim ** 2


def intertwiners(a: Rep, b: Rep) -> list[ExactMatrix]:
    """Basis of ``{M : M a(g) = b(g) M for every generator g}``."""
    if a.algebra != b.algebra or a.n != b.n:
        raise ValueError("representations of different algebras")
    if set(a.matrices) != set(b.matrices):
        raise ValueError("generator sets differ")
    da, db = a.dim, b.dim
    rows = []
    # unknown M[r][c] at index r * da + c, M is db x da
    for g in a.matrices:
        ma, mb = a.matrices[g], b.matrices[g]
        for r in range(db):
            for c in range(da):
                eq = [Fraction(0)] * (db * da)
                for k in range(da):
                    if ma[k, c]:
                        eq[r * da + k] += ma[k, c]
                for k in range(db):
                    if mb[r, k]:
                        eq[k * da + c] -= mb[r, k]
                rows.append(eq)
    sols = nullspace(ExactMatrix(rows, ncols=db * da))
    return [ExactMatrix([v[r * da:(r + 1) * da] for r in range(db)], ncols=da) for v in sols]


def are_equivalent(a: Rep, b: Rep, tries: int = 8) -> bool:
    if a.dim != b.dim:
        return False
    basis = intertwiners(a, b)
    if not basis:
        return False
    for m in basis:
        if rank(m) == a.dim:
            return True
    rng = random.Random(0)
    for _ in range(tries):
        comb_ = ExactMatrix.zeros(a.dim, a.dim)
        for m in basis:
            comb_ = comb_ + m.scale(rng.randint(-50, 50))
        if rank(comb_) == a.dim:
            return True
    return False


# -- index sets and dimensions -----------------------------------------------------------------

@dataclass(frozen=True, order=True)
class HDLabel:
    """``{T0, T1}`` with distinct components, or ``T^s`` for equal components."""

    first: Partition
    second: Partition
    sign: int = 0

    @property
    def kind(self) -> str:
        return "signed" if self.sign else "pair"

    @property
    def size(self) -> int:
        return sum(self.first) + sum(self.second)

    def bipartition(self) -> Bipartition:
        return Bipartition(self.first, self.second)

    def __str__(self):
        body = ",".join(map(str, self.first)) + "|" + ",".join(map(str, self.second))
        if self.sign:
            return "{" + body + "}" + ("+" if self.sign > 0 else "-")
        return "{" + body + "}"


def parse_label(text: str) -> HDLabel:
    m = re.fullmatch(r"\{([\d,]*)\|([\d,]*)\}([+-]?)", text.strip())
    if not m:
        raise ValueError(f"bad label {text!r}")
    a, b = (tuple(int(v) for v in g.split(",") if v) for g in m.groups()[:2])
    sign = {"+": 1, "-": -1, "": 0}[m.group(3)]
    if sign and a != b:
        raise ValueError("signed labels need equal components")
    if not sign and a == b:
        raise ValueError("pair labels need distinct components")
    return HDLabel(a, b, sign)


def hd_index_set(n: int) -> list[HDLabel]:
    seen: set[frozenset] = set()
    out = []
    for bp in enumerate_bipartitions(n):
        if bp[0] == bp[1]:
            out.append(HDLabel(bp[0], bp[1], 1))
            out.append(HDLabel(bp[0], bp[1], -1))
            continue
        key = frozenset(bp)
        if key not in seen:
            seen.add(key)
            out.append(HDLabel(bp[0], bp[1]))
    return out


def hd_dim(label: HDLabel) -> int:
    full = bitableau_count(label.bipartition())
    return full // 2 if label.sign else full


def hecke_dim_identity(n: int) -> bool:
    if n < 2:
        raise ValueError("the identity is stated for n >= 2")
    return sum(hd_dim(l) ** 2 for l in hd_index_set(n)) == 2 ** (n - 1) * factorial(n)


def hd_rep(label: HDLabel, point: Mapping[str, Fraction]) -> Rep:
    full = hd_rep_of_shape(label.bipartition(), point)
    if not label.sign:
        return full
    split = swap_split(full)
    return split.plus if label.sign > 0 else split.minus
