"""Machine-readable presentations of the braid, Coxeter, Hecke and BMW algebras.

Index conventions for type D (logged in every report header):

* node 0 of the Coxeter graph is joined to node 2, so "adjacent" pairs are
  ``(i, i+1)`` for ``i >= 1`` and ``(0, 2)``;
* families written with ``|i-j| = 1`` are instantiated for ``i, j >= 1``;
  the ``0 <-> 2`` cases are the separately displayed relations;
* far-commutation families range over non-adjacent pairs of the type D graph
  (so ``X0`` commutes with ``X3, X4, ...``); the pair ``(0, 1)`` has its own
  displayed relations;
* ``e0 X0 = X0 e1 = e1`` is read as ``e1 X0 = X0 e1 = e1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .scalars import DELTA, FONE, ScalarFraction, lam, p0, q, x, A
from .words import E, GenToken, LinComb, Word, X, Xi, Y, Yi, format_lincomb

NAMES = ("WD", "WB", "ZD", "ZB", "HD", "HB", "BD", "BBprime")

BD_FAMILIES = (
    "bd1", "bd2", "bd3", "bd3a", "bd3b", "bd4", "def4", "def5", "def5b", "def5v",
    "lem1a", "lem1d", "lem1f", "lem1fb", "lem1h", "lem1ha", "lem1ha'", "lem1l", "lem1la", "lem1lb",
)

CONVENTIONS = (
    "type D adjacency: (i,i+1) for i>=1 and (0,2)",
    "families with |i-j|=1 instantiated for i,j>=1; 0<->2 cases are their own relations",
    "far commutation over non-adjacent type D pairs other than (0,1)",
    "bd3b read as e1 X0 = X0 e1 = e1",
    "lem1h/lem1ha: X^{+-} means both letters take the same sign",
    "HB quadratic for Y uses p1 = -p0",
)


@dataclass(frozen=True)
class Relation:
    name: str
    family: str
    lhs: LinComb
    rhs: LinComb
    displayed: bool = True

    def difference(self) -> LinComb:
        return self.lhs - self.rhs

    def __str__(self):
        return f"{format_lincomb(self.lhs)} = {format_lincomb(self.rhs)}"


@dataclass
class Presentation:
    name: str
    n: int
    alphabet: tuple[GenToken, ...]
    relations: list[Relation] = field(default_factory=list)
    family_order: tuple[str, ...] = ()

    def __post_init__(self):
        alpha = set(self.alphabet)
        for r in self.relations:
            for side in (r.lhs, r.rhs):
                for w in side.terms:
                    bad = [t for t in w if t not in alpha]
                    if bad:
                        raise ValueError(f"relation {r.name} uses {bad[0]} outside the alphabet of {self.name}")

    def families(self) -> list[str]:
        """Family names in display order, including families empty at this n."""
        seen: list[str] = list(self.family_order)
        for r in self.relations:
            if r.family not in seen:
                seen.append(r.family)
        return seen

    def by_family(self, family: str) -> list[Relation]:
        return [r for r in self.relations if r.family == family]

    def relation(self, name: str) -> Relation:
        for r in self.relations:
            if r.name == name:
                return r
        raise KeyError(name)


# -- helpers ---------------------------------------------------------------------

def w(*tokens: GenToken) -> LinComb:
    return LinComb.of_word(tokens)


def s(c) -> LinComb:
    return LinComb.scalar(c)


def sw(c, *tokens: GenToken) -> LinComb:
    return LinComb.of_word(tokens, ScalarFraction.of(c))


class _Builder:
    def __init__(self):
        self.rels: list[Relation] = []
        self.families: list[str] = []

    def family(self, name: str):
        if name not in self.families:
            self.families.append(name)

    def add(self, family: str, lhs: LinComb, rhs: LinComb, displayed: bool = True, tag: str = ""):
        self.family(family)
        label = f"{family}[{tag}]" if tag else family
        self.rels.append(Relation(label, family, lhs, rhs, displayed))


def d_adjacent(n: int) -> list[tuple[int, int]]:
    pairs = [(i, i + 1) for i in range(1, n - 1)]
    if n >= 3:
        pairs.append((0, 2))
    return sorted(pairs)


def d_far(n: int) -> list[tuple[int, int]]:
    adj = set(d_adjacent(n))
    return [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in adj]


def a_adjacent(n: int, low: int = 1) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(low, n - 1)]


def a_far(n: int, low: int = 1) -> list[tuple[int, int]]:
    return [(i, j) for i in range(low, n) for j in range(i + 2, n)]


def _braid(b: _Builder, fam: str, a: GenToken, c: GenToken, tag: str):
    b.add(fam, w(a, c, a), w(c, a, c), tag=tag)


def _commute(b: _Builder, fam: str, a: GenToken, c: GenToken, tag: str, displayed=True):
    b.add(fam, w(a, c), w(c, a), displayed=displayed, tag=tag)


def _inverse_pairs(b: _Builder, tokens: list[GenToken]):
    for t in tokens:
        b.add("inv", w(t, t.inverse()), s(1), displayed=False, tag=f"{t}")
        b.add("inv", w(t.inverse(), t), s(1), displayed=False, tag=f"{t.inverse()}")


# -- type D ------------------------------------------------------------------------

def _type_d_braids(b: _Builder, n: int, names=("hd1", "hd2", "hd40", "hd4")):
    f1, f2, f40, f4 = names
    b.family(f1)
    for i, j in a_adjacent(n):
        _braid(b, f1, X(i), X(j), f"{i},{j}")
    b.family(f2)
    if n >= 3:
        _braid(b, f2, X(0), X(2), "0,2")
    b.family(f40)
    for j in range(1, n):
        if j != 2:
            _commute(b, f40, X(0), X(j), f"0,{j}")
    b.family(f4)
    for i, j in a_far(n):
        _commute(b, f4, X(i), X(j), f"{i},{j}")


def _type_b_braids(b: _Builder, n: int):
    b.family("hb1")
    if n >= 2:
        b.add("hb1", w(Y, X(1), Y, X(1)), w(X(1), Y, X(1), Y))
    b.family("hb2")
    for i, j in a_adjacent(n):
        _braid(b, "hb2", X(i), X(j), f"{i},{j}")
    b.family("hb3")
    for i in range(2, n):
        _commute(b, "hb3", Y, X(i), f"{i}")
    b.family("hb4")
    for i, j in a_far(n):
        _commute(b, "hb4", X(i), X(j), f"{i},{j}")


def _xs(n: int, low: int) -> list[GenToken]:
    return [X(i) for i in range(low, n)]


def presentation_wd(n: int) -> Presentation:
    b = _Builder()
    _type_d_braids(b, n)
    b.family("quad")
    for i in range(n):
        b.add("quad", w(X(i), X(i)), s(1), tag=str(i))
    return Presentation("WD", n, tuple(_xs(n, 0)), b.rels, tuple(b.families))


def presentation_zd(n: int) -> Presentation:
    b = _Builder()
    _type_d_braids(b, n)
    _inverse_pairs(b, _xs(n, 0))
    alpha = tuple(_xs(n, 0) + [Xi(i) for i in range(n)])
    return Presentation("ZD", n, alpha, b.rels, tuple(b.families))


def presentation_hd(n: int) -> Presentation:
    b = _Builder()
    _type_d_braids(b, n)
    b.family("hd")
    for i in range(n):
        b.add("hd", w(X(i), X(i)), sw(q - 1, X(i)) + s(q), tag=str(i))
    return Presentation("HD", n, tuple(_xs(n, 0)), b.rels, tuple(b.families))


def presentation_wb(n: int) -> Presentation:
    b = _Builder()
    _type_b_braids(b, n)
    b.family("quad")
    b.add("quad", w(Y, Y), s(1), tag="Y")
    for i in range(1, n):
        b.add("quad", w(X(i), X(i)), s(1), tag=str(i))
    return Presentation("WB", n, tuple([Y] + _xs(n, 1)), b.rels, tuple(b.families))


def presentation_zb(n: int) -> Presentation:
    b = _Builder()
    _type_b_braids(b, n)
    _inverse_pairs(b, [Y] + _xs(n, 1))
    alpha = tuple([Y, Yi] + _xs(n, 1) + [Xi(i) for i in range(1, n)])
    return Presentation("ZB", n, alpha, b.rels, tuple(b.families))


def presentation_hb(n: int) -> Presentation:
    b = _Builder()
    _type_b_braids(b, n)
    b.family("hb5")
    for i in range(1, n):
        b.add("hb5", w(X(i), X(i)), sw(q - 1, X(i)) + s(q), tag=str(i))
    b.family("hb6")
    # (Y - p0)(Y - p1) = 0 with p1 = -p0
    b.add("hb6", w(Y, Y), s(p0 * p0))
    return Presentation("HB", n, tuple([Y] + _xs(n, 1)), b.rels, tuple(b.families))


# -- BMW algebras ----------------------------------------------------------------------

def _bmw_type_a(b: _Builder, n: int, low: int, extra: bool):
    """Type A BMW families on indices ``low..n-1`` using the BD family names.

    With ``extra`` the derived companion forms used by the rewriting prover are
    added (quadratic form of lem1d, far commutation of X with e and of the
    inverses).
    """
    idx = range(low, n)
    b.family("bd1")
    for i, j in a_adjacent(n, low):
        _braid(b, "bd1", X(i), X(j), f"{i},{j}")
    b.family("bd4")
    for i, j in a_far(n, low):
        _commute(b, "bd4", X(i), X(j), f"{i},{j}")
    b.family("def4")
    for i in idx:
        b.add("def4", w(X(i), E(i)), sw(lam, E(i)), tag=f"X{i}e{i}")
        b.add("def4", w(E(i), X(i)), sw(lam, E(i)), tag=f"e{i}X{i}")
    b.family("def5")
    for i, j in a_adjacent(n, low):
        for a, c in ((i, j), (j, i)):
            b.add("def5", w(E(a), X(c), E(a)), sw(lam ** -1, E(a)), tag=f"{a},{c},+")
            b.add("def5", w(E(a), Xi(c), E(a)), sw(lam, E(a)), tag=f"{a},{c},-")
    b.family("lem1a")
    for i in idx:
        b.add("lem1a", w(E(i), E(i)), sw(x, E(i)), tag=str(i))
    b.family("lem1d")
    for i in idx:
        b.add("lem1d", w(Xi(i)), w(X(i)) - s(DELTA) + sw(DELTA, E(i)), tag=str(i))
    b.family("lem1f")
    for i, j in a_far(n, low):
        _commute(b, "lem1f", E(i), E(j), f"{i},{j}")
    b.family("lem1h")
    for i, j in a_adjacent(n, low):
        for a, c in ((i, j), (j, i)):
            b.add("lem1h", w(E(a), X(c), X(a)), w(X(c), X(a), E(c)), tag=f"{a},{c},+")
            b.add("lem1h", w(E(a), X(c), X(a)), w(Xi(c), Xi(a), E(c)), tag=f"{a},{c},-")
    b.family("lem1l")
    for i, j in a_adjacent(n, low):
        for a, c in ((i, j), (j, i)):
            b.add("lem1l", w(E(a), E(c), E(a)), w(E(a)), tag=f"{a},{c}")
    if extra:
        for i in idx:
            b.add("quad", w(X(i), X(i)), s(1) + sw(DELTA, X(i)) - sw(DELTA * lam, E(i)), displayed=False, tag=str(i))
        for i, j in a_far(n, low):
            for a, c in ((i, j), (j, i)):
                for t in (X(a), Xi(a)):
                    b.add("farmix", w(t, E(c)), w(E(c), t), displayed=False, tag=f"{t},e{c}")
                b.add("farinv", w(Xi(a), X(c)), w(X(c), Xi(a)), displayed=False, tag=f"{a},{c}")
                if a < c:
                    b.add("farinv", w(Xi(a), Xi(c)), w(Xi(c), Xi(a)), displayed=False, tag=f"{a},{c},--")


def presentation_bd(n: int) -> Presentation:
    """The D-type BMW algebra: the 20 displayed families plus X X^-1 = 1."""
    b = _Builder()
    # the 20 families in display order; empty families still get registered
    b.family("bd1")
    for i, j in a_adjacent(n):
        _braid(b, "bd1", X(i), X(j), f"{i},{j}")
    b.family("bd2")
    if n >= 3:
        _braid(b, "bd2", X(0), X(2), "0,2")
    b.add("bd3", w(X(0), X(1)), w(X(1), X(0)))
    b.add("bd3a", w(E(0), X(1)), w(E(0)), tag="e0X1")
    b.add("bd3a", w(X(1), E(0)), w(E(0)), tag="X1e0")
    b.add("bd3b", w(E(1), X(0)), w(E(1)), tag="e1X0")
    b.add("bd3b", w(X(0), E(1)), w(E(1)), tag="X0e1")
    b.family("bd4")
    far = [(i, j) for i, j in d_far(n) if (i, j) != (0, 1)]
    for i, j in far:
        _commute(b, "bd4", X(i), X(j), f"{i},{j}")
    b.family("def4")
    for i in range(n):
        b.add("def4", w(X(i), E(i)), sw(lam, E(i)), tag=f"X{i}e{i}")
        b.add("def4", w(E(i), X(i)), sw(lam, E(i)), tag=f"e{i}X{i}")
    b.family("def5")
    for i, j in a_adjacent(n):
        for a, c in ((i, j), (j, i)):
            b.add("def5", w(E(a), X(c), E(a)), sw(lam ** -1, E(a)), tag=f"{a},{c},+")
            b.add("def5", w(E(a), Xi(c), E(a)), sw(lam, E(a)), tag=f"{a},{c},-")
    b.family("def5b")
    b.family("def5v")
    if n >= 3:
        b.add("def5b", w(E(0), X(2), E(0)), sw(lam ** -1, E(0)), tag="+")
        b.add("def5b", w(E(0), Xi(2), E(0)), sw(lam, E(0)), tag="-")
        b.add("def5v", w(E(2), X(0), E(2)), sw(lam ** -1, E(2)), tag="+")
        b.add("def5v", w(E(2), Xi(0), E(2)), sw(lam, E(2)), tag="-")
    b.family("lem1a")
    for i in range(n):
        b.add("lem1a", w(E(i), E(i)), sw(x, E(i)), tag=str(i))
    b.family("lem1d")
    for i in range(n):
        b.add("lem1d", w(Xi(i)), w(X(i)) - s(DELTA) + sw(DELTA, E(i)), tag=str(i))
    b.family("lem1f")
    for i, j in far:
        _commute(b, "lem1f", E(i), E(j), f"{i},{j}")
    b.add("lem1fb", w(E(0), E(1)), w(E(1), E(0)))
    b.family("lem1h")
    for i, j in a_adjacent(n):
        for a, c in ((i, j), (j, i)):
            b.add("lem1h", w(E(a), X(c), X(a)), w(X(c), X(a), E(c)), tag=f"{a},{c},+")
            b.add("lem1h", w(E(a), X(c), X(a)), w(Xi(c), Xi(a), E(c)), tag=f"{a},{c},-")
    b.family("lem1ha")
    b.family("lem1ha'")
    if n >= 3:
        b.add("lem1ha", w(E(0), X(2), X(0)), w(X(2), X(0), E(2)), tag="+")
        b.add("lem1ha", w(E(0), X(2), X(0)), w(Xi(2), Xi(0), E(2)), tag="-")
        b.add("lem1ha'", w(E(2), X(0), X(2)), w(X(0), X(2), E(0)), tag="+")
        b.add("lem1ha'", w(E(2), X(0), X(2)), w(Xi(0), Xi(2), E(0)), tag="-")
    b.family("lem1l")
    for i, j in a_adjacent(n):
        for a, c in ((i, j), (j, i)):
            b.add("lem1l", w(E(a), E(c), E(a)), w(E(a)), tag=f"{a},{c}")
    b.family("lem1la")
    b.family("lem1lb")
    if n >= 3:
        b.add("lem1la", w(E(0), E(2), E(0)), w(E(0)))
        b.add("lem1lb", w(E(2), E(0), E(2)), w(E(2)))
    _inverse_pairs(b, _xs(n, 0))
    alpha = tuple(_xs(n, 0) + [Xi(i) for i in range(n)] + [E(i) for i in range(n)])
    pres = Presentation("BD", n, alpha, b.rels, tuple(b.families))
    assert tuple(f for f in pres.families() if f != "inv") == BD_FAMILIES, pres.families()
    return pres


def presentation_bbprime(n: int) -> Presentation:
    """Type B BMW algebra specialized at q0 = 1/l, q1 = 0.

    Y squares to 1/l, so no separate inverse letter is needed (Y^-1 = l Y).
    Besides the type A BMW relations on indices >= 1 it carries the B-type
    braid relations, the loop value ``e1 Y e1 = A e1`` and the twist relations
    ``e1 Y X1 Y = l^-1 e1`` together with their mirror, inverse and absorbed
    forms.
    """
    b = _Builder()
    _bmw_type_a(b, n, 1, extra=True)
    _inverse_pairs(b, _xs(n, 1))
    if n >= 2:
        b.add("hb1", w(Y, X(1), Y, X(1)), w(X(1), Y, X(1), Y))
        for a in (X(1), Xi(1)):
            for c in (X(1), Xi(1)):
                if (a, c) != (X(1), X(1)):
                    b.add("hb1", w(Y, a, Y, c), w(c, Y, a, Y), displayed=False, tag=f"{a},{c}")
    b.family("hb3")
    for i in range(2, n):
        for t in (X(i), Xi(i), E(i)):
            b.add("hb3", w(Y, t), w(t, Y), tag=str(t))
    b.add("yquad", w(Y, Y), s(lam ** -1))
    if n >= 2:
        b.add("loop", w(E(1), Y, E(1)), sw(A, E(1)))
        for t in (X(1), Xi(1)):
            b.add("twist", w(E(1), Y, t, Y), sw(lam ** -1, E(1)), tag=f"e1Y{t}Y")
            b.add("twist", w(Y, t, Y, E(1)), sw(lam ** -1, E(1)), tag=f"Y{t}Ye1")
            b.add("twist", w(E(1), Y, t), w(E(1), Y), displayed=False, tag=f"e1Y{t}")
            b.add("twist", w(t, Y, E(1)), w(Y, E(1)), displayed=False, tag=f"{t}Ye1")
    alpha = tuple([Y] + _xs(n, 1) + [Xi(i) for i in range(1, n)] + [E(i) for i in range(1, n)])
    return Presentation("BBprime", n, alpha, b.rels, tuple(b.families))


def builtin_presentation(name: str, n: int) -> Presentation:
    if n < 2:
        raise ValueError("presentations need n >= 2")
    table = {
        "WD": presentation_wd, "WB": presentation_wb, "ZD": presentation_zd, "ZB": presentation_zb,
        "HD": presentation_hd, "HB": presentation_hb, "BD": presentation_bd, "BBprime": presentation_bbprime,
    }
    try:
        return table[name](n)
    except KeyError:
        raise ValueError(f"unknown presentation {name!r}; choose from {NAMES}") from None


# -- the D -> B' morphism ------------------------------------------------------------------

def bd_to_bbprime_images() -> dict[GenToken, LinComb]:
    """X0 -> l Y X1 Y, X0^-1 -> l Y X1^-1 Y, e0 -> l Y e1 Y; other letters fixed."""
    return {
        X(0): sw(lam, Y, X(1), Y),
        Xi(0): sw(lam, Y, Xi(1), Y),
        E(0): sw(lam, Y, E(1), Y),
    }


def image_under_morphism(lcomb: LinComb) -> LinComb:
    return lcomb.substitute(bd_to_bbprime_images())


def hecke_embedding_images() -> dict[GenToken, LinComb]:
    """X0 -> k Y X1 Y with k = -1/(p0 p1) = 1/p0^2 at p1 = -p0."""
    return {X(0): sw(p0 ** -2, Y, X(1), Y)}


def yinv_free(word_: Word) -> bool:
    return Yi not in word_
