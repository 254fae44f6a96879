"""Generator words and formal linear combinations of them."""

from __future__ import annotations

import re
from typing import Iterable, Mapping, NamedTuple

from .scalars import FONE, FZERO, LaurentPoly, ScalarFraction, parse_poly


class GenToken(NamedTuple):
    """One generator letter.

    ``family`` is one of ``X``, ``Xinv``, ``e``, ``Y``, ``Yinv``; the index is
    ignored (kept at 0) for the ``Y`` families.
    """

    family: str
    index: int = 0

    def inverse(self) -> "GenToken":
        inv = {"X": "Xinv", "Xinv": "X", "Y": "Yinv", "Yinv": "Y"}
        if self.family not in inv:
            raise ValueError(f"{self} has no inverse letter")
        return GenToken(inv[self.family], self.index)

    def __str__(self):
        if self.family == "Y":
            return "Y"
        if self.family == "Yinv":
            return "Y^-1"
        if self.family == "Xinv":
            return f"X{self.index}^-1"
        return f"{self.family}{self.index}"


Word = tuple[GenToken, ...]

FAMILIES = ("X", "Xinv", "e", "Y", "Yinv")


def X(i: int) -> GenToken:
    return GenToken("X", i)


def Xi(i: int) -> GenToken:
    return GenToken("Xinv", i)


def E(i: int) -> GenToken:
    return GenToken("e", i)


Y = GenToken("Y")
Yi = GenToken("Yinv")


def word(*tokens: GenToken) -> Word:
    return tuple(tokens)


def format_word(w: Word) -> str:
    return " ".join(str(t) for t in w) if w else "1"


_TOKEN = re.compile(r"^(X|e)(\d+)(\^-1)?$|^(Y)(\^-1)?$")


def parse_token(text: str) -> GenToken:
    m = _TOKEN.match(text)
    if not m:
        raise ValueError(f"bad generator token {text!r}")
    if m.group(4):
        return Yi if m.group(5) else Y
    fam, idx, inv = m.group(1), int(m.group(2)), m.group(3)
    if fam == "e":
        if inv:
            raise ValueError("e tokens have no inverse")
        return GenToken("e", idx)
    return GenToken("Xinv" if inv else "X", idx)


def parse_word(text: str) -> Word:
    parts = text.split()
    if parts == ["1"]:
        return ()
    return tuple(parse_token(p) for p in parts)


class LinComb:
    """Finite formal sum of words with :class:`ScalarFraction` coefficients.

    Words are stored verbatim; the only simplification is merging equal words
    and dropping zero coefficients.
    """

    __slots__ = ("terms", "_key")

    def __init__(self, terms: Mapping[Word, object] | Iterable[tuple[Word, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, ScalarFraction] = {}
        for w, c in items:
            c = ScalarFraction.of(c)
            if c.is_zero():
                continue
            w = tuple(w)
            if w in acc:
                s = acc[w] + c
                if s.is_zero():
                    del acc[w]
                else:
                    acc[w] = s
            else:
                acc[w] = c
        self.terms: dict[Word, ScalarFraction] = acc
        self._key = None

    @classmethod
    def of_word(cls, w: Iterable[GenToken], c=FONE) -> "LinComb":
        return cls([(tuple(w), c)])

    @classmethod
    def scalar(cls, c) -> "LinComb":
        return cls([((), c)])

    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(sorted((w, c.key()) for w, c in self.terms.items()))
        return self._key

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LinComb") -> "LinComb":
        return LinComb(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "LinComb":
        return LinComb((w, -c) for w, c in self.terms.items())

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def scale(self, c) -> "LinComb":
        c = ScalarFraction.of(c)
        return LinComb((w, c * v) for w, v in self.terms.items())

    def __mul__(self, other: "LinComb") -> "LinComb":
        return LinComb((w1 + w2, c1 * c2) for w1, c1 in self.terms.items() for w2, c2 in other.terms.items())

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms))

    def words(self) -> list[Word]:
        return sorted(self.terms)

    def substitute(self, images: Mapping[GenToken, "LinComb"]) -> "LinComb":
        """Apply a letter-wise algebra map (letters without an image are kept)."""
        out = LinComb()
        for w, c in self.terms.items():
            acc = LinComb.scalar(c)
            for t in w:
                acc = acc * images.get(t, LinComb.of_word((t,)))
            out = out + acc
        return out

    def __repr__(self):
        return f"LinComb({format_lincomb(self)!r})"

    def __str__(self):
        return format_lincomb(self)


def format_lincomb(lc: LinComb) -> str:
    if lc.is_zero():
        return "0"
    parts = []
    for w in lc.words():
        c = lc.terms[w]
        if c == FONE and w:
            parts.append(format_word(w))
        else:
            body = f"({c})"
            parts.append(body + (" " + format_word(w) if w else ""))
    return " + ".join(parts)


def parse_lincomb(text: str) -> LinComb:
    """Parse ``(l) Y e1 Y + (-1) X0`` style literals.

    Terms are separated by ``+`` outside parentheses; an optional parenthesized
    polynomial literal (or ``num/den`` pair of literals) scales each word.
    The lone word ``1`` or an empty word denotes the identity, ``0`` the zero sum.
    """
    text = text.strip()
    if text == "0":
        return LinComb()
    terms: list[str] = []
    depth = 0
    buf = ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            terms.append(buf)
            buf = ""
        else:
            buf += ch
    terms.append(buf)
    out = []
    for t in terms:
        t = t.strip()
        if not t:
            raise ValueError(f"empty term in {text!r}")
        coeff = FONE
        if t.startswith("("):
            depth = 0
            for k, ch in enumerate(t):
                depth += ch == "("
                depth -= ch == ")"
                if depth == 0:
                    break
            inner = t[1:k]
            coeff = _parse_scalar(inner)
            rest = t[k + 1:].strip()
            if rest.startswith("/"):
                raise ValueError("write fractions inside the parentheses: (num)/(den) is not supported")
            t = rest
        w = parse_word(t) if t else ()
        out.append((w, coeff))
    return LinComb(out)


def _parse_scalar(text: str) -> ScalarFraction:
    # "(a)/(b)" inside the outer parentheses selects a fraction
    m = re.fullmatch(r"\s*\((.*)\)\s*/\s*\((.*)\)\s*", text)
    if m:
        return ScalarFraction(parse_poly(m.group(1)), parse_poly(m.group(2)))
    return ScalarFraction.of(parse_poly(text))


def lc(*pairs) -> LinComb:
    """Build a LinComb from ``(scalar, word)`` pairs or bare words (coefficient 1)."""
    out = []
    for p in pairs:
        if isinstance(p, tuple) and p and isinstance(p[0], GenToken):
            out.append((p, FONE))
        elif isinstance(p, tuple) and len(p) == 2 and not isinstance(p[0], GenToken):
            c, w = p
            out.append((tuple(w), c))
        elif p == ():
            out.append(((), FONE))
        else:
            raise TypeError(f"cannot interpret {p!r}")
    return LinComb(out)


ZERO_LC = LinComb()
ONE_LC = LinComb.scalar(FONE)


def is_scalar_multiple_of_empty(lcomb: LinComb) -> bool:
    return set(lcomb.terms) <= {()}


def coefficient(lcomb: LinComb, w: Word) -> ScalarFraction:
    return lcomb.terms.get(tuple(w), FZERO)


def as_poly_coeff(c) -> LaurentPoly:
    return ScalarFraction.of(c).as_poly()
