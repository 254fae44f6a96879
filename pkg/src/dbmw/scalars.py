"""Exact scalars: sparse Laurent polynomials over Q and fractions of them.

Every polynomial lives over the fixed variable list ``q, l, x, A, p0`` where
``l`` stands for lambda.  The quantity delta is never a variable; it is always
expanded as ``q - q^-1`` (see :data:`DELTA`).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

VARIABLES: tuple[str, ...] = ("q", "l", "x", "A", "p0")
NVARS = len(VARIABLES)
_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}
# accepted spellings on input; printing always uses VARIABLES
_ALIASES = {"lambda": "l", "λ": "l", "p_0": "p0", "a": "A"}

Rational = Fraction
Exponent = tuple[int, ...]
Point = Mapping[str, Fraction]

_ZERO_EXP: Exponent = (0,) * NVARS


class LaurentPoly:
    """Immutable sparse Laurent polynomial with rational coefficients.

    Terms are kept as a tuple of ``(exponent_vector, coefficient)`` pairs sorted
    by exponent vector, with no zero coefficients, so structural equality is
    polynomial equality.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Fraction] | Iterable[tuple[Exponent, Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Fraction] = {}
        for exp, c in items:
            if len(exp) != NVARS:
                raise ValueError(f"exponent vector {exp!r} must have {NVARS} entries")
            c = Fraction(c)
            if c:
                s = acc.get(exp, 0) + c
                if s:
                    acc[exp] = s
                else:
                    acc.pop(exp, None)
        self.terms: tuple[tuple[Exponent, Fraction], ...] = tuple(sorted(acc.items()))
        self._hash = None

    @classmethod
    def _raw(cls, terms: tuple[tuple[Exponent, Fraction], ...]) -> "LaurentPoly":
        # terms already canonical
        obj = object.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        c = Fraction(c)
        return cls._raw(((_ZERO_EXP, c),)) if c else ZERO

    @classmethod
    def var(cls, name: str, power: int = 1) -> "LaurentPoly":
        exp = [0] * NVARS
        exp[_var_index(name)] = power
        return cls._raw(((tuple(exp), Fraction(1)),))

    @classmethod
    def monomial(cls, exp: Exponent, c=1) -> "LaurentPoly":
        c = Fraction(c)
        return cls._raw(((tuple(exp), c),)) if c else ZERO

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == _ZERO_EXP)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms[0][1]

    def variables(self) -> set[str]:
        used = set()
        for exp, _ in self.terms:
            used.update(VARIABLES[i] for i, e in enumerate(exp) if e)
        return used

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        acc = dict(self.terms)
        for exp, c in other.terms:
            s = acc.get(exp, 0) + c
            if s:
                acc[exp] = s
            else:
                del acc[exp]
        return LaurentPoly._raw(tuple(sorted(acc.items())))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return ZERO
        acc: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                s = acc.get(e, 0) + c1 * c2
                if s:
                    acc[e] = s
                else:
                    del acc[e]
        return LaurentPoly._raw(tuple(sorted(acc.items())))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (exp, c), = self.terms
            return LaurentPoly.monomial(tuple(-e * (-k) for e in exp), Fraction(1) / c ** (-k))
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "LaurentPoly":
        c = Fraction(c)
        if not c:
            return ZERO
        return LaurentPoly._raw(tuple((e, v * c) for e, v in self.terms))

    def shift(self, exp: Exponent) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``exp``."""
        return LaurentPoly._raw(tuple((tuple(a + b for a, b in zip(e, exp)), c) for e, c in self.terms))

    # -- evaluation -----------------------------------------------------

    def eval(self, point: Point) -> Fraction:
        """Evaluate at a point mapping variable names to nonzero rationals."""
        total = Fraction(0)
        for exp, c in self.terms:
            val = c
            for i, e in enumerate(exp):
                if not e:
                    continue
                name = VARIABLES[i]
                if name not in point:
                    raise KeyError(f"no value assigned to variable {name!r}")
                v = Fraction(point[name])
                if v == 0 and e < 0:
                    raise ZeroDivisionError(f"variable {name!r} is zero but occurs with power {e}")
                val *= v ** e
            total += val
        return total

    def subs(self, point: Point) -> "LaurentPoly":
        """Substitute rational values for a subset of the variables."""
        idx = {_var_index(k): Fraction(v) for k, v in point.items()}
        acc: dict[Exponent, Fraction] = {}
        for exp, c in self.terms:
            new = list(exp)
            val = c
            for i, v in idx.items():
                if exp[i]:
                    if v == 0 and exp[i] < 0:
                        raise ZeroDivisionError(f"variable {VARIABLES[i]!r} is zero but occurs with power {exp[i]}")
                    val *= v ** exp[i]
                    new[i] = 0
            t = tuple(new)
            acc[t] = acc.get(t, 0) + val
        return LaurentPoly(acc)

    def top_degree(self, var: str) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no top degree")
        i = _var_index(var)
        return max(exp[i] for exp, _ in self.terms)

    def min_exponents(self) -> Exponent:
        return tuple(min(exp[i] for exp, _ in self.terms) for i in range(NVARS))

    def leading(self) -> tuple[Exponent, Fraction]:
        return self.terms[-1]

    # -- dunder plumbing ------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __lt__(self, other):
        return self.terms < other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _var_index(name: str) -> int:
    name = _ALIASES.get(name, name)
    try:
        return _VAR_INDEX[name]
    except KeyError:
        raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}") from None


def _coerce(v) -> LaurentPoly:
    if isinstance(v, LaurentPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return LaurentPoly.const(v)
    return NotImplemented


ZERO = LaurentPoly._raw(())
ONE = LaurentPoly._raw(((_ZERO_EXP, Fraction(1)),))

q = LaurentPoly.var("q")
lam = LaurentPoly.var("l")
x = LaurentPoly.var("x")
A = LaurentPoly.var("A")
p0 = LaurentPoly.var("p0")
DELTA = q - q ** -1


# -- module-level operation names ------------------------------------------

def poly_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def poly_eval(a: LaurentPoly, point: Point) -> Fraction:
    return a.eval(point)


def poly_top_degree(a: LaurentPoly, var: str) -> int:
    return a.top_degree(var)


def poly_divexact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly | None:
    """Return ``a / b`` if it is a Laurent polynomial, else ``None``."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    if b.is_monomial():
        (eb, cb), = b.terms
        return a.shift(tuple(-e for e in eb)).scale(1 / cb)
    # shift both to ordinary polynomials; b then has no monomial factor
    sa = a.min_exponents()
    sb = b.min_exponents()
    ra = a.shift(tuple(-e for e in sa))
    bb = b.shift(tuple(-e for e in sb))
    lead_e, lead_c = bb.leading()
    quot: dict[Exponent, Fraction] = {}
    rem = ra
    while rem.terms:
        e, c = rem.leading()
        if any(x < y for x, y in zip(e, lead_e)):
            return None
        me = tuple(x - y for x, y in zip(e, lead_e))
        mc = c / lead_c
        quot[me] = mc
        rem = rem - bb.shift(me).scale(mc)
    shift = tuple(x - y for x, y in zip(sa, sb))
    return LaurentPoly(quot).shift(shift)


# -- fractions --------------------------------------------------------------

# generic point used only to hash fractions consistently with cross-multiplication equality
_HASH_POINT = {"q": Fraction(13, 7), "l": Fraction(17, 11), "x": Fraction(19, 5), "A": Fraction(23, 3), "p0": Fraction(29, 13)}


class ScalarFraction:
    """Quotient of two Laurent polynomials.

    Normalization clears monomial denominators, makes the denominator's integer
    content 1 with a positive leading coefficient, and divides out the
    denominator when it divides the numerator exactly.  No multivariate gcd is
    taken, so two equal fractions may still print differently; ``==`` always
    decides by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _coerce(num) if not isinstance(num, LaurentPoly) else num
        if num is NotImplemented:
            raise TypeError(f"cannot build a fraction from {num!r}")
        den = ONE if den is None else (_coerce(den) if not isinstance(den, LaurentPoly) else den)
        if den.is_zero():
            raise ZeroDivisionError("fraction with zero denominator")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "ScalarFraction":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def of(cls, v) -> "ScalarFraction":
        if isinstance(v, ScalarFraction):
            return v
        if isinstance(v, LaurentPoly):
            return cls._raw(v, ONE)
        return cls(v)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den == ONE

    def as_poly(self) -> LaurentPoly:
        if self.den == ONE:
            return self.num
        q_ = poly_divexact(self.num, self.den)
        if q_ is None:
            raise ValueError(f"{self} is not a Laurent polynomial")
        return q_

    def __add__(self, other):
        other = _frac(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return ScalarFraction(self.num + other.num, self.den)
        return ScalarFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return ScalarFraction._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _frac(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _frac(other) - self

    def __mul__(self, other):
        other = _frac(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return FZERO
        if self.den == ONE and other.den == ONE:
            return ScalarFraction._raw(self.num * other.num, ONE)
        return ScalarFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "ScalarFraction":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return ScalarFraction(self.den, self.num)

    def __truediv__(self, other):
        other = _frac(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _frac(other) * self.inverse()

    def eval(self, point: Point) -> Fraction:
        d = self.den.eval(point)
        if d == 0:
            raise ZeroDivisionError(f"denominator {self.den} vanishes at {dict(point)}")
        return self.num.eval(point) / d

    def subs(self, point: Point) -> "ScalarFraction":
        return ScalarFraction(self.num.subs(point), self.den.subs(point))

    def key(self) -> tuple:
        """Structural key of the normalized representation."""
        return (self.num.terms, self.den.terms)

    def __eq__(self, other):
        other = _frac(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        try:
            return hash(self.eval(_HASH_POINT))
        except ZeroDivisionError:
            return 0

    def __repr__(self):
        return f"ScalarFraction({str(self)!r})"

    def __str__(self):
        if self.den == ONE:
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"


def _frac(v):
    if isinstance(v, ScalarFraction):
        return v
    if isinstance(v, LaurentPoly):
        return ScalarFraction._raw(v, ONE)
    if isinstance(v, (int, Fraction)):
        return ScalarFraction._raw(LaurentPoly.const(v), ONE)
    return NotImplemented


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return ZERO, ONE
    if den.is_monomial():
        (e, c), = den.terms
        return num.shift(tuple(-v for v in e)).scale(1 / c), ONE
    # make den an ordinary polynomial without monomial factor
    s = tuple(-v for v in den.min_exponents())
    den = den.shift(s)
    num = num.shift(s)
    # integer content 1, positive leading coefficient
    from math import gcd, lcm
    dens = [c.denominator for _, c in den.terms]
    nums = [c.numerator for _, c in den.terms]
    g = 0
    for v in nums:
        g = gcd(g, v)
    factor = Fraction(lcm(*dens), g)
    if den.leading()[1] < 0:
        factor = -factor
    den = den.scale(factor)
    num = num.scale(factor)
    quot = poly_divexact(num, den)
    if quot is not None:
        return quot, ONE
    return num, den


FZERO = ScalarFraction._raw(ZERO, ONE)
FONE = ScalarFraction._raw(ONE, ONE)


def frac_eq(a: ScalarFraction, b: ScalarFraction) -> bool:
    return ScalarFraction.of(a) == ScalarFraction.of(b)


# -- literal syntax -----------------------------------------------------------

def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: LaurentPoly) -> str:
    """Print in the literal syntax, e.g. ``3/2*q^-1*x^2 + 1``.

    Terms appear from the highest exponent vector down; ``parse_poly`` inverts
    this exactly.
    """
    if not p.terms:
        return "0"
    out = []
    for k, (exp, c) in enumerate(reversed(p.terms)):
        factors = []
        for name, e in zip(VARIABLES, exp):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(mag) + "*" + "*".join(factors)
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^(?:(\d+(?:/\d+)?)|([A-Za-z_λ][A-Za-z_0-9]*)(?:\^(-?\d+))?)$")


def parse_poly(text: str) -> LaurentPoly:
    """Parse a polynomial literal; inverse of :func:`format_poly`."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial literal")
    # protect exponent signs, then split on the remaining + and -
    protected = re.sub(r"\^\s*-", "^~", s)
    parts = re.split(r"([+-])", protected)
    tokens: list[tuple[int, str]] = []
    sign = 1
    for k, part in enumerate(parts):
        if part in "+-" and part:
            sign = -1 if part == "-" else 1
            continue
        body = part.strip().replace("~", "-")
        if not body:
            if k == len(parts) - 1:
                raise ValueError(f"dangling operator in {text!r}")
            continue
        tokens.append((sign, body))
        sign = 1
    result = ZERO
    for sg, term in tokens:
        coeff = Fraction(sg)
        exp = [0] * NVARS
        for factor in term.split("*"):
            factor = factor.strip()
            m = _FACTOR.match(factor)
            if not m:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            if m.group(1):
                coeff *= Fraction(m.group(1))
            else:
                exp[_var_index(m.group(2))] += int(m.group(3) or 1)
        result = result + LaurentPoly.monomial(tuple(exp), coeff)
    return result


def parse_point(text: str) -> dict[str, Fraction]:
    """Parse ``q=4,l=9,x=3`` into a point."""
    point = {}
    for part in text.split(","):
        if not part.strip():
            continue
        name, _, val = part.partition("=")
        name = VARIABLES[_var_index(name.strip())]
        point[name] = Fraction(val.strip())
    return point


# -- standard evaluation points ----------------------------------------------

def x_from_relation(qv: Fraction, lv: Fraction) -> Fraction:
    """Solve ``(1 - x) * delta = l - 1/l`` for x."""
    d = qv - 1 / qv
    return 1 - (lv - 1 / lv) / d


def standard_points() -> list[dict[str, Fraction]]:
    """The two generic evaluation points; x obeys the BMW parameter relation."""
    pts = []
    for qv, lv, pv in ((Fraction(4), Fraction(9), Fraction(7)), (Fraction(5), Fraction(11), Fraction(3))):
        pts.append({"q": qv, "l": lv, "x": x_from_relation(qv, lv), "A": Fraction(0), "p0": pv})
    return pts


def satisfies_parameter_relation(point: Point) -> bool:
    qv, lv, xv = Fraction(point["q"]), Fraction(point["l"]), Fraction(point["x"])
    return (1 - xv) * (qv - 1 / qv) == lv - 1 / lv


Scalar = Union[int, Fraction, LaurentPoly, ScalarFraction]
