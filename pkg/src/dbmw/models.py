"""Evaluate presentations inside concrete multiplicative models."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Protocol

from .coxeter import SignedPerm, compose
from .matrix import ExactMatrix
from .presentations import Presentation
from .scalars import ScalarFraction
from .words import GenToken, LinComb, format_word


class Model(Protocol):
    def identity(self) -> Any: ...
    def multiply(self, a: Any, b: Any) -> Any: ...
    def combine(self, terms: list[tuple[Any, Any]]) -> Any: ...
    def scalar(self, c: ScalarFraction) -> Any: ...
    def equal(self, a: Any, b: Any) -> bool: ...
    def render(self, a: Any) -> str: ...


class GroupModel:
    """Group algebra of the signed permutations of ``1..n`` over Q."""

    def __init__(self, n: int):
        self.n = n

    def element(self, g: SignedPerm) -> dict[SignedPerm, Fraction]:
        return {g: Fraction(1)}

    def identity(self):
        return {SignedPerm.identity(self.n): Fraction(1)}

    def multiply(self, a, b):
        out: dict[SignedPerm, Fraction] = {}
        for g, c in a.items():
            for h, d in b.items():
                k = compose(g, h)
                out[k] = out.get(k, 0) + c * d
        return {k: v for k, v in out.items() if v}

    def combine(self, terms):
        out: dict[SignedPerm, Fraction] = {}
        for c, el in terms:
            for g, v in el.items():
                out[g] = out.get(g, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def scalar(self, c: ScalarFraction) -> Fraction:
        return c.as_poly().constant_value()

    def equal(self, a, b):
        return a == b

    def render(self, a):
        return " + ".join(f"{v}*{g}" for g, v in sorted(a.items())) or "0"


class MatrixModel:
    """Square exact matrices with scalars evaluated at a rational point."""

    def __init__(self, dim: int, point: Mapping[str, Fraction]):
        self.dim = dim
        self.point = dict(point)

    def identity(self):
        return ExactMatrix.identity(self.dim)

    def multiply(self, a, b):
        return a @ b

    def combine(self, terms):
        out = ExactMatrix.zeros(self.dim, self.dim)
        for c, m in terms:
            if c:
                out = out + m.scale(c)
        return out

    def scalar(self, c: ScalarFraction) -> Fraction:
        return c.eval(self.point)

    def equal(self, a, b):
        return a == b

    def render(self, a):
        return repr(a)


@dataclass
class RelationCheck:
    presentation: str
    n: int
    entries: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e["ok"] for e in self.entries)

    @property
    def failures(self) -> list[dict]:
        return [e for e in self.entries if not e["ok"]]

    def as_dict(self) -> dict:
        return {"presentation": self.presentation, "n": self.n, "ok": self.ok, "entries": self.entries}


def evaluate(lcomb: LinComb, assignment: Mapping[GenToken, Any], model: Model, cache: dict | None = None):
    cache = {} if cache is None else cache
    terms = []
    for w, c in lcomb.terms.items():
        if w not in cache:
            el = model.identity()
            for t in w:
                if t not in assignment:
                    raise KeyError(f"assignment has no image for generator {t}")
                el = model.multiply(el, assignment[t])
            cache[w] = el
        terms.append((model.scalar(c), cache[w]))
    return model.combine(terms)


def check_relations_in_model(assignment: Mapping[Any, Any], presentation: Presentation, model: Model,
                             families: set[str] | None = None) -> RelationCheck:
    """Evaluate both sides of every relation and compare them in ``model``.

    ``assignment`` maps generator tokens (or their string forms) to model
    elements and must cover the alphabet.
    """
    amap: dict[GenToken, Any] = {}
    by_name = {str(t): t for t in presentation.alphabet}
    for k, v in assignment.items():
        tok = k if isinstance(k, GenToken) else by_name.get(k)
        if tok is None:
            raise KeyError(f"{k!r} is not a generator of {presentation.name}")
        amap[tok] = v
    missing = [str(t) for t in presentation.alphabet if t not in amap]
    if missing:
        raise KeyError(f"assignment misses generators {missing}")
    report = RelationCheck(presentation.name, presentation.n)
    cache: dict = {}
    for rel in presentation.relations:
        if families is not None and rel.family not in families:
            continue
        lhs = evaluate(rel.lhs, amap, model, cache)
        rhs = evaluate(rel.rhs, amap, model, cache)
        ok = model.equal(lhs, rhs)
        entry = {"relation": rel.name, "family": rel.family, "statement": str(rel), "ok": ok}
        if not ok:
            entry["witness"] = {"lhs": model.render(lhs), "rhs": model.render(rhs)}
        report.entries.append(entry)
    return report


def word_label(w) -> str:
    return format_word(w)
