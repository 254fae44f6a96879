"""Bounded bidirectional rewriting prover for identities in presented algebras.

Each relation ``sum_k c_k w_k = 0`` yields one oriented rule per nonempty word
``w_k``: ``w_k -> -(1/c_k) sum_{j != k} c_j w_j``.  A step rewrites one
occurrence of a rule pattern inside one term of a linear combination.  Both
sides are searched best-first in lockstep until their reachable sets meet.

During the search coefficients are fingerprinted modulo a large prime at two
fixed points, which makes state keys canonical and cheap.  A proof is only
reported after the trace has been replayed with exact symbolic scalars.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from typing import Iterable

from .presentations import Presentation
from .scalars import LaurentPoly, ScalarFraction
from .words import GenToken, LinComb, Word, format_lincomb, format_word

PRIME = (1 << 61) - 1
_FP_POINTS = (
    (1234567891, 987654323, 555555557, 314159267, 271828183),
    (1000000007, 998244353, 167772161, 469762049, 754974721),
)

Fingerprint = tuple[int, ...]


def _fp_poly(p: LaurentPoly, cache: dict) -> Fingerprint:
    hit = cache.get(p)
    if hit is not None:
        return hit
    out = []
    for pt in _FP_POINTS:
        acc = 0
        for exp, c in p.terms:
            v = c.numerator * pow(c.denominator, -1, PRIME)
            for base, e in zip(pt, exp):
                if e:
                    v = v * pow(base, e, PRIME)
            acc = (acc + v) % PRIME
        out.append(acc)
    cache[p] = tuple(out)
    return cache[p]


def fingerprint(c: ScalarFraction, cache: dict | None = None) -> Fingerprint:
    cache = {} if cache is None else cache
    num = _fp_poly(c.num, cache)
    den = _fp_poly(c.den, cache)
    if any(d == 0 for d in den):
        raise ZeroDivisionError("denominator vanishes at a fingerprint point")
    return tuple(n * pow(d, -1, PRIME) % PRIME for n, d in zip(num, den))


@dataclass(frozen=True)
class Rule:
    index: int
    relation: str
    pattern: Word
    replacement: tuple[tuple[Word, ScalarFraction], ...]
    fp_replacement: tuple[tuple[Word, Fingerprint], ...]

    def __str__(self):
        rhs = format_lincomb(LinComb(self.replacement))
        return f"{format_word(self.pattern)} -> {rhs}  [{self.relation}]"


def derive_rules(pres: Presentation) -> list[Rule]:
    """Oriented rules from every relation; empty-word patterns are skipped.

    An empty pattern would match between any two letters (pure insertion),
    which explodes the search without shortening any known derivation.
    """
    cache: dict = {}
    rules: list[Rule] = []
    for rel in pres.relations:
        diff = rel.difference()
        for wk, ck in sorted(diff.terms.items()):
            if not wk:
                continue
            factor = -ck.inverse()
            repl = tuple((wj, factor * cj) for wj, cj in sorted(diff.terms.items()) if wj != wk)
            fp_repl = tuple((wj, fingerprint(c, cache)) for wj, c in repl)
            rules.append(Rule(len(rules), rel.name, wk, repl, fp_repl))
    return rules


class RuleIndex:
    def __init__(self, rules: list[Rule]):
        self.rules = rules
        self.by_first: dict[GenToken, list[Rule]] = {}
        for r in rules:
            self.by_first.setdefault(r.pattern[0], []).append(r)

    def matches(self, w: Word) -> Iterable[tuple[int, Rule]]:
        for pos, tok in enumerate(w):
            for r in self.by_first.get(tok, ()):
                k = len(r.pattern)
                if w[pos:pos + k] == r.pattern:
                    yield pos, r


@dataclass(frozen=True)
class Step:
    """Rewrite the occurrence of ``rule.pattern`` at ``position`` in term ``word``."""

    word: Word
    position: int
    rule: int

    def describe(self, rules: list[Rule]) -> str:
        r = rules[self.rule]
        return f"in {format_word(self.word)} at {self.position}: {r}"


def apply_step(lc: LinComb, step: Step, rules: list[Rule]) -> LinComb:
    """Exact application of one step; raises if the step does not apply."""
    rule = rules[step.rule]
    coeff = lc.terms.get(step.word)
    if coeff is None:
        raise ValueError(f"term {format_word(step.word)} absent")
    k = len(rule.pattern)
    if step.word[step.position:step.position + k] != rule.pattern:
        raise ValueError("pattern does not occur at the recorded position")
    pre, post = step.word[:step.position], step.word[step.position + k:]
    items = [(w, c) for w, c in lc.terms.items() if w != step.word]
    items += [(pre + v + post, coeff * c) for v, c in rule.replacement]
    return LinComb(items)


def replay(lc: LinComb, steps: Iterable[Step], rules: list[Rule]) -> LinComb:
    for st in steps:
        lc = apply_step(lc, st, rules)
    return lc


@dataclass
class Proved:
    lhs: LinComb
    rhs: LinComb
    left: list[Step]
    right: list[Step]
    meet: LinComb
    stats: dict
    rules: list[Rule] = field(repr=False, default_factory=list)

    ok = True
    status = "proved"

    @property
    def length(self) -> int:
        return len(self.left) + len(self.right)

    def check(self) -> bool:
        return replay(self.lhs, self.left, self.rules) == self.meet == replay(self.rhs, self.right, self.rules)

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "steps": self.length,
            "left": [s.describe(self.rules) for s in self.left],
            "right": [s.describe(self.rules) for s in self.right],
            "meet": format_lincomb(self.meet),
            "stats": self.stats,
        }


@dataclass
class Inconclusive:
    lhs: LinComb
    rhs: LinComb
    reason: str
    stats: dict

    ok = False
    status = "inconclusive"

    def as_dict(self) -> dict:
        return {"status": self.status, "reason": self.reason, "stats": self.stats}


_State = dict  # Word -> Fingerprint


def _key(state: _State) -> frozenset:
    return frozenset(state.items())


def _size(state: _State) -> int:
    return sum(len(w) + 1 for w in state)


def _fp_state(lc: LinComb, cache: dict) -> _State:
    out = {}
    for w, c in lc.terms.items():
        f = fingerprint(c, cache)
        if any(f):
            out[w] = f
    return out


def _children(state: _State, index: RuleIndex):
    for w in sorted(state):
        a = state[w]
        for pos, rule in index.matches(w):
            pre, post = w[:pos], w[pos + len(rule.pattern):]
            new = dict(state)
            del new[w]
            for v, r in rule.fp_replacement:
                nw = pre + v + post
                add = tuple(x * y % PRIME for x, y in zip(a, r))
                cur = new.get(nw)
                if cur is not None:
                    add = tuple((x + y) % PRIME for x, y in zip(cur, add))
                if any(add):
                    new[nw] = add
                else:
                    new.pop(nw, None)
            yield Step(w, pos, rule.index), new


class _Side:
    def __init__(self, start: _State):
        k = _key(start)
        self.parent: dict[frozenset, tuple[frozenset, Step] | None] = {k: None}
        self.depth = {k: 0}
        self.heap = [(self.priority(start, 0), 0, k, start)]
        self.counter = 1

    @staticmethod
    def priority(state: _State, depth: int) -> int:
        return _size(state) + 4 * depth

    def path(self, k: frozenset) -> list[Step]:
        steps = []
        while self.parent[k] is not None:
            k, st = self.parent[k]
            steps.append(st)
        return steps[::-1]


def prove_equal(lhs: LinComb, rhs: LinComb, pres: Presentation, budget_states: int = 200_000,
                depth: int = 16, rules: list[Rule] | None = None) -> Proved | Inconclusive:
    """Search for a rewrite chain joining ``lhs`` and ``rhs``.

    The result is symmetric in its arguments: both sides are expanded in an
    order fixed by their canonical keys, never by argument position.
    """
    alpha = set(pres.alphabet)
    for side in (lhs, rhs):
        for w in side.terms:
            for t in w:
                if t not in alpha:
                    raise ValueError(f"token {t} is not in the alphabet of {pres.name}")
    rules = derive_rules(pres) if rules is None else rules
    t0 = time.perf_counter()
    if lhs == rhs:
        return Proved(lhs, rhs, [], [], lhs, {"states": 0, "seconds": 0.0}, rules)
    index = RuleIndex(rules)
    cache: dict = {}
    starts = [_fp_state(lhs, cache), _fp_state(rhs, cache)]
    order = sorted(range(2), key=lambda i: sorted((w, f) for w, f in starts[i].items()))
    sides = {i: _Side(starts[i]) for i in range(2)}
    states = 2
    expanded = 0
    collisions = 0

    def finish(meet_key):
        nonlocal collisions
        left, right = sides[0].path(meet_key), sides[1].path(meet_key)
        try:
            a = replay(lhs, left, rules)
            b = replay(rhs, right, rules)
        except ValueError:
            collisions += 1
            return None
        if a != b:
            collisions += 1
            return None
        stats = {"states": states, "expanded": expanded, "seconds": round(time.perf_counter() - t0, 3)}
        return Proved(lhs, rhs, left, right, a, stats, rules)

    if _key(starts[0]) in sides[1].parent:
        res = finish(_key(starts[0]))
        if res:
            return res
    while states < budget_states:
        progressed = False
        for i in order:
            me, other = sides[i], sides[1 - i]
            if not me.heap:
                continue
            progressed = True
            _, _, k, st = heapq.heappop(me.heap)
            d = me.depth[k]
            if d >= depth:
                continue
            expanded += 1
            for step, child in _children(st, index):
                ck = _key(child)
                if ck in me.parent:
                    continue
                me.parent[ck] = (k, step)
                me.depth[ck] = d + 1
                states += 1
                if ck in other.parent:
                    res = finish(ck)
                    if res:
                        return res
                heapq.heappush(me.heap, (me.priority(child, d + 1), me.counter, ck, child))
                me.counter += 1
        if not progressed:
            break
    reason = "state budget exhausted" if states >= budget_states else "search space exhausted within depth"
    stats = {"states": states, "expanded": expanded, "collisions": collisions,
             "seconds": round(time.perf_counter() - t0, 3)}
    return Inconclusive(lhs, rhs, reason, stats)



# -- the D -> B' morphism suite ------------------------------------------------------------

# identities used in checking that X0 -> l Y X1 Y, e0 -> l Y e1 Y is a
# morphism, stated on the BD side (None marks the one that cannot be parsed)
BULLETS: tuple[tuple[str, str | None, str | None], ...] = (
    ("X0 X2 X0 = X2 X0 X2", "X0 X2 X0", "X2 X0 X2"),
    ("X0 X1 = X1 X0", "X0 X1", "X1 X0"),
    ("e1 X0 = e1", "e1 X0", "e1"),
    ("e0 X1 = e0", "e0 X1", "e0"),
    ("X0 e0 = l e0", "X0 e0", "(l) e0"),
    ("X0^2 = 1 + delta X0 - delta l e0", "X0 X0", "1 + (q - q^-1) X0 + (-q*l + q^-1*l) e0"),
    ("e0 X2 e0 = l^-1 e0", "e0 X2 e0", "(l^-1) e0"),
    ("e0^2 = x e0", "e0 e0", "(x) e0"),
    ("1 - X0^2 + delta X0 - delta e0 X0 = 0", "1 + (-1) X0 X0 + (q - q^-1) X0 + (-q + q^-1) e0 X0", "0"),
    ("e0 X1 e0 (no parseable right-hand side)", None, None),
    ("e0 X2 X0 = X2 X0 e2", "e0 X2 X0", "X2 X0 e2"),
    ("e0 e2 e0 = e0", "e0 e2 e0", "e0"),
)


@dataclass
class ImageReport:
    n: int
    entries: list[dict] = field(default_factory=list)

    def count(self, status: str) -> int:
        return sum(1 for e in self.entries if e["status"] == status)

    @property
    def ok(self) -> bool:
        return self.count("inconclusive") == 0 and self.count("failed") == 0

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "proved": self.count("proved"),
            "inconclusive": self.count("inconclusive"),
            "unverifiable": self.count("unverifiable-as-printed"),
            "entries": self.entries,
        }


def _image_task(args):
    kind, name, lhs_text, rhs_text, n, budget_states, depth = args
    from .presentations import builtin_presentation, image_under_morphism
    from .words import parse_lincomb
    target = builtin_presentation("BBprime", n)
    lhs = image_under_morphism(parse_lincomb(lhs_text))
    rhs = image_under_morphism(parse_lincomb(rhs_text))
    res = prove_equal(lhs, rhs, target, budget_states=budget_states, depth=depth, rules=_rules_for(n))
    entry = {"kind": kind, "name": name, "statement": f"{lhs_text} = {rhs_text}",
             "image": f"{format_lincomb(lhs)} = {format_lincomb(rhs)}"}
    entry.update(res.as_dict())
    return entry


_RULE_CACHE: dict[int, list[Rule]] = {}


def _rules_for(n: int) -> list[Rule]:
    if n not in _RULE_CACHE:
        from .presentations import builtin_presentation
        _RULE_CACHE[n] = derive_rules(builtin_presentation("BBprime", n))
    return _RULE_CACHE[n]


def verify_image_relations(n: int = 3, budget_states: int = 200_000, depth: int = 16,
                           workers: int = 1, bullets: bool = True) -> ImageReport:
    """Prove the image of every BD relation (and the displayed bullets) in BB'."""
    if n < 3:
        raise ValueError("n >= 3 is needed so that relations touching index 2 exist")
    from .presentations import builtin_presentation
    source = builtin_presentation("BD", n)
    tasks = [("relation", r.name, format_lincomb(r.lhs), format_lincomb(r.rhs), n, budget_states, depth)
             for r in source.relations]
    report = ImageReport(n)
    skipped: dict[int, dict] = {}
    if bullets:
        for k, (name, lhs, rhs) in enumerate(BULLETS, start=1):
            if lhs is None:
                skipped[len(tasks) + len(skipped)] = {
                    "kind": "bullet", "name": f"bullet{k}", "statement": name,
                    "status": "unverifiable-as-printed",
                    "reason": "stray factor and no right-hand side in the displayed computation"}
                continue
            tasks.append(("bullet", f"bullet{k}", lhs, rhs, n, budget_states, depth))
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = iter(pool.map(_image_task, tasks))
    else:
        results = iter([_image_task(t) for t in tasks])
    total = len(tasks) + len(skipped)
    report.entries = [skipped[i] if i in skipped else next(results) for i in range(total)]
    return report
