"""Signed-permutation models of the type B and type D Coxeter groups."""

from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable


@dataclass(frozen=True, order=True)
class SignedPerm:
    """A signed permutation of ``1..n``.

    ``images[i]`` is the image of ``i + 1`` and ``signs[i]`` the sign attached to
    it, so the element sends ``i + 1`` to ``signs[i] * images[i]``.
    """

    images: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if len(self.signs) != n:
            raise ValueError("images and signs differ in length")
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{n}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(tuple(range(1, n + 1)), (1,) * n)

    @classmethod
    def from_signed(cls, values: Iterable[int]) -> "SignedPerm":
        vals = list(values)
        return cls(tuple(abs(v) for v in vals), tuple(1 if v > 0 else -1 for v in vals))

    def signed(self) -> tuple[int, ...]:
        return tuple(s * i for s, i in zip(self.signs, self.images))

    def apply(self, k: int) -> int:
        """Image of the signed letter ``k`` (``w(-k) = -w(k)``)."""
        v = self.signs[abs(k) - 1] * self.images[abs(k) - 1]
        return v if k > 0 else -v

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        return compose(self, other)

    def inverse(self) -> "SignedPerm":
        out = [0] * self.n
        for i, v in enumerate(self.signed(), start=1):
            out[abs(v) - 1] = i if v > 0 else -i
        return SignedPerm.from_signed(out)

    def negative_count(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    def sign_product(self) -> int:
        return -1 if self.negative_count() % 2 else 1

    def __str__(self):
        return format_signed_perm(self)


def compose(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    """``a * b``: apply ``b`` first, then ``a``."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    return SignedPerm.from_signed(a.apply(v) for v in b.signed())


def compose_all(elements: Iterable[SignedPerm], n: int) -> SignedPerm:
    out = SignedPerm.identity(n)
    for g in elements:
        out = compose(out, g)
    return out


def _check_index(n: int, i: int, low: int):
    if not low <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")


def wb_generator(n: int, token: str) -> SignedPerm:
    """``Y`` flips the sign of slot 1; ``X<i>`` swaps slots ``i, i+1``."""
    if token == "Y":
        if n < 1:
            raise ValueError("Y needs n >= 1")
        return SignedPerm(tuple(range(1, n + 1)), (-1,) + (1,) * (n - 1))
    m = re.fullmatch(r"X_?(\d+)", token)
    if not m:
        raise ValueError(f"unknown WB generator {token!r}")
    i = int(m.group(1))
    _check_index(n, i, 1)
    imgs = list(range(1, n + 1))
    imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
    return SignedPerm(tuple(imgs), (1,) * n)


def wd_generator(n: int, token: str) -> SignedPerm:
    """``X0`` is the image ``Y X1 Y``; the others are the type B transpositions."""
    m = re.fullmatch(r"X_?(\d+)", token)
    if not m:
        raise ValueError(f"unknown WD generator {token!r}")
    i = int(m.group(1))
    _check_index(n, i, 0)
    if i == 0:
        if n < 2:
            raise ValueError("X0 needs n >= 2")
        y = wb_generator(n, "Y")
        return compose_all((y, wb_generator(n, "X1"), y), n)
    return wb_generator(n, f"X{i}")


def wb_generators(n: int) -> dict[str, SignedPerm]:
    gens = {"Y": wb_generator(n, "Y")}
    gens.update({f"X{i}": wb_generator(n, f"X{i}") for i in range(1, n)})
    return gens


def wd_generators(n: int) -> dict[str, SignedPerm]:
    return {f"X{i}": wd_generator(n, f"X{i}") for i in range(0, n)}


def enumerate_group(generators: Iterable[SignedPerm]) -> list[SignedPerm]:
    """Breadth-first closure; returned in the canonical (sorted) order."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("generators of different sizes")
    start = SignedPerm.identity(n)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for g in gens:
            v = compose(w, g)
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return sorted(seen)


def hyperoctahedral_order(n: int) -> int:
    return 2 ** n * factorial(n)


def even_signed(n: int) -> list[SignedPerm]:
    """All signed permutations with an even number of negative signs (brute force)."""
    from itertools import permutations, product
    out = []
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            if signs.count(-1) % 2 == 0:
                out.append(SignedPerm(perm, signs))
    return sorted(out)


@dataclass
class EmbeddingReport:
    n: int
    relations: list[dict] = field(default_factory=list)
    image_size: int = 0
    expected_size: int = 0
    injective: bool = False
    even_characterization: bool = False
    witnesses: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (all(r["ok"] for r in self.relations) and self.injective and self.even_characterization
                and self.image_size == self.expected_size)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "relations": self.relations,
            "image_size": self.image_size,
            "expected_size": self.expected_size,
            "injective": self.injective,
            "even_characterization": self.even_characterization,
            "witnesses": self.witnesses,
            "ok": self.ok,
        }


def verify_embedding(n: int, max_n: int = 5) -> EmbeddingReport:
    """Check that the X0 -> Y X1 Y assignment embeds WD_n in WB_n.

    Injectivity follows from the image having the full order 2^(n-1) n! of the
    type D Coxeter group.
    """
    if not 2 <= n <= max_n:
        raise ValueError(f"n must lie in [2, {max_n}]")
    from .models import GroupModel, check_relations_in_model
    from .presentations import builtin_presentation

    rep = EmbeddingReport(n=n, expected_size=hyperoctahedral_order(n) // 2)
    gens = wd_generators(n)
    model = GroupModel(n)
    check = check_relations_in_model({k: model.element(v) for k, v in gens.items()},
                                     builtin_presentation("WD", n), model)
    rep.relations = check.entries
    rep.witnesses.extend(e["relation"] for e in check.entries if not e["ok"])
    image = enumerate_group(gens.values())
    rep.image_size = len(image)
    rep.injective = rep.image_size == rep.expected_size
    target = even_signed(n)
    rep.even_characterization = image == target
    if not rep.even_characterization:
        extra = set(image) ^ set(target)
        rep.witnesses.append(f"image and even-sign set differ at {format_signed_perm(min(extra))}")
    return rep


def format_signed_perm(w: SignedPerm) -> str:
    return "[" + ",".join(str(v) for v in w.signed()) + "]"


def parse_signed_perm(text: str) -> SignedPerm:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"expected [..] literal, got {text!r}")
    vals = [int(v) for v in body[1:-1].split(",") if v.strip()]
    if any(v == 0 for v in vals):
        raise ValueError("0 is not a signed letter")
    return SignedPerm.from_signed(vals)


def random_element(n: int, rng: random.Random) -> SignedPerm:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return SignedPerm(tuple(perm), tuple(rng.choice((1, -1)) for _ in range(n)))
