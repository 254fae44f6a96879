"""Bratteli tower of the D-type BMW algebras: labels, edges and path-count dimensions.

Level ``m`` carries the HD index sets of sizes ``m, m-2, ...``; two labels on
consecutive levels are joined when one unordered bipartition arises from the
other by moving a single box (signs are forgotten).  The tower is seeded at
level 2 with six one-dimensional components.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from .diagrams import double_factorial
from .heckerep import HDLabel, Partition, hd_dim, hd_index_set


def bd_component_labels(n: int) -> list[tuple[int, HDLabel]]:
    if n < 2:
        raise ValueError("the tower starts at n = 2")
    return [(size, label) for size in range(n, -1, -2) for label in hd_index_set(size)]


def _remove_box(p: Partition) -> list[Partition]:
    out = []
    for r, length in enumerate(p):
        below = p[r + 1] if r + 1 < len(p) else 0
        if length > below:
            smaller = list(p)
            smaller[r] -= 1
            out.append(tuple(v for v in smaller if v))
    return out


def _unordered(label: HDLabel) -> tuple[Partition, Partition]:
    return tuple(sorted((label.first, label.second)))


def _shrinks(label: HDLabel) -> set[tuple[Partition, Partition]]:
    a, b = label.first, label.second
    out = {tuple(sorted((s, b))) for s in _remove_box(a)}
    out |= {tuple(sorted((a, s))) for s in _remove_box(b)}
    return out


def adjacent(small: HDLabel, big: HDLabel) -> bool:
    if big.size != small.size + 1:
        return False
    return _unordered(small) in _shrinks(big)


def branching_edges(lower: list[HDLabel], upper: list[HDLabel]) -> list[tuple[HDLabel, HDLabel]]:
    """Edges from level m labels to level m+1 labels (either may be the bigger one)."""
    edges = []
    for a in lower:
        for b in upper:
            if adjacent(a, b) or adjacent(b, a):
                edges.append((a, b))
    return edges


@dataclass
class BratteliGraph:
    n: int
    levels: dict[int, list[HDLabel]] = field(default_factory=dict)
    edges: dict[int, list[tuple[HDLabel, HDLabel]]] = field(default_factory=dict)
    dims: dict[tuple[int, HDLabel], int] = field(default_factory=dict)

    def level_total(self, m: int) -> int:
        return sum(self.dims[(m, l)] ** 2 for l in self.levels[m])

    def as_dict(self) -> dict:
        return {
            "levels": [{"m": m, "labels": [{"label": str(l), "size": l.size, "dim": self.dims[(m, l)]}
                                           for l in self.levels[m]]} for m in sorted(self.levels)],
            "edges": [{"m": m, "from": str(a), "to": str(b)} for m in sorted(self.edges) for a, b in self.edges[m]],
        }

    def to_text(self) -> str:
        """Edge list, one ``level:label -- level:label`` line per edge."""
        lines = [f"# Bratteli diagram up to level {self.n}"]
        for m in sorted(self.levels):
            lines.append(f"level {m}: " + " ".join(f"{l}[{self.dims[(m, l)]}]" for l in self.levels[m]))
        for m in sorted(self.edges):
            for a, b in self.edges[m]:
                lines.append(f"{m}:{a} -- {m + 1}:{b}")
        return "\n".join(lines) + "\n"


def bratteli(n: int) -> BratteliGraph:
    g = BratteliGraph(n)
    for m in range(2, n + 1):
        g.levels[m] = [l for _, l in bd_component_labels(m)]
    for l in g.levels[2]:
        g.dims[(2, l)] = 1
    for m in range(2, n):
        g.edges[m] = branching_edges(g.levels[m], g.levels[m + 1])
        for l in g.levels[m + 1]:
            g.dims[(m + 1, l)] = sum(g.dims[(m, a)] for a, b in g.edges[m] if b == l)
    return g


def path_count_dims(n: int) -> dict[tuple[int, HDLabel], int]:
    return bratteli(n).dims


def bmw_dimension(m: int) -> int:
    return 2 ** (m - 1) * double_factorial(2 * m - 1)


def hecke_dimension(m: int) -> int:
    return 2 ** (m - 1) * factorial(m)


@dataclass
class TowerReport:
    n: int
    bmw_ok: dict[int, bool]
    hecke_ok: dict[int, bool]
    quotient_ok: dict[int, bool]
    recursion_ok: dict[int, bool]

    @property
    def ok(self) -> bool:
        return all(all(d.values()) for d in (self.bmw_ok, self.hecke_ok, self.quotient_ok, self.recursion_ok))

    def as_dict(self) -> dict:
        return {"bmw_ok": all(self.bmw_ok.values()), "hecke_ok": all(self.hecke_ok.values()),
                "quotient_ok": all(self.quotient_ok.values()), "recursion_ok": all(self.recursion_ok.values()),
                "per_level": {m: {"bmw": self.bmw_ok[m], "hecke": self.hecke_ok[m], "quotient": self.quotient_ok[m],
                                  "recursion": self.recursion_ok[m]} for m in sorted(self.bmw_ok)}}


def tower_report(n: int) -> TowerReport:
    g = bratteli(n)
    bmw, hecke, quot, rec = {}, {}, {}, {}
    for m in range(2, n + 1):
        top = [l for l in g.levels[m] if l.size == m]
        low = [l for l in g.levels[m] if l.size < m]
        hd = sum(g.dims[(m, l)] ** 2 for l in top)
        rest = sum(g.dims[(m, l)] ** 2 for l in low)
        bmw[m] = hd + rest == bmw_dimension(m)
        hecke[m] = hd == hecke_dimension(m)
        quot[m] = bmw_dimension(m) - hecke_dimension(m) == rest
        rec[m] = all(g.dims[(m, l)] == hd_dim(l) for l in top)
    return TowerReport(n, bmw, hecke, quot, rec)


def bmw_dim_identity(n: int) -> bool:
    g = bratteli(n)
    return g.level_total(n) == bmw_dimension(n)


def quotient_dim_check(n: int) -> bool:
    g = bratteli(n)
    rest = sum(g.dims[(n, l)] ** 2 for l in g.levels[n] if l.size < n)
    return bmw_dimension(n) - hecke_dimension(n) == rest
