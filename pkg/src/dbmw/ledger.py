"""Modelling conventions that every report carries (printed by ``dbmw --ledger``)."""

from __future__ import annotations

import hashlib

from .presentations import CONVENTIONS

ENTRIES: tuple[tuple[str, str], ...] = (
    ("index-conventions", "; ".join(CONVENTIONS)),
    ("odd-loop", "a closed loop with an odd number of dots is worth A = 0 in the diagram model"),
    ("dots", "dots are stored mod 2 per arc (Y^2 = 1 at q = l = 1)"),
    ("closure", "the trace joins top i to bottom i and divides by x^n"),
    ("seminormal", "X_i block on (t, t'): diagonal (q-1)/(1-rho) and (q-1)/(1-1/rho), rho = c(t,i)/c(t,i+1); "
                   "off-diagonal 1 and ad+q oriented by the cell key (row, col, component); "
                   "symmetric (q+1)/2 entries when the cells differ only in component"),
    ("contents", "c(t, m) = p_j q^(col-row) with p_1 = -p_0 unless a point sets p1"),
    ("hecke-embedding", "X0 -> k Y X1 Y with k = -1/(p0 p1)"),
    ("bbprime", "type B BMW at q0 = 1/l, q1 = 0: Y^2 = 1/l, e1 Y e1 = A e1, e1 Y X1^+-1 Y = 1/l e1 and mirrors"),
    ("prover", "rules w_k -> -(1/c_k) sum_{j!=k} c_j w_j for nonempty w_k; best-first lockstep bidirectional "
               "search; coefficients fingerprinted mod 2^61-1 during search, proofs replayed exactly"),
    ("gram", "exact determinants for n <= 3, nonzero residues modulo three primes for n = 4, "
             "degree certificate (unit diagonal, negative off-diagonal x-degree) for every n"),
    ("tower", "seeded at level 2 with six 1-dimensional components; size-0 labels are the signed pair {|}+-; "
              "branching forgets signs"),
)


def ledger_text() -> str:
    return "".join(f"{k}: {v}\n" for k, v in ENTRIES)


def ledger_hash() -> str:
    return hashlib.sha256(ledger_text().encode()).hexdigest()
