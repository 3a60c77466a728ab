"""Multiplication maps by powers of ``l = y_1 + ... + y_r`` on monomial algebras.

For a monomial order ideal X the algebra has the monomials of X as basis,
and ``l^d`` sends a degree-i basis monomial m to the sum over degree-d
monomials q of ``multinomial(q) * m*q``, dropping products outside X.
Ranks are exact (fraction-free elimination over the integers); a modular
rank serves as an independent cross-check.

Using the symmetric form l in place of a general linear form is standard
for monomial ideals in characteristic zero: maximal rank for l certifies
the Lefschetz property, and a failure is a failure for the symmetric form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import factorial
from typing import Sequence

from .monomials import Monomial, OrderIdeal, divisor_closure, h_vector, is_pure, monomials_of_degree
from .sequences import IntSeq

MODULUS = (1 << 62) - 57  # prime
DEFAULT_MAX_ENTRIES = 250_000

Matrix = list[list[int]]


def _multinomial(q: Sequence[int]) -> int:
    out = factorial(sum(q))
    for a in q:
        out //= factorial(a)
    return out


def multiplication_matrix(X: OrderIdeal, i: int, d: int) -> Matrix:
    """Matrix of ``l^d`` from degree i to degree i+d; rows index the target basis."""
    e = X.socle_degree
    if i < 0 or d < 0 or i + d > e:
        raise ValueError(f"degrees {i} -> {i + d} outside 0..{e}")
    n = X.nvars
    cols = X.degree(i)
    rows = X.degree(i + d)
    row_index = {m: k for k, m in enumerate(rows)}
    quotients = [(Monomial(q), _multinomial(q)) for q in monomials_of_degree(n, d)] if n else [(Monomial(()), 1)]
    M = [[0] * len(cols) for _ in rows]
    for c, m in enumerate(cols):
        for q, coeff in quotients:
            k = row_index.get(m * q)
            if k is not None:
                M[k][c] = coeff
    return M


def bareiss_rank(M: Matrix) -> int:
    """Exact rank by fraction-free Gaussian elimination."""
    A = [list(row) for row in M if any(row)]
    if not A:
        return 0
    ncols = len(A[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        pivot = next((k for k in range(rank, len(A)) if A[k][c]), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        p = A[rank][c]
        for k in range(rank + 1, len(A)):
            a = A[k][c]
            row_r = A[rank]
            row_k = A[k]
            A[k] = [(p * row_k[j] - a * row_r[j]) // prev for j in range(ncols)]
        prev = p
        rank += 1
        if rank == len(A):
            break
    return rank


def modular_rank(M: Matrix, p: int = MODULUS) -> int:
    A = [[x % p for x in row] for row in M]
    A = [row for row in A if any(row)]
    if not A:
        return 0
    ncols = len(A[0])
    rank = 0
    for c in range(ncols):
        pivot = next((k for k in range(rank, len(A)) if A[k][c]), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        inv = pow(A[rank][c], -1, p)
        row_r = [x * inv % p for x in A[rank]]
        A[rank] = row_r
        for k in range(rank + 1, len(A)):
            a = A[k][c]
            if a:
                row_k = A[k]
                A[k] = [(row_k[j] - a * row_r[j]) % p for j in range(ncols)]
        rank += 1
        if rank == len(A):
            break
    return rank


@dataclass(frozen=True)
class RankProfile:
    hilbert: IntSeq
    ranks: dict[tuple[int, int], int]
    has_wlp: bool | None
    has_slp: bool | None
    hausel_injective: bool | None
    skipped: tuple[tuple[int, int], ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "h": list(self.hilbert),
            "ranks": {f"({i},{d})": r for (i, d), r in sorted(self.ranks.items())},
            "wlp": self.has_wlp,
            "slp": self.has_slp,
            "hausel": self.hausel_injective,
        }


def _maximal(h: Sequence[int], ranks: dict, pairs) -> bool | None:
    verdict: bool | None = True
    for i, d in pairs:
        r = ranks.get((i, d))
        if r is None:
            verdict = None
        elif r != min(h[i], h[i + d]):
            return False
    return verdict


def rank_profile(X: OrderIdeal, max_power: int | None = None, *, max_entries: int = DEFAULT_MAX_ENTRIES) -> RankProfile:
    """Ranks of ``l^d`` out of every degree, for powers ``d <= max_power``.

    Matrices with more than ``max_entries`` entries are skipped; verdicts
    depending on them become ``None``.  The SLP verdict is ``None`` unless
    every power up to the socle degree was computed.  The Hausel verdict is
    ``None`` for non-pure X.
    """
    h = h_vector(X)
    e = h.socle_degree
    if max_power is None:
        max_power = e
    ranks: dict[tuple[int, int], int] = {}
    skipped = []
    for d in range(1, max_power + 1):
        for i in range(0, e - d + 1):
            if h[i] * h[i + d] > max_entries:
                skipped.append((i, d))
                continue
            ranks[i, d] = bareiss_rank(multiplication_matrix(X, i, d))
    wlp = _maximal(h, ranks, [(i, 1) for i in range(e)]) if max_power >= 1 or e == 0 else None
    if max_power >= e:
        slp = _maximal(h, ranks, [(i, d) for d in range(1, e + 1) for i in range(e - d + 1)])
    else:
        slp = None
    hausel = None
    if is_pure(X):
        hausel = True
        for j in range((e - 1) // 2 + 1) if e >= 1 else ():
            r = ranks.get((j, 1))
            if r is None:
                hausel = None
            elif r != h[j]:
                hausel = False
                break
    return RankProfile(h, ranks, wlp, slp, hausel, tuple(skipped))


def hausel_check(X: OrderIdeal) -> bool:
    """``l : A_j -> A_{j+1}`` injective for all ``j <= (e-1)/2``; X must be pure."""
    if not is_pure(X):
        raise ValueError("Hausel's injectivity applies to pure order ideals")
    h = h_vector(X)
    e = h.socle_degree
    for j in range((e - 1) // 2 + 1) if e >= 1 else ():
        if bareiss_rank(multiplication_matrix(X, j, 1)) != h[j]:
            return False
    return True


def is_nonincreasing_after_peak(h: Sequence[int]) -> bool:
    peak = max(range(len(h)), key=lambda i: (h[i], -i))
    return all(h[i] >= h[i + 1] for i in range(peak, len(h) - 1))


@dataclass(frozen=True)
class CrossCheck:
    instances: int
    mismatches: tuple[tuple[int, int, int], ...]  # (instance, exact, modular)


def random_instance(rng: random.Random) -> Matrix:
    """A random small integer matrix, low rank about half the time, or a random multiplication map."""
    kind = rng.randrange(3)
    if kind == 2:
        r = rng.randint(2, 4)
        e = rng.randint(2, 5)
        pool = list(monomials_of_degree(r, e))
        gens = rng.sample(pool, rng.randint(1, min(4, len(pool))))
        X = divisor_closure(Monomial(g) for g in gens)
        top = X.socle_degree
        i = rng.randint(0, top - 1)
        d = rng.randint(1, top - i)
        return multiplication_matrix(X, i, d)
    rows, cols = rng.randint(1, 9), rng.randint(1, 9)
    span = rng.choice([1, 3, 10, 1000])
    if kind == 0:
        return [[rng.randint(-span, span) for _ in range(cols)] for _ in range(rows)]
    k = rng.randint(1, min(rows, cols))
    B = [[rng.randint(-span, span) for _ in range(k)] for _ in range(rows)]
    C = [[rng.randint(-span, span) for _ in range(cols)] for _ in range(k)]
    return [[sum(B[a][t] * C[t][b] for t in range(k)) for b in range(cols)] for a in range(rows)]


def crosscheck(count: int, seed: int = 0) -> CrossCheck:
    """Compare exact and modular ranks on ``count`` random instances."""
    rng = random.Random(seed)
    bad = []
    for n in range(count):
        M = random_instance(rng)
        a, b = bareiss_rank(M), modular_rank(M)
        if a != b:
            bad.append((n, a, b))
    return CrossCheck(count, tuple(bad))
