"""Independent brute-force references used by the tests.

Nothing here imports the search engine, the canonical-form code or the
closed-form builders; each oracle recomputes its answer from definitions
with plain sets and itertools.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, permutations
from math import comb


def monos(r: int, d: int) -> list[tuple[int, ...]]:
    """All exponent vectors of degree d in r variables (any order)."""
    out = []
    for c in combinations_with_replacement(range(r), d):
        v = [0] * r
        for i in c:
            v[i] += 1
        out.append(tuple(v))
    return sorted(out)


def divisors(v: tuple[int, ...]) -> set[tuple[int, ...]]:
    out = {v}
    frontier = [v]
    while frontier:
        w = frontier.pop()
        for i, a in enumerate(w):
            if a:
                u = w[:i] + (a - 1,) + w[i + 1 :]
                if u not in out:
                    out.add(u)
                    frontier.append(u)
    return out


def closure_h(gens) -> tuple[int, ...]:
    members = set()
    for g in gens:
        members |= divisors(tuple(g))
    e = max(sum(m) for m in members)
    h = [0] * (e + 1)
    for m in members:
        h[sum(m)] += 1
    return tuple(h)


def naive_pure_sequences(r: int, e: int) -> set[tuple[int, ...]]:
    """h-vectors of every nonempty set of degree-e monomials in r variables with full support."""
    pool = monos(r, e)
    down = [divisors(v) for v in pool]
    out = set()
    n = len(pool)
    for k in range(1, n + 1):
        for subset in combinations(range(n), k):
            if any(all(pool[j][i] == 0 for j in subset) for i in range(r)):
                continue
            members = set().union(*(down[j] for j in subset))
            h = [0] * (e + 1)
            for m in members:
                h[sum(m)] += 1
            out.add(tuple(h))
    return out


def order_ideal_h_vectors(r: int, e: int) -> set[tuple[int, ...]]:
    """h-vectors ``(1, r, ..., h_e)`` with every entry positive of all order ideals in r variables."""
    if e == 0:
        return {(1,)}
    levels = [monos(r, d) for d in range(e + 1)]
    out = set()

    def rec(d: int, prev: frozenset, h: list[int]) -> None:
        if d > e:
            out.add(tuple(h))
            return
        ok = [
            v
            for v in levels[d]
            if all(v[:i] + (a - 1,) + v[i + 1 :] in prev for i, a in enumerate(v) if a)
        ]
        for k in range(1, len(ok) + 1):
            for chosen in combinations(ok, k):
                rec(d + 1, frozenset(chosen), h + [k])

    rec(2, frozenset(levels[1]), [1, r])
    return out


def brute_growth(n: int, d: int, squarefree: bool = False, nv: int | None = None) -> int:
    """Largest number of degree-(d+1) monomials whose degree-d divisors all lie in some n-set.

    Searches all n-subsets of degree-d monomials in enough variables; with
    ``squarefree`` only squarefree monomials count.
    """
    if nv is None:
        nv = d + 2 if not squarefree else d + 3
    pool = [v for v in monos(nv, d) if not squarefree or max(v) <= 1]
    upper = [v for v in monos(nv, d + 1) if not squarefree or max(v) <= 1]
    if n > len(pool):
        raise ValueError("pool too small")
    index = {v: k for k, v in enumerate(pool)}
    need = []
    for u in upper:
        need.append(
            frozenset(index[u[:i] + (a - 1,) + u[i + 1 :]] for i, a in enumerate(u) if a)
        )
    best = 0
    for S in combinations(range(len(pool)), n):
        S = set(S)
        best = max(best, sum(1 for nd in need if nd <= S))
    return best


def all_expansions(n: int, d: int) -> list[tuple[tuple[int, int], ...]]:
    """All expansions n = sum C(k_j, j), j from d down to some delta >= 1, with k_d > ... > k_delta >= delta."""
    out = []

    def rec(j: int, rest: int, cap: int, terms: tuple) -> None:
        if rest == 0:
            out.append(terms)
            return
        if j == 0:
            return
        for k in range(j, cap):
            c = comb(k, j)
            if c > rest:
                break
            rec(j - 1, rest - c, k, terms + ((k, j),))

    rec(d, n, n + d + 2, ())
    return out


def permutation_orbit_rep(rows: list[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    r = len(rows[0])
    return min(tuple(sorted(tuple(row[p[i]] for i in range(r)) for row in rows)) for p in permutations(range(r)))


def partitions_count(n: int, k: int) -> int:
    """Partitions of n into exactly k parts, by listing nonincreasing tuples."""
    count = 0

    def rec(rest: int, parts: int, cap: int) -> None:
        nonlocal count
        if parts == 0:
            count += rest == 0
            return
        for a in range(min(rest, cap), 0, -1):
            rec(rest - a, parts - 1, a)

    rec(n, k, n)
    return count


def poly_coeffs(parts) -> tuple[int, ...]:
    """Coefficients of prod (1 + z + ... + z^a) by repeated convolution via dict."""
    poly = {0: 1}
    for a in parts:
        new = {}
        for k, c in poly.items():
            for j in range(a + 1):
                new[k + j] = new.get(k + j, 0) + c
        poly = new
    return tuple(poly[k] for k in range(max(poly) + 1))
