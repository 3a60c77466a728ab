"""Deciding and enumerating pure O-sequences by exhaustive search.

A candidate ``h`` with ``r = h_1``, ``e`` its socle degree and ``t = h_e`` is
pure exactly when some set of t distinct degree-e monomials in r variables,
using every variable, has divisor closure with h-vector ``h``.  The search
walks such sets one orbit representative at a time (see :mod:`pureo.orbits`)
and prunes a partial set as soon as its closure overshoots some ``h_i``, can
no longer reach it, or can no longer cover all r variables.  All three tests
are necessary conditions on every subset of a solution, so pruning never
loses a witness and ``NOT_PURE`` means the search space was exhausted.

Closures are bitmasks over all monomials of degree <= e, bits assigned on
first use and grouped per degree, so closure union is a single OR and stratum
counts are popcounts.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import Iterable

from .monomials import Monomial, divisor_closure, h_vector, is_pure, monomials_of_degree, support
from .orbits import OrbitPool
from .sequences import IntSeq, hibi_violation, is_o_sequence

# exact per-degree growth bounds are tabulated only for pools up to this size
_EXACT_BOUND_POOL = 5000


# Sequences whose verdict is known from outside the search but far beyond its reach.
LITERATURE_VERDICTS = {
    (1, 3, 6, 10, 15, 21, 28, 27, 27, 28): "not pure by level-algebra theory; direct search is infeasible",
}


class Status(str, Enum):
    PURE = "pure"
    NOT_PURE = "not_pure"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 10_000_000
    max_candidate_pool: int = 200_000
    parallel_roots: bool = False
    workers: int | None = None

    def __post_init__(self) -> None:
        if self.max_nodes < 1 or self.max_candidate_pool < 1:
            raise ValueError("budget limits must be positive")
        if self.workers is not None and self.workers < 1:
            raise ValueError("workers must be positive")

    @classmethod
    def from_env(cls, **overrides) -> "SearchBudget":
        """Default budget, with ``max_nodes`` taken from ``PUREO_BUDGET`` when set."""
        env = os.environ.get("PUREO_BUDGET")
        if env and "max_nodes" not in overrides:
            overrides["max_nodes"] = int(env)
        return cls(**overrides)


@dataclass(frozen=True)
class PurityVerdict:
    status: Status
    witness: tuple[Monomial, ...] | None = None
    nodes_explored: int = 0
    budget_spent: int = 0
    reason: str = ""

    @property
    def is_pure(self) -> bool:
        return self.status is Status.PURE

    def to_json(self) -> dict:
        out = {
            "status": self.status.value,
            "witness": [str(m) for m in self.witness] if self.witness is not None else None,
            "nodes": self.nodes_explored,
            "budget_spent": self.budget_spent,
        }
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass(frozen=True)
class Enumeration:
    sequences: tuple[IntSeq, ...]
    complete: bool
    nodes: int
    regions: dict[str, int] | None = field(default=None)

    def __iter__(self):
        return iter(self.sequences)

    def __len__(self) -> int:
        return len(self.sequences)

    def __contains__(self, h) -> bool:
        return tuple(h) in {tuple(s) for s in self.sequences}


class WitnessError(ValueError):
    pass


class _BudgetExceeded(Exception):
    pass


class _Search:
    """Tables for searching subsets of degree-e monomials in r variables."""

    def __init__(self, r: int, e: int):
        self.r = r
        self.e = e
        self.pool = OrbitPool(monomials_of_degree(r, e), r)
        self.vectors = self.pool.vectors
        self._bits: dict[tuple[int, ...], int] = {}
        self._down_memo: dict[tuple[int, ...], int] = {}
        self.degree_masks = [0] * (e + 1)
        self._down = [0] * len(self.vectors)
        self.varmask = []
        for v in self.vectors:
            m = 0
            for i, a in enumerate(v):
                if a:
                    m |= 1 << i
            self.varmask.append(m)
        self.full_support = (1 << r) - 1
        if len(self.vectors) <= _EXACT_BOUND_POOL:
            self.max_new = [0] * (e + 1)
            for j in range(len(self.vectors)):
                down = self.down(j)
                for i in range(1, e):
                    c = (down & self.degree_masks[i]).bit_count()
                    if c > self.max_new[i]:
                        self.max_new[i] = c
        else:
            self.max_new = [min(comb(e, i), comb(r + i - 1, i)) for i in range(e + 1)]

    def _bit(self, v: tuple[int, ...]) -> int:
        b = self._bits.get(v)
        if b is None:
            b = 1 << len(self._bits)
            self._bits[v] = b
            self.degree_masks[sum(v)] |= b
        return b

    def _downset(self, v: tuple[int, ...]) -> int:
        m = self._down_memo.get(v)
        if m is None:
            m = self._bit(v)
            for i, a in enumerate(v):
                if a:
                    w = list(v)
                    w[i] -= 1
                    m |= self._downset(tuple(w))
            self._down_memo[v] = m
        return m

    def down(self, j: int) -> int:
        m = self._down[j]
        if not m:
            m = self._down[j] = self._downset(self.vectors[j])
        return m

    def counts(self, closure: int) -> list[int]:
        return [(closure & dm).bit_count() for dm in self.degree_masks]

    def witness(self, indices) -> tuple[Monomial, ...]:
        return tuple(Monomial(self.vectors[j]) for j in indices)

    # -- decide ---------------------------------------------------------------

    def roots_for_size(self, t: int, h: tuple[int, ...] | None) -> list[int]:
        root = self.pool.root()
        out = []
        for j in range(len(self.vectors) - t + 1):
            if self._admissible(self.down(j), self.varmask[j], t - 1, h) and self.pool.extend(root, j):
                out.append(j)
        return out

    def _admissible(self, closure: int, varmask: int, remaining: int, h) -> bool:
        e = self.e
        if self.r - varmask.bit_count() > remaining * min(e, self.r):
            return False
        if h is None:
            return True
        dms = self.degree_masks
        mn = self.max_new
        for i in range(1, e):
            c = (closure & dms[i]).bit_count()
            if c > h[i] or c + remaining * mn[i] < h[i]:
                return False
        return True

    def decide_branch(self, j0: int, h: tuple[int, ...], limit: int):
        """Search the subtree rooted at singleton ``{j0}``.

        Returns ``(witness_indices | None, nodes, work, exceeded)``.
        """
        t = h[self.e]
        n = len(self.vectors)
        e = self.e
        r_full = self.full_support
        dms = self.degree_masks
        mn = self.max_new
        r = self.r
        cover = min(e, r)
        extend = self.pool.extend
        down = self.down
        varmask = self.varmask
        stats = [0, 0]
        chosen = [j0]

        def rec(state, last: int, closure: int, vm: int, depth: int):
            stats[0] += 1
            if stats[0] > limit:
                raise _BudgetExceeded
            if depth == t:
                if vm == r_full and all((closure & dms[i]).bit_count() == h[i] for i in range(1, e)):
                    return list(chosen)
                return None
            remaining = t - depth - 1
            for j in range(last + 1, n - remaining):
                stats[1] += 1
                vm2 = vm | varmask[j]
                if r - vm2.bit_count() > remaining * cover:
                    continue
                cl = closure | down(j)
                ok = True
                for i in range(1, e):
                    c = (cl & dms[i]).bit_count()
                    if c > h[i] or c + remaining * mn[i] < h[i]:
                        ok = False
                        break
                if not ok:
                    continue
                st = extend(state, j)
                if st is None:
                    continue
                chosen.append(j)
                found = rec(st, j, cl, vm2, depth + 1)
                if found is not None:
                    return found
                chosen.pop()
            return None

        state = self.pool.extend(self.pool.root(), j0)
        try:
            found = rec(state, j0, self.down(j0), self.varmask[j0], 1)
        except _BudgetExceeded:
            return None, limit, stats[1], True
        return found, stats[0], stats[1], False

    # -- enumerate -------------------------------------------------------------

    def enumerate_branch(self, j0: int, t: int | None, limit: int):
        """Collect h-vectors of full-support subsets under singleton ``{j0}``.

        ``t=None`` means subsets of every size.  Returns
        ``(sequences, nodes, exceeded)``.
        """
        n = len(self.vectors)
        e = self.e
        r = self.r
        r_full = self.full_support
        dms = self.degree_masks[1:e]
        extend = self.pool.extend
        down = self.down
        varmask = self.varmask
        cover = min(e, r)
        found: set[tuple[int, ...]] = set()
        count = [0]

        def emit(closure: int, depth: int) -> None:
            found.add((1,) + tuple((closure & dm).bit_count() for dm in dms) + (depth,))

        def rec_all(state, last: int, closure: int, vm: int, depth: int) -> None:
            count[0] += 1
            if count[0] > limit:
                raise _BudgetExceeded
            if vm == r_full:
                emit(closure, depth)
            for j in range(last + 1, n):
                st = extend(state, j)
                if st is not None:
                    rec_all(st, j, closure | down(j), vm | varmask[j], depth + 1)

        def rec_sized(state, last: int, closure: int, vm: int, depth: int) -> None:
            count[0] += 1
            if count[0] > limit:
                raise _BudgetExceeded
            if depth == t:
                if vm == r_full:
                    emit(closure, depth)
                return
            remaining = t - depth - 1
            for j in range(last + 1, n - remaining):
                vm2 = vm | varmask[j]
                if r - vm2.bit_count() > remaining * cover:
                    continue
                st = extend(state, j)
                if st is not None:
                    rec_sized(st, j, closure | down(j), vm2, depth + 1)

        rec = rec_all if t is None else rec_sized
        state = extend(self.pool.root(), j0)
        try:
            rec(state, j0, down(j0), varmask[j0], 1)
        except _BudgetExceeded:
            return found, limit, True
        return found, count[0], False

    def enumeration_roots(self, t: int | None) -> list[int]:
        root = self.pool.root()
        n = len(self.vectors)
        last = n if t is None else n - t + 1
        out = []
        for j in range(max(last, 0)):
            if t is not None and self.r - self.varmask[j].bit_count() > (t - 1) * min(self.e, self.r):
                continue
            if self.pool.extend(root, j) is not None:
                out.append(j)
        return out


_SEARCH_CACHE: dict[tuple[int, int], _Search] = {}


def _search_for(r: int, e: int) -> _Search:
    s = _SEARCH_CACHE.get((r, e))
    if s is None:
        if len(_SEARCH_CACHE) > 32:
            _SEARCH_CACHE.clear()
        s = _SEARCH_CACHE[(r, e)] = _Search(r, e)
    return s


def _decide_worker(args):
    r, e, h, j0, limit = args
    return _search_for(r, e).decide_branch(j0, h, limit)


def _enumerate_worker(args):
    r, e, t, j0, limit = args
    found, nodes, exceeded = _search_for(r, e).enumerate_branch(j0, t, limit)
    return sorted(found), nodes, exceeded


def _pool_map(fn, jobs, budget: SearchBudget):
    if not budget.parallel_roots or len(jobs) < 2:
        return None
    workers = budget.workers or os.cpu_count() or 1
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, jobs))


def _not_pure(reason: str) -> PurityVerdict:
    return PurityVerdict(Status.NOT_PURE, reason=reason)


def quick_reject(h: IntSeq) -> str | None:
    """Reason ``h`` cannot be pure without searching, or None."""
    chk = is_o_sequence(h)
    if not chk:
        return f"not an O-sequence (fails at degree {chk.failed_at})"
    bad = hibi_violation(h)
    if bad is not None:
        return f"violates h_i <= h_j for (i, j) = {bad}"
    e = h.socle_degree
    if h.codimension > h.type * e:
        return f"codimension {h.codimension} exceeds type*socle degree {h.type * e}"
    return None


def decide_pure(h: Iterable[int], budget: SearchBudget | None = None) -> PurityVerdict:
    """Decide whether ``h`` is a pure O-sequence by exhaustive orbit search."""
    h = IntSeq.candidate(h)
    budget = budget or SearchBudget.from_env()
    e = h.socle_degree
    if e == 0:
        return PurityVerdict(Status.PURE, witness=(Monomial(()),), reason="unit ideal")
    t = h.type
    if t == 0:
        raise ValueError("type must be positive")
    reason = quick_reject(h)
    if reason:
        return _not_pure(reason)
    r = h.codimension
    pool_size = comb(r + e - 1, e)
    if pool_size > budget.max_candidate_pool:
        reason = f"candidate pool {pool_size} exceeds budget"
        if tuple(h) in LITERATURE_VERDICTS:
            reason += "; literature: " + LITERATURE_VERDICTS[tuple(h)]
        return PurityVerdict(Status.UNKNOWN, reason=reason)
    if t > pool_size:
        return _not_pure(f"type {t} exceeds the {pool_size} monomials of degree {e}")

    search = _search_for(r, e)
    hh = tuple(h)
    roots = search.roots_for_size(t, hh)
    limit = budget.max_nodes
    results = _pool_map(_decide_worker, [(r, e, hh, j0, limit) for j0 in roots], budget)

    nodes = work = 0
    for k, j0 in enumerate(roots):
        remaining = limit - nodes
        if results is None:
            found, n_k, w_k, exceeded = search.decide_branch(j0, hh, remaining)
        else:
            found, n_k, w_k, exceeded = results[k]
            if exceeded or n_k > remaining:
                # replay serially so the totals match a single-process run
                found, n_k, w_k, exceeded = search.decide_branch(j0, hh, remaining)
        nodes += n_k
        work += w_k
        if exceeded:
            reason = "node budget exhausted"
            if hh in LITERATURE_VERDICTS:
                reason += "; literature: " + LITERATURE_VERDICTS[hh]
            return PurityVerdict(Status.UNKNOWN, None, limit, work, reason)
        if found is not None:
            return PurityVerdict(Status.PURE, search.witness(found), nodes, work)
    return PurityVerdict(Status.NOT_PURE, None, nodes, work, "search exhausted")


def validate_witness(h: Iterable[int], gens: Iterable[Monomial]) -> PurityVerdict:
    """Accept a proposed generator set for ``h`` without searching."""
    h = IntSeq.candidate(h)
    gens = tuple(gens)
    X = divisor_closure(gens)
    if h_vector(X) != h:
        raise WitnessError(f"closure has h-vector {h_vector(X)}, expected {h}")
    if not is_pure(X):
        raise WitnessError("closure is not pure")
    if support(gens) != h.codimension:
        raise WitnessError("support does not match h_1")
    return PurityVerdict(Status.PURE, gens, reason="witness validated")


def _run_enumeration(r: int, e: int, t: int | None, budget: SearchBudget) -> Enumeration:
    pool_size = comb(r + e - 1, e)
    if pool_size > budget.max_candidate_pool:
        return Enumeration((), False, 0)
    search = _search_for(r, e)
    roots = search.enumeration_roots(t)
    limit = budget.max_nodes
    results = _pool_map(_enumerate_worker, [(r, e, t, j0, limit) for j0 in roots], budget)
    found: set[tuple[int, ...]] = set()
    nodes = 0
    complete = True
    for k, j0 in enumerate(roots):
        remaining = limit - nodes
        if results is None:
            part, n_k, exceeded = search.enumerate_branch(j0, t, remaining)
        else:
            part, n_k, exceeded = results[k]
            if exceeded or n_k > remaining:
                part, n_k, exceeded = search.enumerate_branch(j0, t, remaining)
        found.update(map(tuple, part))
        nodes += n_k
        if exceeded:
            complete = False
            break
    return Enumeration(tuple(sorted(IntSeq(s) for s in found)), complete, nodes)


def enumerate_pure(r: int, e: int, budget: SearchBudget | None = None) -> Enumeration:
    """All pure O-sequences of codimension exactly r and socle degree e."""
    if r < 1 or e < 1:
        raise ValueError("need r >= 1 and e >= 1")
    return _run_enumeration(r, e, None, budget or SearchBudget.from_env())


def enumerate_pure_fixed(r: int, e: int, t: int, budget: SearchBudget | None = None) -> Enumeration:
    """Pure O-sequences with codimension r, socle degree e and type t."""
    if r < 1 or e < 1 or t < 1:
        raise ValueError("need r, e, t >= 1")
    if r > t * e:
        return Enumeration((), True, 0)
    return _run_enumeration(r, e, t, budget or SearchBudget.from_env())


def socle_degree_3_regions(seqs: Iterable[IntSeq]) -> dict[str, int]:
    """Count sequences (1, r, a, t) by the regions I, II, III of the (r, a) plane."""
    counts = {"I": 0, "II": 0, "III": 0}
    for h in seqs:
        _, r, a, t = h
        if t <= r <= a <= 3 * t:
            counts["I"] += 1
        elif 0 < r < t <= a <= 3 * t:
            counts["II"] += 1
        elif 0 < r <= a < t:
            counts["III"] += 1
        else:
            raise ValueError(f"{h} lies outside r <= a <= 3t")
    return counts


def enumerate_pure_by_type(
    e: int, t: int, budget: SearchBudget | None = None, *, codimension: int | None = None
) -> Enumeration:
    """All pure O-sequences of socle degree e and type t, over every codimension.

    Codimensions run over 1..t*e, beyond which no sequence exists.  Pass
    ``codimension`` to restrict to one of them.  For e = 3 the result also
    carries region counts.
    """
    budget = budget or SearchBudget.from_env()
    rs = [codimension] if codimension is not None else range(1, t * e + 1)
    seqs: set[IntSeq] = set()
    nodes = 0
    complete = True
    for r in rs:
        part = enumerate_pure_fixed(r, e, t, budget)
        seqs.update(part.sequences)
        nodes += part.nodes
        complete &= part.complete
    ordered = tuple(sorted(seqs))
    regions = socle_degree_3_regions(ordered) if e == 3 else None
    return Enumeration(ordered, complete, nodes, regions)


@dataclass(frozen=True)
class IntervalGap:
    below: IntSeq
    missing: tuple[IntSeq, ...]
    above: IntSeq
    position: int


def scan_interval_gaps(S: Iterable[Iterable[int]]) -> list[IntervalGap]:
    """Pairs in S differing in one entry by at least 2 with an intermediate value absent."""
    seqs = {tuple(h) for h in S}
    groups: dict[tuple, list[int]] = {}
    for h in seqs:
        for i in range(len(h)):
            key = (len(h), i, h[:i], h[i + 1 :])
            groups.setdefault(key, []).append(h[i])
    gaps = []
    for (_, i, pre, post), values in sorted(groups.items()):
        values.sort()
        present = set(values)
        for a in range(len(values)):
            for b in range(a + 1, len(values)):
                lo, hi = values[a], values[b]
                missing = [v for v in range(lo + 1, hi) if v not in present]
                if missing:
                    gaps.append(
                        IntervalGap(
                            IntSeq(pre + (lo,) + post),
                            tuple(IntSeq(pre + (v,) + post) for v in missing),
                            IntSeq(pre + (hi,) + post),
                            i,
                        )
                    )
    return gaps
