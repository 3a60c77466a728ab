"""Closed-form pure O-sequences and the counts attached to them.

Complete intersections (type one) come from partitions, truncations from
full polynomial rings, and disjoint sums glue pure pieces of equal socle
degree along the shared unit monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from .monomials import Monomial, monomials_of_degree
from .sequences import IntSeq


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(a) for a in self.parts)
        if not parts or any(a < 1 for a in parts):
            raise ValueError(f"partition parts must be positive, got {parts}")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        sep = "+" if "+" in text else ","
        try:
            return cls(tuple(int(p) for p in text.split(sep)))
        except ValueError:
            raise ValueError(f"cannot parse partition {text!r}") from None

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "+".join(map(str, self.parts))

    def monomial(self) -> Monomial:
        """``y_1^{a_1} ... y_r^{a_r}``, the single generator of the complete intersection."""
        return Monomial(self.parts)


def partitions(e: int, r: int | None = None) -> Iterator[Partition]:
    """Partitions of e (into exactly r parts if given), in reverse lex order of parts."""

    def gen(n: int, cap: int, k: int | None) -> Iterator[tuple[int, ...]]:
        if n == 0:
            if k is None or k == 0:
                yield ()
            return
        if k == 0:
            return
        for a in range(min(n, cap), 0, -1):
            nk = None if k is None else k - 1
            if nk is not None and a * (nk + 1) < n:
                break
            for rest in gen(n - a, a, nk):
                yield (a,) + rest

    if e < 1:
        raise ValueError("e must be positive")
    for parts in gen(e, e, r):
        yield Partition(parts)


@lru_cache(maxsize=None)
def p_r(e: int, r: int) -> int:
    """Number of partitions of e into exactly r parts."""
    if e < 0 or r < 0:
        return 0
    if e == 0 and r == 0:
        return 1
    if e == 0 or r == 0 or r > e:
        return 0
    # either some part is 1, or subtract 1 from every part
    return p_r(e - 1, r - 1) + p_r(e - r, r)


def ci_h_vector(p: Partition) -> IntSeq:
    """Coefficients of the product of ``1 + z + ... + z^a`` over the parts a."""
    coeffs = [1]
    for a in p.parts:
        out = [0] * (len(coeffs) + a)
        for i, c in enumerate(coeffs):
            for j in range(a + 1):
                out[i + j] += c
        coeffs = out
    return IntSeq(coeffs)


def truncation_h(r: int, e: int) -> IntSeq:
    if r < 1 or e < 0:
        raise ValueError("need r >= 1 and e >= 0")
    return IntSeq(comb(r + i - 1, i) for i in range(e + 1))


def truncation_generators(r: int, e: int) -> tuple[Monomial, ...]:
    return tuple(Monomial(v) for v in monomials_of_degree(r, e))


def disjoint_sum(hs: Iterable[Iterable[int]]) -> IntSeq:
    """Degreewise sum of pure sequences in disjoint variables, sharing ``h_0 = 1``."""
    hs = [IntSeq.candidate(h) for h in hs]
    if not hs:
        raise ValueError("disjoint_sum needs at least one summand")
    degrees = {h.socle_degree for h in hs}
    if len(degrees) > 1:
        raise ValueError(f"summands have different socle degrees {sorted(degrees)}")
    e = degrees.pop()
    return IntSeq([1] + [sum(h[i] for h in hs) for i in range(1, e + 1)])


def disjoint_sum_witness(gen_sets: Iterable[Iterable[Monomial]]) -> tuple[Monomial, ...]:
    """Place each generator set on its own block of fresh variables and take the union.

    Each set is first compacted onto the variables it actually uses, so the
    support of the result is the sum of the supports.
    """
    out: list[Monomial] = []
    offset = 0
    for gens in gen_sets:
        gens = list(gens)
        used = sorted(set().union(*(m.support for m in gens)))
        relabel = {v: k for k, v in enumerate(used)}
        for m in gens:
            exps = [0] * len(used)
            for v in m.support:
                exps[relabel[v]] = m.exponent(v)
            out.append(Monomial(exps).shifted(offset))
        offset += len(used)
    return tuple(out)


def shifted_sum(h: Iterable[int], h2: Iterable[int]) -> IntSeq:
    """``(1, h_1 + 1, h_2 + h2_1, ..., h_e + h2_{e-1})``: h2 raised by one degree and added.

    Experimental; no purity claim is attached to the result.
    """
    h = IntSeq.candidate(h)
    h2 = IntSeq.candidate(h2)
    if h2.socle_degree >= h.socle_degree:
        raise ValueError("second sequence must have smaller socle degree")
    padded = tuple(h2) + (0,) * (len(h) - len(h2))
    return IntSeq([1] + [h[i] + padded[i - 1] for i in range(1, len(h))])


def compute_c_e(e: int) -> Fraction:
    """Leading constant of the common asymptotic count of O-, pure and differentiable sequences."""
    if e < 1:
        raise ValueError("e must be positive")
    n = comb(e + 1, 2) - 1
    num = 1
    for i in range(e - 1):
        num *= comb(n - comb(i + 1, 2), i)
    return Fraction(num, factorial(n))


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Block:
    """``count`` copies of one pure summand ``h`` with generators ``gens``."""

    count: int
    label: str
    h: IntSeq
    gens: tuple[Monomial, ...]


@dataclass(frozen=True)
class NonunimodalRecipe:
    maxima: int
    h: IntSeq
    blocks: tuple[Block, ...]

    @property
    def codimension(self) -> int:
        return self.h.codimension

    def witness(self) -> tuple[Monomial, ...]:
        sets: list[Sequence[Monomial]] = []
        for b in self.blocks:
            sets.extend([b.gens] * b.count)
        return disjoint_sum_witness(sets)

    def describe(self) -> str:
        return " + ".join(f"{b.count}*{b.label}" if b.count > 1 else b.label for b in self.blocks)


def _ci_block(count: int, parts: tuple[int, ...]) -> Block:
    p = Partition(parts)
    return Block(count, f"CI({p})", ci_h_vector(p), (p.monomial(),))


def _truncation_block(count: int, r: int, e: int) -> Block:
    return Block(count, f"T({r},{e})", truncation_h(r, e), truncation_generators(r, e))


def nonunimodal_factory(M: int) -> NonunimodalRecipe:
    """A pure O-sequence whose shape has exactly M local maxima.

    M = 2 is the socle-degree-4 example ``T(5,4) + 11*CI(1,1,1,1)``.  For
    M >= 3 the socle degree is ``e = 4(M-1)`` and the sequence is

        4 * sum_{k=1}^{M-2} CI(2k, e-2k)  +  (4M+1) * CI(2M-2, 2M-2)  +  2 * T(3, e).

    Each two-part complete intersection ``CI(a, e-a)`` is flat at height
    a+1 on degrees a..e-a.  Stacking them leaves a staircase in the second
    half that falls by 4 every two degrees; the quadratic growth of T(3, e)
    climbs by roughly 2i per degree, and the balance makes the second half
    alternate between local maxima at even degrees and dips at odd ones.
    The count of maxima is confirmed by :func:`pureo.sequences.analyze_shape`
    for every M the test suite covers; callers should revalidate rather than
    trust the formula for far larger M.
    """
    if M < 2:
        raise ValueError("M must be at least 2")
    if M == 2:
        blocks = (_truncation_block(1, 5, 4), _ci_block(11, (1, 1, 1, 1)))
    else:
        e = 4 * (M - 1)
        blocks = tuple(_ci_block(4, (2 * k, e - 2 * k)) for k in range(1, M - 1))
        blocks += (_ci_block(4 * M + 1, (2 * M - 2, 2 * M - 2)), _truncation_block(2, 3, e))
    hs = []
    for b in blocks:
        hs.extend([b.h] * b.count)
    return NonunimodalRecipe(M, disjoint_sum(hs), blocks)
