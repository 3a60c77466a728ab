"""Steiner systems and their pure f-vectors.

A design S(l, m, r) is a family of m-subsets (blocks) of {1..r} covering
every l-subset exactly once.  Read as squarefree monomials, the blocks
generate a pure order ideal whose h-vector is the design's f-vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb
from typing import Iterable

from sympy import factorint

from .monomials import Monomial, divisor_closure, h_vector
from .sequences import IntSeq


@dataclass(frozen=True)
class BlockDesign:
    l: int
    m: int
    r: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not 1 <= self.l <= self.m <= self.r:
            raise ValueError(f"need 1 <= l <= m <= r, got ({self.l}, {self.m}, {self.r})")
        blocks = []
        for b in self.blocks:
            b = tuple(sorted(int(v) for v in b))
            if len(set(b)) != self.m:
                raise ValueError(f"block {b} does not have {self.m} distinct points")
            if b[0] < 1 or b[-1] > self.r:
                raise ValueError(f"block {b} has points outside 1..{self.r}")
            blocks.append(b)
        object.__setattr__(self, "blocks", tuple(sorted(set(blocks))))

    def __len__(self) -> int:
        return len(self.blocks)

    def masks(self) -> list[int]:
        return [sum(1 << (v - 1) for v in b) for b in self.blocks]

    def without(self, block: Iterable[int]) -> "BlockDesign":
        block = tuple(sorted(block))
        return BlockDesign(self.l, self.m, self.r, tuple(b for b in self.blocks if b != block))

    def to_text(self) -> str:
        lines = [f"{self.l} {self.m} {self.r}"]
        lines += [" ".join(map(str, b)) for b in self.blocks]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BlockDesign":
        rows = [line.split("#", 1)[0].split() for line in text.splitlines()]
        rows = [row for row in rows if row]
        if not rows or len(rows[0]) != 3:
            raise ValueError("design file must start with a header 'l m r'")
        l, m, r = (int(x) for x in rows[0])
        return cls(l, m, r, tuple(tuple(int(x) for x in row) for row in rows[1:]))


FANO = BlockDesign(2, 3, 7, ((1, 2, 3), (3, 4, 5), (3, 6, 7), (1, 4, 7), (2, 4, 6), (2, 5, 7), (1, 5, 6)))


@dataclass(frozen=True)
class SteinerCheck:
    ok: bool
    violation: tuple[int, ...] | None = None
    times_covered: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_steiner(D: BlockDesign) -> SteinerCheck:
    """Every l-subset in exactly one block; otherwise report the first l-subset that is not."""
    cover: dict[tuple[int, ...], int] = {}
    for b in D.blocks:
        for s in combinations(b, D.l):
            cover[s] = cover.get(s, 0) + 1
    for s in combinations(range(1, D.r + 1), D.l):
        c = cover.get(s, 0)
        if c != 1:
            return SteinerCheck(False, s, c)
    return SteinerCheck(True)


class DesignImpossible(ValueError):
    pass


def steiner_f_vector(l: int, m: int, r: int) -> IntSeq:
    """Face counts of S(l, m, r): all i-sets up to size l, then b * C(m, i) from the b blocks.

    Each i-subset with i < l lies in exactly C(r-i, l-i) / C(m-i, l-i)
    blocks, so those ratios must be integers.
    """
    if not 1 <= l <= m <= r:
        raise ValueError(f"need 1 <= l <= m <= r, got ({l}, {m}, {r})")
    for i in range(l):
        if comb(r - i, l - i) % comb(m - i, l - i):
            raise DesignImpossible(
                f"design impossible by counting: C({r - i},{l - i})/C({m - i},{l - i}) is not an integer"
            )
    b = comb(r, l) // comb(m, l)
    return IntSeq([comb(r, i) for i in range(l)] + [b * comb(m, i) for i in range(l, m + 1)])


def _bose(r: int) -> list[tuple[int, ...]]:
    n = r // 3
    half = (n + 1) // 2  # inverse of 2 mod the odd n
    pt = lambda x, i: x + n * i + 1
    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(n)]
    for i in range(3):
        for x in range(n):
            for y in range(x + 1, n):
                blocks.append((pt(x, i), pt(y, i), pt((x + y) * half % n, (i + 1) % 3)))
    return blocks


def _skolem(r: int) -> list[tuple[int, ...]]:
    k = (r - 1) // 6
    n = 2 * k
    pt = lambda x, i: x + n * i + 1
    inf = r

    def op(x: int, y: int) -> int:
        s = (x + y) % n
        return s // 2 if s % 2 == 0 else (s + n - 1) // 2

    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(k)]
    for i in range(3):
        for x in range(k):
            blocks.append((inf, pt(x + k, i), pt(x, (i + 1) % 3)))
        for x in range(n):
            for y in range(x + 1, n):
                blocks.append((pt(x, i), pt(y, i), pt(op(x, y), (i + 1) % 3)))
    return blocks


def construct_sts(r: int) -> BlockDesign:
    """A Steiner triple system on r points, r = 1 or 3 mod 6 (Bose for 3, Skolem for 1)."""
    if r == 1:
        raise ValueError("no triples fit on one point")
    if r % 6 == 3:
        blocks = _bose(r)
    elif r % 6 == 1:
        blocks = _skolem(r)
    else:
        raise ValueError(f"Steiner triple systems need r = 1 or 3 mod 6, got {r}")
    return BlockDesign(2, 3, r, tuple(blocks))


def design_to_monomials(D: BlockDesign) -> tuple[Monomial, ...]:
    out = []
    for b in D.blocks:
        exps = [0] * b[-1]
        for v in b:
            exps[v - 1] = 1
        out.append(Monomial(exps))
    return tuple(sorted(out))


def design_from_monomials(gens: Iterable[Monomial], l: int = 2, r: int | None = None) -> BlockDesign:
    gens = list(gens)
    if not gens:
        raise ValueError("no generators")
    for g in gens:
        if not g.is_squarefree:
            raise ValueError(f"{g} is not squarefree")
    degrees = {g.degree for g in gens}
    if len(degrees) != 1:
        raise ValueError("generators have mixed degrees")
    if r is None:
        r = max(g.nvars for g in gens)
    blocks = tuple(tuple(sorted(v + 1 for v in g.support)) for g in gens)
    return BlockDesign(l, degrees.pop(), r, blocks)


def design_f_vector(D: BlockDesign) -> IntSeq:
    return h_vector(divisor_closure(design_to_monomials(D)))


def projective_plane_sequence(q: int) -> IntSeq:
    """f-vector of a would-be plane of order q, the design S(2, q+1, q^2+q+1)."""
    if q < 2:
        raise ValueError("q must be at least 2")
    return steiner_f_vector(2, q + 1, q * q + q + 1)


class BRC(str, Enum):
    FAILS = "fails"
    PASSES = "passes"
    NOT_APPLICABLE = "not_applicable"


def is_sum_of_two_squares(n: int) -> bool:
    """Every prime 3 mod 4 divides n to an even power."""
    if n < 0:
        return False
    if n == 0:
        return True
    return all(e % 2 == 0 for p, e in factorint(n).items() if p % 4 == 3)


def brc_screen(q: int) -> BRC:
    """Bruck-Ryser-Chowla: for q = 1, 2 mod 4 a plane of order q needs q to be a sum of two squares."""
    if q < 2:
        raise ValueError("q must be at least 2")
    if q % 4 not in (1, 2):
        return BRC.NOT_APPLICABLE
    return BRC.PASSES if is_sum_of_two_squares(q) else BRC.FAILS


def is_prime_power(q: int) -> bool:
    return q > 1 and len(factorint(q)) == 1


def count_labeled_sts(r: int) -> int:
    """Number of distinct triple systems on the labeled points 1..r, by exhaustive search."""
    if r not in (3, 7, 9):
        raise ValueError("count_labeled_sts supports r in {3, 7, 9}")
    pair_bit = {}
    for a, b in combinations(range(r), 2):
        pair_bit[a, b] = 1 << len(pair_bit)
    full = (1 << len(pair_bit)) - 1
    triple_mask = {}
    for a, b, c in combinations(range(r), 3):
        triple_mask[a, b, c] = pair_bit[a, b] | pair_bit[a, c] | pair_bit[b, c]
    # candidate triples for each pair (a, b), indexed by the pair's bit
    by_pair: dict[int, list[int]] = {}
    for (a, b, c), m in triple_mask.items():
        for p in ((a, b), (a, c), (b, c)):
            by_pair.setdefault(pair_bit[p], []).append(m)

    def rec(covered: int) -> int:
        if covered == full:
            return 1
        free = ~covered & full
        low = free & -free
        total = 0
        for m in by_pair[low]:
            if not m & covered:
                total += rec(covered | m)
        return total

    return rec(0)
