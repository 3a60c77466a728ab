"""Monomials and monomial order ideals.

A monomial is an exponent vector.  Trailing zero exponents are dropped on
construction, so ``x1`` is the same monomial in every ambient ring and
padding is implicit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Iterable, Iterator

from .sequences import IntSeq

_FACTOR = re.compile(r"^\s*[A-Za-z]+(\d+)\s*(?:\^\s*(\d+))?\s*$")

# canonical_form enumerates all permutations up to this many variables
PERMUTATION_LIMIT = 8


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple[int, ...]
    degree: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        exps = [int(a) for a in self.exponents]
        if any(a < 0 for a in exps):
            raise ValueError(f"negative exponent in {exps}")
        while exps and exps[-1] == 0:
            exps.pop()
        object.__setattr__(self, "exponents", tuple(exps))
        object.__setattr__(self, "degree", sum(exps))

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Parse ``x1^3*x2^2*x3``; the caret is optional for exponent 1 and ``1`` is the unit."""
        text = text.strip()
        if text == "1":
            return cls(())
        exps: dict[int, int] = {}
        for factor in text.split("*"):
            m = _FACTOR.match(factor)
            if not m or int(m.group(1)) < 1:
                raise ValueError(f"bad monomial factor {factor!r} in {text!r}")
            idx = int(m.group(1)) - 1
            exps[idx] = exps.get(idx, 0) + int(m.group(2) or 1)
        width = max(exps) + 1
        return cls(tuple(exps.get(i, 0) for i in range(width)))

    def format(self, var: str = "x") -> str:
        parts = []
        for i, a in enumerate(self.exponents):
            if a == 1:
                parts.append(f"{var}{i + 1}")
            elif a > 1:
                parts.append(f"{var}{i + 1}^{a}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.format()

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def exponent(self, i: int) -> int:
        return self.exponents[i] if i < len(self.exponents) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if n < len(self.exponents):
            raise ValueError(f"{self} needs more than {n} variables")
        return self.exponents + (0,) * (n - len(self.exponents))

    def divides(self, other: "Monomial") -> bool:
        return len(self.exponents) <= len(other.exponents) and all(
            a <= b for a, b in zip(self.exponents, other.exponents)
        )

    def __mul__(self, other: "Monomial") -> "Monomial":
        n = max(self.nvars, other.nvars)
        return Monomial(tuple(a + b for a, b in zip(self.padded(n), other.padded(n))))

    def quotient(self, divisor: "Monomial") -> "Monomial":
        if not divisor.divides(self):
            raise ValueError(f"{divisor} does not divide {self}")
        d = divisor.padded(self.nvars)
        return Monomial(tuple(a - b for a, b in zip(self.exponents, d)))

    @property
    def is_squarefree(self) -> bool:
        return all(a <= 1 for a in self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, a in enumerate(self.exponents) if a)

    def shifted(self, offset: int) -> "Monomial":
        """Same monomial with every variable index moved up by ``offset``."""
        return Monomial((0,) * offset + self.exponents)

    def permuted(self, perm: tuple[int, ...]) -> "Monomial":
        """Apply the variable permutation ``i -> perm[i]``."""
        out = [0] * len(perm)
        for i, a in enumerate(self.padded(len(perm))):
            out[perm[i]] = a
        return Monomial(tuple(out))


def monomials_of_degree(nvars: int, d: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors of degree ``d`` in ``nvars`` variables, ascending lex order."""
    if nvars == 0:
        if d == 0:
            yield ()
        return
    if nvars == 1:
        yield (d,)
        return
    for a in range(d + 1):
        for rest in monomials_of_degree(nvars - 1, d - a):
            yield (a,) + rest


@dataclass(frozen=True)
class OrderIdeal:
    """A finite downward-closed set of monomials, stored degree by degree."""

    strata: tuple[frozenset[Monomial], ...]

    def __post_init__(self) -> None:
        if not self.strata or self.strata[0] != frozenset({Monomial(())}):
            raise ValueError("stratum 0 of an order ideal must be {1}")

    @cached_property
    def members(self) -> frozenset[Monomial]:
        return frozenset().union(*self.strata)

    @property
    def socle_degree(self) -> int:
        return len(self.strata) - 1

    @cached_property
    def nvars(self) -> int:
        return max((m.nvars for m in self.members), default=0)

    @cached_property
    def generators(self) -> frozenset[Monomial]:
        """Members dividing no other member."""
        gens = set()
        for d, stratum in enumerate(self.strata):
            above = self.strata[d + 1] if d + 1 < len(self.strata) else frozenset()
            for m in stratum:
                if not any(_times_var(m, i) in above for i in range(self.nvars)):
                    gens.add(m)
        return frozenset(gens)

    def degree(self, d: int) -> list[Monomial]:
        """Sorted monomials of degree ``d`` (empty outside the ideal's range)."""
        if 0 <= d < len(self.strata):
            return sorted(self.strata[d])
        return []

    def __contains__(self, m: object) -> bool:
        return isinstance(m, Monomial) and m.degree < len(self.strata) and m in self.strata[m.degree]

    def __len__(self) -> int:
        return sum(len(s) for s in self.strata)


def _times_var(m: Monomial, i: int) -> Monomial:
    exps = list(m.padded(max(m.nvars, i + 1)))
    exps[i] += 1
    return Monomial(tuple(exps))


def _drop_var(m: Monomial, i: int) -> Monomial:
    exps = list(m.exponents)
    exps[i] -= 1
    return Monomial(tuple(exps))


def divisor_closure(gens: Iterable[Monomial]) -> OrderIdeal:
    """Smallest order ideal containing ``gens``, built top-down by single-variable decrements."""
    gens = set(gens)
    if not gens:
        raise ValueError("divisor_closure needs at least one generator")
    e = max(m.degree for m in gens)
    strata: list[set[Monomial]] = [set() for _ in range(e + 1)]
    for m in gens:
        strata[m.degree].add(m)
    for d in range(e, 0, -1):
        below = strata[d - 1]
        for m in strata[d]:
            for i, a in enumerate(m.exponents):
                if a:
                    below.add(_drop_var(m, i))
    return OrderIdeal(tuple(frozenset(s) for s in strata))


def h_vector(X: OrderIdeal) -> IntSeq:
    return IntSeq(len(s) for s in X.strata)


def is_pure(X: OrderIdeal) -> bool:
    return len({m.degree for m in X.generators}) == 1


def support(gens: Iterable[Monomial]) -> int:
    used: set[int] = set()
    for m in gens:
        used |= m.support
    return len(used)


def _support_matrix(gens: Iterable[Monomial]) -> list[tuple[int, ...]]:
    gens = list(gens)
    cols = sorted(set().union(*(m.support for m in gens)))
    return [tuple(m.exponent(c) for c in cols) for m in gens]


def min_image(rows: list[tuple[int, ...]], target: list[tuple[int, ...]] | None = None):
    """Lexicographically least sorted image of ``rows`` under column permutations.

    Partition backtracking: after matching the first j rows of the image the
    admissible permutations form a product of cell bijections, and the least
    image of any remaining row under that coset is computed directly by
    sorting within cells.  Only branches achieving the level minimum survive.

    With ``target`` given, returns ``True`` as soon as some image is
    lexicographically smaller than ``target``, else ``False``.
    """
    if not rows:
        return False if target is not None else ()
    width = len(rows[0])
    start = (frozenset(), ((tuple(range(width)), tuple(range(width))),))
    states = {start}
    image = []
    for level in range(len(rows)):
        best = None
        hits = []
        for used, cells in states:
            for k, row in enumerate(rows):
                if k in used:
                    continue
                vec = [0] * width
                for src, tgt in cells:
                    for pos, val in zip(tgt, sorted(row[c] for c in src)):
                        vec[pos] = val
                vec = tuple(vec)
                if best is None or vec < best:
                    best = vec
                    hits = [(used, cells, k, row)]
                elif vec == best:
                    hits.append((used, cells, k, row))
        if target is not None:
            if best < target[level]:
                return True
            if best > target[level]:
                return False
        image.append(best)
        nxt = set()
        for used, cells, k, row in hits:
            refined = []
            for src, tgt in cells:
                for v in sorted({row[c] for c in src}):
                    refined.append(
                        (tuple(c for c in src if row[c] == v), tuple(p for p in tgt if best[p] == v))
                    )
            nxt.add((used | {k}, tuple(sorted(refined, key=lambda cell: cell[1]))))
        states = nxt
    return False if target is not None else tuple(image)


def canonical_form(gens: Iterable[Monomial], method: str = "auto") -> tuple[Monomial, ...]:
    """Orbit representative under variable permutations.

    Unused variables are dropped first; the representative is the least
    sorted exponent matrix over all permutations of the remaining columns.
    ``method`` is ``"permutations"`` (full enumeration), ``"backtrack"``
    (partition backtracking) or ``"auto"`` (enumeration up to
    ``PERMUTATION_LIMIT`` variables).  Both methods are exact.
    """
    rows = _support_matrix(gens)
    if not rows:
        return ()
    width = len(rows[0])
    if method == "auto":
        method = "permutations" if width <= PERMUTATION_LIMIT else "backtrack"
    if method == "permutations":
        best = None
        for perm in permutations(range(width)):
            img = sorted(tuple(row[perm[p]] for p in range(width)) for row in rows)
            if best is None or img < best:
                best = img
        image = best
    elif method == "backtrack":
        image = min_image(rows)
    else:
        raise ValueError(f"unknown method {method!r}")
    return tuple(Monomial(v) for v in image)


def parse_generators(text: str) -> list[Monomial]:
    """One monomial per line; ``#`` starts a comment."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(Monomial.parse(line))
    return out


def format_generators(gens: Iterable[Monomial]) -> str:
    return "".join(f"{m}\n" for m in sorted(gens))
