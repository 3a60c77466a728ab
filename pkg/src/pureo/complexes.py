"""Simplicial complexes on labeled vertices, matroids and the f-to-h transform.

Faces are bitmasks over vertices 1..r (bit v-1 for vertex v).  f-vectors
store ``f_{-1} = 1`` (the empty face) at index 0, so ``f[i]`` counts faces
with i vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .monomials import Monomial, monomials_of_degree
from .orbits import OrbitPool
from .purity import PurityVerdict, SearchBudget, decide_pure
from .sequences import IntSeq

MATROID_VERTEX_CAP = 24


def _mask(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        if v < 1:
            raise ValueError(f"vertices are numbered from 1, got {v}")
        m |= 1 << (v - 1)
    return m


def _members(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets; non-maximal input faces are dropped."""

    r: int
    facets: tuple[int, ...]

    def __post_init__(self) -> None:
        masks = sorted(set(self.facets), key=lambda m: (-m.bit_count(), m))
        kept: list[int] = []
        for m in masks:
            if not any(m & k == m for k in kept):
                kept.append(m)
        used = 0
        for m in kept:
            used |= m
        if used >> self.r:
            raise ValueError(f"facet uses a vertex beyond {self.r}")
        if used != (1 << self.r) - 1:
            missing = _members(((1 << self.r) - 1) & ~used)
            raise ValueError(f"vertices {list(missing)} lie in no facet")
        object.__setattr__(self, "facets", tuple(sorted(kept)))

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], r: int | None = None) -> "SimplicialComplex":
        masks = [_mask(f) for f in facets]
        if r is None:
            r = max((m.bit_length() for m in masks), default=0)
        return cls(r, tuple(masks))

    def facet_lists(self) -> list[tuple[int, ...]]:
        return sorted(_members(m) for m in self.facets)

    @property
    def dimension(self) -> int:
        return max((m.bit_count() for m in self.facets), default=0) - 1

    def faces(self) -> set[int]:
        out: set[int] = set()
        for m in self.facets:
            out.update(_submasks(m))
        return out

    def restriction_facets(self, W: int) -> list[int]:
        """Maximal faces of the restriction to the vertex set ``W``."""
        cut = sorted({m & W for m in self.facets}, key=lambda m: -m.bit_count())
        kept: list[int] = []
        for m in cut:
            if not any(m & k == m for k in kept):
                kept.append(m)
        return kept

    def to_text(self) -> str:
        lines = [str(self.r)] + [" ".join(map(str, f)) for f in self.facet_lists()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SimplicialComplex":
        rows = [line.split("#", 1)[0].split() for line in text.splitlines()]
        rows = [row for row in rows if row]
        if not rows or len(rows[0]) != 1:
            raise ValueError("complex file must start with the vertex count")
        return cls.from_facets(([int(x) for x in row] for row in rows[1:]), int(rows[0][0]))

    def monomials(self) -> tuple[Monomial, ...]:
        """Facets as squarefree monomials."""
        out = []
        for m in self.facets:
            exps = [0] * self.r
            for v in _members(m):
                exps[v - 1] = 1
            out.append(Monomial(exps))
        return tuple(sorted(out))


def f_vector(D: SimplicialComplex) -> IntSeq:
    counts = [0] * (D.dimension + 2)
    for m in D.faces():
        counts[m.bit_count()] += 1
    return IntSeq(counts)


def is_pure_complex(D: SimplicialComplex) -> bool:
    return len({m.bit_count() for m in D.facets}) <= 1


@dataclass(frozen=True)
class MatroidCheck:
    ok: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_matroid(D: SimplicialComplex, cap: int = MATROID_VERTEX_CAP) -> MatroidCheck:
    """Restriction to every vertex subset is pure.

    Subsets are scanned by size, then lexicographically, and the first
    impure restriction is returned as the witness.  A non-pure complex
    fails with the full vertex set as witness.
    """
    if D.r > cap:
        raise ValueError(f"{D.r} vertices exceeds the cap of {cap}")
    if not is_pure_complex(D):
        return MatroidCheck(False, tuple(range(1, D.r + 1)))
    for size in range(2, D.r):
        for W in combinations(range(D.r), size):
            mask = sum(1 << v for v in W)
            sizes = {m.bit_count() for m in D.restriction_facets(mask)}
            if len(sizes) > 1:
                return MatroidCheck(False, tuple(v + 1 for v in W))
    return MatroidCheck(True)


def is_matroid_exchange(D: SimplicialComplex) -> bool:
    """Basis exchange: for facets B1, B2 and x in B1 - B2 some y in B2 - B1 makes B1 - x + y a facet."""
    if not is_pure_complex(D):
        return False
    bases = set(D.facets)
    for b1 in D.facets:
        for b2 in D.facets:
            rest = b2 & ~b1
            for x in _members(b1 & ~b2):
                base = b1 & ~(1 << (x - 1))
                if not any(base | (1 << (y - 1)) in bases for y in _members(rest)):
                    return False
    return True


def f_to_h(f: Iterable[int], d: int) -> IntSeq:
    """``h_k = sum_{i<=k} (-1)^(k-i) C(d-i, k-i) f_{i-1}`` for a (d-1)-dimensional complex."""
    f = tuple(f)
    if len(f) != d + 1:
        raise ValueError(f"f-vector of a complex of dimension {d - 1} needs {d + 1} entries, got {len(f)}")
    h = [sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1)) for k in range(d + 1)]
    h = IntSeq(h, raw=True)
    # trim trailing zeros; negative entries are kept as they are
    vals = list(h)
    while vals and vals[-1] == 0:
        vals.pop()
    return IntSeq(vals, raw=True) if any(v < 0 for v in vals) else IntSeq(vals)


def h_to_f(h: Iterable[int], d: int) -> IntSeq:
    """Inverse of :func:`f_to_h`: ``f_{i-1} = sum_{k<=i} C(d-k, i-k) h_k``."""
    h = tuple(h) + (0,) * (d + 1 - len(tuple(h)))
    if len(h) != d + 1:
        raise ValueError("h-vector longer than d + 1")
    return IntSeq([sum(comb(d - k, i - k) * h[k] for k in range(i + 1)) for i in range(d + 1)], raw=True)


def matroid_h_vector(D: SimplicialComplex) -> IntSeq:
    return f_to_h(f_vector(D), D.dimension + 1)


def stanley_check(D: SimplicialComplex, budget: SearchBudget | None = None) -> PurityVerdict:
    """Purity verdict for the h-vector of the matroid ``D``."""
    if not is_matroid(D):
        raise ValueError("complex is not a matroid")
    return decide_pure(matroid_h_vector(D), budget)


def stanley_reisner_nonfaces(D: SimplicialComplex) -> list[tuple[int, ...]]:
    """Inclusion-minimal vertex sets that are not faces."""
    faces = D.faces()
    out = []
    for mask in range(1, 1 << D.r):
        if mask in faces:
            continue
        if all(mask & ~(1 << (v - 1)) in faces for v in _members(mask)):
            out.append(_members(mask))
    return sorted(out, key=lambda s: (len(s), s))


def _complexes_of_rank(n: int, d: int) -> Iterator[SimplicialComplex]:
    """Pure (d-1)-dimensional complexes on exactly n vertices, one per isomorphism class."""
    pool = OrbitPool((v for v in monomials_of_degree(n, d) if max(v) <= 1), n)
    vectors = pool.vectors
    masks = [sum(1 << i for i, a in enumerate(v) if a) for v in vectors]
    full = (1 << n) - 1

    def rec(state, last: int, used: int, chosen: list[int]) -> Iterator[SimplicialComplex]:
        if used == full:
            yield SimplicialComplex(n, tuple(chosen))
        for j in range(last + 1, len(vectors)):
            st = pool.extend(state, j)
            if st is not None:
                chosen.append(masks[j])
                yield from rec(st, j, used | masks[j], chosen)
                chosen.pop()

    yield from rec(pool.root(), -1, 0, [])


@dataclass(frozen=True)
class MatroidRecord:
    complex: SimplicialComplex
    f: IntSeq
    h: IntSeq
    verdict: PurityVerdict | None

    def to_json(self) -> dict:
        return {
            "facets": [list(f) for f in self.complex.facet_lists()],
            "f": list(self.f),
            "h": list(self.h),
            "verdict": self.verdict.status.value if self.verdict else None,
        }


def enumerate_matroids(n_max: int, *, decide: bool = True, budget: SearchBudget | None = None) -> list[MatroidRecord]:
    """Loopless matroids on 1..n_max elements up to isomorphism, with h-vector verdicts.

    Candidates are all pure complexes from orderly generation; each is
    kept only if restriction purity holds, and basis exchange must agree.
    """
    out = []
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            for D in _complexes_of_rank(n, d):
                ok = bool(is_matroid(D))
                if ok != is_matroid_exchange(D):
                    raise AssertionError(f"matroid recognizers disagree on {D.facet_lists()}")
                if not ok:
                    continue
                f = f_vector(D)
                h = f_to_h(f, d)
                verdict = decide_pure(h, budget) if decide else None
                out.append(MatroidRecord(D, f, h, verdict))
    return out
