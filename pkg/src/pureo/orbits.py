"""Orderly generation of subsets of a monomial pool up to variable permutation.

Pool items are exponent vectors in ascending lex order, and subsets are
compared as sorted index tuples.  A subset is *canonical* when it is the least
member of its orbit under the symmetric group on the variables.  Dropping the
largest element of a canonical subset leaves a canonical subset, so a
depth-first search that only appends larger indices and discards
non-canonical nodes visits exactly one representative per orbit.

Two canonicity tests are available.  For few variables every permutation is
tabulated and the image of the current subset is tracked as a bitmask per
permutation, so a test is one OR and one compare per permutation.  Beyond
``PERM_TABLE_LIMIT`` variables the test runs partition backtracking
(:func:`pureo.monomials.min_image`) on the subset itself.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable

from .monomials import min_image

PERM_TABLE_LIMIT = 6


class OrbitPool:
    def __init__(self, vectors: Iterable[tuple[int, ...]], nvars: int, *, tables: bool | None = None):
        self.vectors = sorted(set(vectors))
        self.nvars = nvars
        self.index = {v: i for i, v in enumerate(self.vectors)}
        if any(len(v) != nvars for v in self.vectors):
            raise ValueError("pool vectors must all have nvars entries")
        if tables is None:
            tables = nvars <= PERM_TABLE_LIMIT
        self._use_tables = tables
        self._table_cache: list[list[int]] | None = None

    def __len__(self) -> int:
        return len(self.vectors)

    def _build_tables(self) -> list[list[int]]:
        tables = []
        for perm in permutations(range(self.nvars)):
            if perm == tuple(range(self.nvars)):
                continue
            row = []
            for v in self.vectors:
                img = [0] * self.nvars
                for i, a in enumerate(v):
                    img[perm[i]] = a
                try:
                    row.append(1 << self.index[tuple(img)])
                except KeyError:
                    raise ValueError("pool is not closed under variable permutations") from None
            tables.append(row)
        return tables

    @property
    def _tables(self) -> list[list[int]]:
        # built on first use, since searches over singletons never need them
        if self._table_cache is None:
            self._table_cache = self._build_tables()
        return self._table_cache

    def root(self):
        return (0, ())

    def extend(self, state, j: int):
        """State for ``subset + {j}`` (j larger than every member), or None if not canonical."""
        mask, aux = state
        mask |= 1 << j
        if not mask ^ (1 << j):
            # a single vector is least in its orbit iff its entries ascend
            v = self.vectors[j]
            return (mask, j) if all(a <= b for a, b in zip(v, v[1:])) else None
        if self._use_tables:
            if isinstance(aux, int):
                aux = [table[aux] for table in self._tables]
            images = []
            for img, table in zip(aux, self._tables):
                img |= table[j]
                diff = img ^ mask
                if diff and img & (diff & -diff):
                    return None
                images.append(img)
            return (mask, images)
        members = (aux, j) if isinstance(aux, int) else aux + (j,)
        rows = [self.vectors[i] for i in members]
        if min_image(rows, target=rows):
            return None
        return (mask, members)

    def is_canonical(self, indices: Iterable[int]) -> bool:
        """Canonicity of an arbitrary subset, checked from scratch."""
        rows = [self.vectors[i] for i in sorted(set(indices))]
        return not min_image(rows, target=rows)
