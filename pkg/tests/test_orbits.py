from itertools import combinations, permutations

import pytest

from oracles import monos
from pureo.orbits import OrbitPool


def brute_orbits(pool, r, max_size):
    """Orbit count of subsets (sizes 1..max_size) under variable permutations."""
    seen = set()
    count = 0
    for k in range(1, max_size + 1):
        for s in combinations(pool, k):
            key = frozenset(s)
            if key in seen:
                continue
            count += 1
            for p in permutations(range(r)):
                seen.add(frozenset(tuple(v[p[i]] for i in range(r)) for v in s))
    return count


def dfs(pool: OrbitPool, max_size: int):
    out = []

    def rec(state, last, chosen):
        if chosen:
            out.append(tuple(chosen))
        if len(chosen) == max_size:
            return
        for j in range(last + 1, len(pool)):
            st = pool.extend(state, j)
            if st is not None:
                chosen.append(j)
                rec(st, j, chosen)
                chosen.pop()

    rec(pool.root(), -1, [])
    return out


@pytest.mark.parametrize("r,e,k", [(2, 3, 4), (3, 2, 6), (3, 3, 4), (4, 2, 4), (4, 1, 4), (5, 1, 5)])
@pytest.mark.parametrize("tables", [True, False])
def test_one_representative_per_orbit(r, e, k, tables):
    vecs = monos(r, e)
    pool = OrbitPool(vecs, r, tables=tables)
    reps = dfs(pool, k)
    assert len(reps) == brute_orbits(vecs, r, k)
    for rep in reps:
        assert pool.is_canonical(rep)


def test_tables_and_backtracking_agree_node_by_node():
    vecs = monos(4, 3)
    a = dfs(OrbitPool(vecs, 4, tables=True), 3)
    b = dfs(OrbitPool(vecs, 4, tables=False), 3)
    assert a == b


def test_representative_is_lex_least_in_orbit():
    vecs = monos(3, 3)
    pool = OrbitPool(vecs, 3)
    for rep in dfs(pool, 3):
        members = [pool.vectors[i] for i in rep]
        for p in permutations(range(3)):
            image = sorted(pool.index[tuple(v[p[i]] for i in range(3))] for v in members)
            assert tuple(image) >= rep


def test_pool_must_be_symmetric():
    with pytest.raises(ValueError):
        OrbitPool([(2, 0), (1, 1)], 2, tables=True).extend(((1 << 0), 0), 1)
