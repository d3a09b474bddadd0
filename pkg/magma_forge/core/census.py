"""Exact counts of (P)RPS magmas and the brute-force enumerations that check them."""
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from math import comb, prod

import sympy

from magma_forge import caps
from magma_forge.core.construct import build_regular, enumerate_sign_functions, require_admissible
from magma_forge.core.groups import cyclic_group
from magma_forge.core.ksets import ksets, ksets_up_to
from magma_forge.core.magma import Pointing, from_pointing, isomorphic
from magma_forge.errors import CapExceeded, NotPrime
from magma_forge.utils.helpers import logger


# 공식
def prps_factors(m, n):
    """Per k, the number of ordered regular partitions of the k-sets into m blocks."""
    require_admissible(m, n)
    factors = []
    for k in range(1, n + 1):
        s = comb(m, k)
        block = s // m
        factors.append(prod(comb(s - ell * block, block) for ell in range(m)))
    return factors


def count_prps(m, n):
    return prod(prps_factors(m, n))


def regular_rps_factors(m, n):
    require_admissible(m, n)
    return [k ** (comb(m, k) // m) for k in range(1, n + 1)]


def count_regular_rps(m, n):
    return prod(regular_rps_factors(m, n))


def count_rps_factor(m, k):
    """Ways to point every k-set at a member so each element is chosen C(m,k)/m times."""
    sets = ksets(m, k)
    quota = comb(m, k) // m
    caps.check("coefficient state space", len(sets) * (quota + 1) ** m)
    # left[i][u]: sets at positions >= i containing u
    left = [[0] * m for _ in range(len(sets) + 1)]
    for i in range(len(sets) - 1, -1, -1):
        left[i] = list(left[i + 1])
        for u in sets[i]:
            left[i][u] += 1

    @lru_cache(maxsize=None)
    def ways(i, remaining):
        if i == len(sets):
            return 1
        total = 0
        for u in sets[i]:
            if remaining[u] == 0:
                continue
            after = remaining[:u] + (remaining[u] - 1,) + remaining[u + 1:]
            if all(after[v] <= left[i + 1][v] for v in sets[i]):
                total += ways(i + 1, after)
        return total

    return ways(0, (quota,) * m)


def rps_factors(m, n):
    require_admissible(m, n)
    return [count_rps_factor(m, k) for k in range(1, n + 1)]


def count_rps(m, n):
    # strata are pointed independently, so the count is a product over k
    return prod(rps_factors(m, n))


def count_iso_classes_max_arity_cyclic(p):
    if p < 3 or not sympy.isprime(p):
        raise NotPrime(f"{p} is not an odd prime")
    return prod(k ** (comb(p, k) // p - 1) for k in range(1, p))


# 전수 탐색 오라클
def _quotas_integral(m, n):
    return m > n and all(comb(m, k) % m == 0 for k in range(1, n + 1))


def _walk(m, n, conservative, prefix=(), budget=None):
    """Depth-first search over pointings with per-(k, element) quotas; yields winner tuples."""
    sets = ksets_up_to(m, n)
    remaining = [[comb(m, k) // m] * m for k in range(1, n + 1)]
    left = [[0] * m for _ in range(len(sets) + 1)]
    for i in range(len(sets) - 1, -1, -1):
        left[i] = list(left[i + 1])
        if i + 1 < len(sets) and len(sets[i + 1]) != len(sets[i]):
            left[i] = [0] * m
        for u in sets[i]:
            left[i][u] += 1
    limit = caps.table if budget is None else budget
    visited = [0]
    winners = list(prefix)
    for U, w in zip(sets, prefix):
        remaining[len(U) - 1][w] -= 1

    def descend(i):
        visited[0] += 1
        if visited[0] > limit:
            raise CapExceeded(f"search visited more than {limit} nodes")
        if i == len(sets):
            yield tuple(winners)
            return
        U = sets[i]
        quota = remaining[len(U) - 1]
        same_k_next = i + 1 < len(sets) and len(sets[i + 1]) == len(U)
        for w in (U if conservative else range(m)):
            if quota[w] == 0:
                continue
            quota[w] -= 1
            ok = True
            if conservative:
                after = left[i + 1] if same_k_next else [0] * m
                ok = all(quota[v] <= after[v] for v in U)
            if ok:
                winners.append(w)
                yield from descend(i + 1)
                winners.pop()
            quota[w] += 1

    return descend(len(prefix))


def _count_branch(args):
    m, n, conservative, prefix, budget = args
    return sum(1 for _ in _walk(m, n, conservative, prefix, budget))


def _brute_count(m, n, conservative, workers):
    if not _quotas_integral(m, n):
        return 0
    if not workers or workers <= 1:
        return sum(1 for _ in _walk(m, n, conservative))
    tasks = [(m, n, conservative, head, caps.table) for head in _branch_prefixes(m, n, conservative)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_branch, tasks, chunksize=max(1, len(tasks) // (4 * workers))))


def _branch_prefixes(m, n, conservative):
    # branch on the first set that has a real choice
    sets = ksets_up_to(m, n)
    head = [] if not conservative else [u for (u,) in sets[:m]]
    i = len(head)
    if i >= len(sets):
        return [tuple(head)]
    options = sets[i] if conservative else range(m)
    return [tuple(head + [w]) for w in options]


def brute_enumerate_prps(m, n, workers=None):
    count = _brute_count(m, n, conservative=False, workers=workers)
    logger.info(f"Brute-force PRPS({m},{n}) count: {count}")
    return count


def brute_enumerate_rps(m, n, workers=None):
    count = _brute_count(m, n, conservative=True, workers=workers)
    logger.info(f"Brute-force RPS({m},{n}) count: {count}")
    return count


def iter_prps_magmas(m, n, limit=None):
    yield from _iter_magmas(m, n, False, limit)


def iter_rps_magmas(m, n, limit=None):
    yield from _iter_magmas(m, n, True, limit)


def _iter_magmas(m, n, conservative, limit):
    if not _quotas_integral(m, n):
        return
    for count, winners in enumerate(_walk(m, n, conservative)):
        if limit is not None and count >= limit:
            return
        yield from_pointing(Pointing(m, n, winners))


def enumerate_regular_tables(G, n):
    """G_n(lambda) for every sign function lambda of G."""
    return [build_regular(G, n, lam) for lam in enumerate_sign_functions(G, n)]


def brute_iso_classes_max_arity_cyclic(p):
    """Isomorphism classes among the magmas (Z_p)_{p-1}(lambda), found by pairwise search."""
    if p < 3 or not sympy.isprime(p):
        raise NotPrime(f"{p} is not an odd prime")
    representatives = []
    for A in enumerate_regular_tables(cyclic_group(p), p - 1):
        if not any(isomorphic(A, B) is not None for B in representatives):
            representatives.append(A)
    return len(representatives)
