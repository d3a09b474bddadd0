"""k-sets of {0..m-1} as sorted tuples, ranked in colex order.

The rank of a k-set c_0 < ... < c_{k-1} is sum C(c_i, i+1) (combinatorial
number system), so colex order and rank order agree.
"""
from functools import lru_cache
from itertools import combinations
from math import comb


def canonical(elements):
    return tuple(sorted(set(elements)))


def colex_key(kset):
    return tuple(reversed(kset))


def colex_rank(kset):
    return sum(comb(c, i + 1) for i, c in enumerate(kset))


def colex_unrank(rank, k):
    out = []
    for i in range(k, 0, -1):
        c = i - 1
        while comb(c + 1, i) <= rank:
            c += 1
        out.append(c)
        rank -= comb(c, i)
    out.reverse()
    return tuple(out)


@lru_cache(maxsize=None)
def ksets(m, k):
    """All k-subsets of range(m) in colex order."""
    return tuple(sorted(combinations(range(m), k), key=colex_key))


def ksets_up_to(m, n):
    """Every k-set with 1 <= k <= n, ordered by (k, colex rank)."""
    out = []
    for k in range(1, min(n, m) + 1):
        out.extend(ksets(m, k))
    return out


def order_key(kset):
    return len(kset), colex_key(kset)


def format_kset(kset):
    return " ".join(str(u) for u in kset)
