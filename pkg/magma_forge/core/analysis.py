"""Automorphisms, congruences and convex subgroups of finite magmas."""
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from magma_forge import caps
from magma_forge.core.construct import build_regular, is_chosen, require_admissible
from magma_forge.core.groups import conjugation, cosets, group_automorphisms, is_subgroup, subgroups
from magma_forge.core.lattice import FiniteLattice, antichain_lattice
from magma_forge.core.magma import isomorphisms
from magma_forge.errors import NotAChain, NotPermutation
from magma_forge.utils.helpers import logger


# 자기동형
def automorphisms(A, cap=None):
    caps.check("automorphism search", A.order, caps.aut_cap_for(A.arity) if cap is None else cap)
    found = sorted(isomorphisms(A, A))
    logger.info(f"Automorphism group of order {len(found)} on {A.order} elements")
    return found


def is_automorphism(A, phi):
    phi = np.asarray(phi, dtype=np.int64)
    if sorted(phi.tolist()) != list(range(A.order)):
        raise NotPermutation(f"{phi.tolist()} is not a permutation")
    return bool(np.array_equal(phi[A.cube], A.cube[np.ix_(*[phi] * A.arity)]))


def is_lambda_automorphism(G, n, lam, phi):
    """phi maps every chosen k-set to a chosen k-set."""
    return all(is_chosen(G, n, lam, [phi[u] for u in chosen]) for _, chosen in lam.choices)


def lambda_automorphisms(G, n, lam, cap=None):
    require_admissible(G.order, n)
    return [phi for phi in group_automorphisms(G, cap) if is_lambda_automorphism(G, n, lam, phi)]


def is_correlated(G, n, lam):
    return all(is_lambda_automorphism(G, n, lam, conjugation(G, b)) for b in G.elements())


def semidirect_automorphisms(G, maps):
    """The permutations x -> a * phi(x) for a in G and phi in maps."""
    return [tuple(int(v) for v in G.table[a, list(phi)]) for a in G.elements() for phi in maps]


# 분할
@dataclass(frozen=True)
class Partition:
    blocks: tuple  # sorted blocks, ordered by least element

    @classmethod
    def from_labels(cls, labels):
        groups = {}
        for x, label in enumerate(labels):
            groups.setdefault(int(label), []).append(x)
        return cls(tuple(sorted(tuple(b) for b in groups.values())))

    @classmethod
    def discrete(cls, m):
        return cls(tuple((x,) for x in range(m)))

    @classmethod
    def full(cls, m):
        return cls((tuple(range(m)),))

    @property
    def order(self):
        return sum(len(b) for b in self.blocks)

    @cached_property
    def labels(self):
        labels = np.empty(self.order, dtype=np.int64)
        for i, block in enumerate(self.blocks):
            labels[list(block)] = i
        return labels

    def refines(self, other):
        """Every block of self lies inside a block of other."""
        return all(len({int(other.labels[x]) for x in block}) == 1 for block in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __str__(self):
        return "".join("{" + " ".join(str(x) for x in block) + "}" for block in self.blocks)


class _UnionFind:
    def __init__(self, m):
        self.parent = list(range(m))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[max(rx, ry)] = min(rx, ry)
        return True

    def partition(self):
        return Partition.from_labels([self.find(x) for x in range(len(self.parent))])


def _close(A, uf, pairs):
    """Merge pairs and close under the operation, one argument position at a time."""
    cube = A.cube
    queue = list(pairs)
    while queue:
        x, y = queue.pop()
        if not uf.union(x, y):
            continue
        for axis in range(A.arity):
            left = np.take(cube, x, axis=axis).reshape(-1)
            right = np.take(cube, y, axis=axis).reshape(-1)
            differ = left != right
            if differ.any():
                queue.extend(zip(left[differ].tolist(), right[differ].tolist()))
    return uf.partition()


def principal_congruence(A, a, b):
    return _close(A, _UnionFind(A.order), [(a, b)] if a != b else [])


def join(A, P, Q):
    uf = _UnionFind(A.order)
    for part in (P, Q):
        for block in part.blocks:
            for x in block[1:]:
                uf.union(block[0], x)
    return uf.partition()


def is_congruence(A, P):
    labels = P.labels
    cube = A.cube
    for block in P.blocks:
        for x in block[1:]:
            for axis in range(A.arity):
                left = labels[np.take(cube, block[0], axis=axis)]
                right = labels[np.take(cube, x, axis=axis)]
                if not np.array_equal(left, right):
                    return False
    return True


def all_congruences(A, cap=None):
    m = A.order
    caps.check("congruence search", m, caps.congruence_order if cap is None else cap)
    principals = {principal_congruence(A, a, b) for a in range(m) for b in range(a + 1, m)}
    found = {Partition.discrete(m), Partition.full(m)} | principals
    frontier = set(found)
    while frontier:
        new = set()
        for P in frontier:
            for Q in principals:
                J = join(A, P, Q)
                if J not in found:
                    new.add(J)
        found |= new
        frontier = new
    elements = sorted(found, key=lambda P: (-len(P), P.blocks))
    L = FiniteLattice.from_order(elements, lambda P, Q: P.refines(Q))
    logger.info(f"Congruence lattice of order-{m} magma has {len(L)} elements")
    return L


def is_simple(A, cap=None):
    m = A.order
    caps.check("congruence search", m, caps.congruence_order if cap is None else cap)
    if m < 2:
        return False
    return all(len(principal_congruence(A, a, b)) == 1 for a in range(m) for b in range(a + 1, m))


# 볼록 부분군
def coset_partition(G, H):
    return Partition(tuple(sorted(tuple(sorted(c)) for c in cosets(G, H))))


def lambda_convex_subgroups(G, n, lam):
    A = build_regular(G, n, lam)
    convex = [H for H in subgroups(G) if is_congruence(A, coset_partition(G, H))]
    logger.info(f"{G.name}: {len(convex)} convex subgroups")
    return convex


def is_chain(subgroup_list):
    ordered = sorted(subgroup_list, key=len)
    return all(a <= b for a, b in zip(ordered, ordered[1:]))


def characteristic_under(H, maps):
    H = frozenset(H)
    return all(frozenset(phi[h] for h in H) == H for phi in maps)


def congruence_blocks_are_cosets(G, A):
    for P in all_congruences(A).elements:
        for block in P.blocks:
            shifted = {G.mul(G.inverse[block[0]], x) for x in block}
            if not is_subgroup(G, shifted):
                return False
    return True


@dataclass(frozen=True)
class CosetPoset:
    cosets: tuple  # frozensets, ordered by (size, least element)

    def less_equal(self, a, b):
        return a <= b


def coset_poset_and_antichain_lattice(G, convex):
    ordered = sorted({frozenset(H) for H in convex}, key=len)
    if not is_chain(ordered):
        raise NotAChain("convex subgroups are not totally ordered by inclusion")
    chain = {frozenset([G.identity]), frozenset(G.elements()), *ordered}
    members = set()
    for H in chain:
        members.update(cosets(G, H))
    poset = CosetPoset(tuple(sorted(members, key=lambda c: (len(c), min(c)))))
    return poset, antichain_lattice(poset.cosets, poset.less_equal)
