"""Finite groups as Cayley tables and the left-multiplication action on k-sets."""
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import gcd

import numpy as np

from magma_forge import caps
from magma_forge.core.ksets import canonical, colex_key, ksets
from magma_forge.errors import BadMultiplier, GroupAxiomError, NotASubgroup
from magma_forge.utils.helpers import logger


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    table: np.ndarray
    identity: int
    inverse: tuple
    name: str = "group"
    labels: tuple = field(default=None, repr=False)

    def __post_init__(self):
        table = np.ascontiguousarray(self.table, dtype=np.int64)
        table.flags.writeable = False
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "_hash", hash((self.order, self.identity, table.tobytes())))

    def mul(self, a, b):
        return int(self.table[a, b])

    def inv(self, a):
        return self.inverse[a]

    def translate(self, s, U):
        """sU as a canonical k-set."""
        return canonical(self.table[s, list(U)].tolist())

    def elements(self):
        return range(self.order)

    @cached_property
    def is_abelian(self):
        return bool(np.array_equal(self.table, self.table.T))

    def label(self, a):
        return self.labels[a] if self.labels else str(a)

    def __eq__(self, other):
        return (
            isinstance(other, FiniteGroup)
            and self.identity == other.identity
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self):
        return self._hash


def make_group(table, identity=None, name="group", labels=None):
    """Cayley 표 검증 후 그룹 생성"""
    table = np.asarray(table, dtype=np.int64)
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] < 1:
        raise GroupAxiomError(f"group table must be square, got shape {table.shape}")
    m = table.shape[0]
    if ((table < 0) | (table >= m)).any():
        raise GroupAxiomError("group table entry outside the universe")
    elements = np.arange(m)
    if identity is None:
        found = [e for e in range(m) if np.array_equal(table[e], elements)]
        if not found:
            raise GroupAxiomError("no identity element")
        identity = found[0]
    if not (np.array_equal(table[identity], elements) and np.array_equal(table[:, identity], elements)):
        raise GroupAxiomError(f"{identity} is not a two-sided identity")
    inverse = []
    for a in range(m):
        right = np.nonzero(table[a] == identity)[0]
        if right.size != 1 or table[right[0], a] != identity:
            raise GroupAxiomError(f"element {a} has no two-sided inverse", a)
        inverse.append(int(right[0]))
    lhs = table[table[:, :, None], elements[None, None, :]]
    rhs = table[elements[:, None, None], table[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        raise GroupAxiomError("table is not associative", tuple(int(v) for v in bad[0]))
    return FiniteGroup(m, table, int(identity), tuple(inverse), name, labels)


def cyclic_group(m):
    elements = np.arange(m)
    return make_group((elements[:, None] + elements[None, :]) % m, 0, name=f"Z{m}")


def direct_sum(parts):
    """Mixed-radix encoding, first summand most significant."""
    if not parts:
        raise GroupAxiomError("direct sum of no groups")
    orders = tuple(p.order for p in parts)
    size = int(np.prod(orders))
    caps.check("direct sum table", size * size)
    coords = np.unravel_index(np.arange(size), orders)
    products = tuple(p.table[c[:, None], c[None, :]] for p, c in zip(parts, coords))
    table = np.ravel_multi_index(products, orders)
    identity = int(np.ravel_multi_index(tuple(p.identity for p in parts), orders))
    name = "+".join(p.name for p in parts)
    return make_group(table, identity, name=name)


def semidirect_cyclic(m, k, t):
    """Z_m x| Z_k with (a,i)(b,j) = (a + t^i b, i + j); (a,i) is element i*m + a."""
    if gcd(t, m) != 1 or pow(t, k, m) != 1 % m:
        raise BadMultiplier(f"{t} is not a unit of order dividing {k} modulo {m}")
    size = m * k
    idx = np.arange(size)
    a, i = idx % m, idx // m
    twist = np.array([pow(t, int(j), m) for j in range(k)])
    new_a = (a[:, None] + twist[i][:, None] * a[None, :]) % m
    new_i = (i[:, None] + i[None, :]) % k
    labels = tuple(_polynomial(int(pow(t, int(ii), m)), int(aa)) for aa, ii in zip(a, i))
    return make_group(new_i * m + new_a, 0, name=f"Z{m}x|Z{k}", labels=labels)


def _polynomial(c, b):
    head = "x" if c == 1 else f"{c}x"
    return head if b == 0 else f"{head}+{b}"


def polynomial_label(G, a):
    """Element of ``semidirect_cyclic`` written as the affine map cx+b."""
    return G.label(a)


@dataclass(frozen=True)
class OrbitFamily:
    k: int
    orbits: tuple  # each orbit is a tuple of k-sets in colex order

    @property
    def representatives(self):
        return tuple(orbit[0] for orbit in self.orbits)

    @cached_property
    def _lookup(self):
        return {U: i for i, orbit in enumerate(self.orbits) for U in orbit}

    def orbit_index(self, U):
        return self._lookup[canonical(U)]

    def __len__(self):
        return len(self.orbits)


def k_extension_orbits(G, k):
    orbits = []
    seen = set()
    for U in ksets(G.order, k):
        if U in seen:
            continue
        orbit = sorted({G.translate(s, U) for s in G.elements()}, key=colex_key)
        seen.update(orbit)
        orbits.append(tuple(orbit))
    logger.info(f"{G.name}: {len(orbits)} orbits on {k}-sets")
    return OrbitFamily(k, tuple(orbits))


def stabilizer_witness(G, k):
    """(s, U) with s != e and sU = U, or None when the k-extension is free."""
    others = [s for s in G.elements() if s != G.identity]
    for U in ksets(G.order, k):
        images = np.sort(G.table[np.ix_(others, U)], axis=1)
        hits = np.nonzero((images == np.array(U)).all(axis=1))[0]
        if hits.size:
            return others[int(hits[0])], U
    return None


def is_extension_free(G, k):
    return stabilizer_witness(G, k) is None


def element_order(G, a):
    x, n = a, 1
    while x != G.identity:
        x = G.mul(x, a)
        n += 1
    return n


def generated_subgroup(G, generators):
    members = {G.identity}
    frontier = [G.identity]
    generators = list(generators)
    while frontier:
        x = frontier.pop()
        for g in generators:
            y = G.mul(x, g)
            if y not in members:
                members.add(y)
                frontier.append(y)
    return frozenset(members)


def is_subgroup(G, S):
    S = set(S)
    if G.identity not in S:
        return False
    S_list = sorted(S)
    return bool(np.isin(G.table[np.ix_(S_list, S_list)], S_list).all())


def subgroups(G, cap=None):
    caps.check("group", G.order, caps.group_order if cap is None else cap)
    found = {generated_subgroup(G, [a]) for a in G.elements()}
    frontier = set(found)
    while frontier:
        joined = set()
        for H in frontier:
            for K in found:
                if H <= K or K <= H:
                    continue
                J = generated_subgroup(G, H | K)
                if J not in found:
                    joined.add(J)
        found |= joined
        frontier = joined
    result = sorted(found, key=lambda H: (len(H), sorted(H)))
    logger.info(f"{G.name}: {len(result)} subgroups")
    return result


def cosets(G, H):
    if not is_subgroup(G, H):
        raise NotASubgroup(f"{sorted(H)} is not a subgroup")
    H = sorted(H)
    seen = set()
    result = []
    for a in G.elements():
        if a in seen:
            continue
        coset = frozenset(G.table[a, H].tolist())
        seen |= coset
        result.append(coset)
    return result


def is_normal(G, H):
    if not is_subgroup(G, H):
        raise NotASubgroup(f"{sorted(H)} is not a subgroup")
    H = frozenset(H)
    return all(
        frozenset(G.mul(G.mul(b, h), G.inv(b)) for h in H) == H for b in G.elements()
    )


def left_translations(G):
    return [tuple(int(x) for x in G.table[a]) for a in G.elements()]


def conjugation(G, b):
    return tuple(int(x) for x in G.table[G.table[b], G.inverse[b]])


def inner_automorphisms(G):
    seen = []
    for b in G.elements():
        c = conjugation(G, b)
        if c not in seen:
            seen.append(c)
    return seen


def _generators(G):
    gens = []
    span = frozenset([G.identity])
    for a in G.elements():
        if a not in span:
            gens.append(a)
            span = generated_subgroup(G, gens)
    return gens


def _extend_homomorphism(G, gens, images):
    phi = np.full(G.order, -1, dtype=np.int64)
    phi[G.identity] = G.identity
    frontier = [G.identity]
    while frontier:
        x = frontier.pop()
        for g, h in zip(gens, images):
            y = G.mul(g, x)
            value = G.mul(h, int(phi[x]))
            if phi[y] < 0:
                phi[y] = value
                frontier.append(y)
            elif phi[y] != value:
                return None
    if len(set(phi.tolist())) != G.order:
        return None
    if not np.array_equal(phi[G.table], G.table[np.ix_(phi, phi)]):
        return None
    return tuple(int(v) for v in phi)


def group_automorphisms(G, cap=None):
    caps.check("group", G.order, caps.group_order if cap is None else cap)
    gens = _generators(G)
    orders = [element_order(G, a) for a in G.elements()]
    candidates = [[b for b in G.elements() if orders[b] == orders[g]] for g in gens]
    result = []
    for images in product(*candidates):
        phi = _extend_homomorphism(G, gens, images)
        if phi is not None:
            result.append(phi)
    result.sort()
    logger.info(f"{G.name}: {len(result)} group automorphisms")
    return result
