"""Pointed hypertournaments: every k-set (1 <= k <= n) points at one of its members."""
from dataclasses import dataclass
from math import comb

import numpy as np

from magma_forge.core.arithmetic import admissible, next_prime_after
from magma_forge.core.construct import build_regular, sign_function, obverse_index
from magma_forge.core.groups import cyclic_group, direct_sum
from magma_forge.core.ksets import canonical, ksets, ksets_up_to
from magma_forge.core.magma import (
    FiniteMagma,
    Pointing,
    classify,
    extract_pointing,
    from_pointing,
    tuple_array,
)
from magma_forge.errors import (
    ArityNot2,
    BadArity,
    BadModulus,
    ConflictingConstraints,
    NotEssentiallyPolyadic,
    NotHypertournamentMagma,
)
from magma_forge.utils.helpers import logger


@dataclass(frozen=True)
class PointedHypertournament:
    order: int
    arity: int
    pointing: Pointing

    def __post_init__(self):
        for edge, w in self.pointing.items():
            if w not in edge:
                raise NotHypertournamentMagma(f"edge {edge} points outside itself at {w}", edge)

    def winner(self, edge):
        return self.pointing[canonical(edge)]

    def edges(self, k=None):
        if k is None:
            return ksets_up_to(self.order, self.arity)
        return ksets(self.order, k)


def hypertournament(m, n, mapping):
    return PointedHypertournament(m, n, Pointing.from_mapping(m, n, mapping))


def to_magma(T):
    return from_pointing(T.pointing)


def from_magma(A):
    report = classify(A)
    if not report.conservative:
        tuples = tuple_array(A.order, A.arity)
        bad = int(np.nonzero(~(tuples == A.table[:, None]).any(axis=1))[0][0])
        witness = tuple(int(v) for v in tuples[bad])
        raise NotHypertournamentMagma(f"operation is not conservative at {witness}", witness)
    try:
        p = extract_pointing(A)
    except NotEssentiallyPolyadic as e:
        raise NotHypertournamentMagma("operation is not essentially polyadic", e.witness)
    return PointedHypertournament(A.order, A.arity, p)


def dominated_counts(T):
    """counts[k-1][u]: number of k-edges pointing at u."""
    counts = np.zeros((T.arity, T.order), dtype=np.int64)
    for edge, w in T.pointing.items():
        counts[len(edge) - 1, w] += 1
    return counts


def is_balanced(T):
    counts = dominated_counts(T)
    return bool((counts == counts[:, :1]).all())


def dominates(T, u, V):
    V = canonical(V)
    if u in V:
        raise BadArity(f"{u} is a member of {V}")
    if not 1 <= len(V) <= T.arity - 1:
        raise BadArity(f"dominated sets have 1 to {T.arity - 1} members, got {len(V)}")
    return T.winner((u, *V)) == u


# 토너먼트 (n = 2)
def tournament_from_arcs(r, arc_list):
    """Tournament on r vertices from arcs (u, v) meaning u beats v."""
    mapping = {(u,): u for u in range(r)}
    for u, v in arc_list:
        edge = canonical((u, v))
        if mapping.get(edge, u) != u:
            raise ConflictingConstraints(f"both {u}->{v} and {v}->{u}")
        mapping[edge] = u
    return hypertournament(r, 2, mapping)


def arcs(T):
    if T.arity != 2:
        raise ArityNot2(f"arcs need arity 2, got {T.arity}")
    result = []
    for a, b in T.edges(2):
        w = T.winner((a, b))
        result.append((w, b if w == a else a))
    return result


def _from_bits(r, bits):
    # bit j set: the larger vertex of the j-th pair (colex order) wins
    return tournament_from_arcs(r, [((b, a) if bit else (a, b)) for (a, b), bit in zip(ksets(r, 2), bits)])


def all_tournaments(r):
    """All 2^C(r,2) labelled tournaments, bit j of the mask deciding the j-th pair."""
    pairs = comb(r, 2)
    for mask in range(2 ** pairs):
        yield _from_bits(r, [(mask >> j) & 1 for j in range(pairs)])


def random_tournament(r, seed=0):
    rng = np.random.default_rng(seed)
    return _from_bits(r, rng.integers(0, 2, size=comb(r, 2)).tolist())


def out_degrees(T):
    if T.arity != 2:
        raise ArityNot2(f"out-degrees need arity 2, got {T.arity}")
    return [int(c) for c in dominated_counts(T)[1]]


# 임베딩
@dataclass(frozen=True)
class EmbeddingWitness:
    source: PointedHypertournament
    target: object  # PointedHypertournament or FiniteMagma
    vertex_map: tuple


def _target_winner(target, edge):
    if isinstance(target, FiniteMagma):
        padded = list(edge) + [edge[-1]] * (target.arity - len(edge))
        return target.apply(*padded)
    return target.winner(edge)


def verify_embedding(witness):
    image = witness.vertex_map
    if len(set(image)) != len(image):
        return False
    for edge, w in witness.source.pointing.items():
        if _target_winner(witness.target, canonical(image[u] for u in edge)) != image[w]:
            return False
    return True


def double_tournament(T):
    """Balanced tournament on 2r+1 vertices containing T as the copy u -> u."""
    if T.arity != 2:
        raise ArityNot2(f"doubling needs a tournament, got arity {T.arity}")
    r = T.order
    eta = 2 * r
    new_arcs = []
    for u, v in arcs(T):
        new_arcs += [(u, v), (r + u, r + v), (v, r + u), (r + v, u)]
    for u in range(r):
        new_arcs += [(u, r + u), (r + u, eta), (eta, u)]
    doubled = tournament_from_arcs(2 * r + 1, new_arcs)
    witness = EmbeddingWitness(T, doubled, tuple(range(r)))
    logger.info(f"Doubled a tournament on {r} vertices")
    return doubled, witness


def embed_regular(T, alphas=None):
    """Embed T into a regular balanced hypertournament over the sum of Z_alpha_u."""
    n, m = T.arity, T.order
    alphas = [next_prime_after(n)] * m if alphas is None else list(alphas)
    if len(alphas) != m:
        raise BadModulus(f"expected {m} moduli, got {len(alphas)}")
    for alpha in alphas:
        if not admissible(alpha, n):
            raise BadModulus(f"modulus {alpha} is not admissible for arity {n}")
    G = direct_sum([cyclic_group(alpha) for alpha in alphas])
    generators = tuple(
        int(np.ravel_multi_index(tuple(int(j == u) for j in range(m)), alphas)) for u in range(m)
    )
    index = obverse_index(G, n)
    picked = {}
    for edge, w in T.pointing.items():
        if len(edge) == 1:
            continue
        shift = G.inverse[generators[w]]
        V = canonical(G.mul(shift, generators[v]) for v in edge if v != w)
        key = index.class_of(V).key
        if picked.get(key, V) != V:
            raise ConflictingConstraints(f"the class of {key} is forced to both {picked[key]} and {V}")
        picked[key] = V
    for cls in index.classes:
        picked.setdefault(cls.key, cls.key)
    A = build_regular(G, n, sign_function(G, n, picked.values()))
    witness = EmbeddingWitness(T, A, generators)
    if not verify_embedding(witness):
        raise ConflictingConstraints("embedding does not preserve dominance")
    logger.info(f"Embedded a hypertournament on {m} vertices into order {G.order}")
    return A, witness
