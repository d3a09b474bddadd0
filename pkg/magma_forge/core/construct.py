"""Obverse classes, sign functions, chiralities and regular RPS magmas G_n(lambda).

Sign function convention: lambda(obv(U)) = U exactly when the identity
dominates U, i.e. f(e, ..., e, u_1, ..., u_k) = e.
"""
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from math import prod

import sympy

from magma_forge import caps
from magma_forge.core.arithmetic import admissible
from magma_forge.core.groups import (
    cosets,
    cyclic_group,
    inner_automorphisms,
    is_normal,
    k_extension_orbits,
    make_group,
)
from magma_forge.core.ksets import canonical, colex_key, ksets, order_key
from magma_forge.core.magma import Pointing, from_pointing
from magma_forge.errors import (
    ArityTooLarge,
    ConflictingConstraints,
    ContainsIdentity,
    InvalidChirality,
    InvalidSignFunction,
    NotAdmissible,
    NotNormal,
    NotPrime,
    TooLarge,
)
from magma_forge.utils.helpers import logger


def require_admissible(m, n):
    verdict = admissible(m, n)
    if not verdict.admissible:
        raise NotAdmissible(f"no regular RPS magma of order {m} and arity {n} (least prime divisor {verdict.least_prime_divisor})")
    return verdict


# 옵버스 클래스
@dataclass(frozen=True)
class ObverseClass:
    k: int
    members: tuple  # colex order

    @property
    def key(self):
        return self.members[0]


def obverse_members(G, U):
    W = canonical((G.identity, *U))
    return sorted(
        {canonical(v for v in G.table[G.inverse[w], list(W)].tolist() if v != G.identity) for w in W},
        key=colex_key,
    )


def obverse_class(G, U, n=None):
    U = canonical(U)
    if G.identity in U:
        raise ContainsIdentity(f"{U} contains the identity {G.identity}")
    k = len(U)
    if not admissible(G.order, k + 1) or (n is not None and k > n - 1):
        raise TooLarge(f"obverse classes of {k}-sets are not defined for order {G.order}" + (f" and arity {n}" if n else ""))
    return ObverseClass(k, tuple(obverse_members(G, U)))


@dataclass(frozen=True)
class ObverseIndex:
    classes: tuple
    position: dict  # member k-set -> index into classes

    def class_of(self, U):
        return self.classes[self.position[canonical(U)]]


@lru_cache(maxsize=64)
def obverse_index(G, n):
    require_admissible(G.order, n)
    classes, position = [], {}
    for k in range(1, n):
        for U in ksets(G.order, k):
            if G.identity in U or U in position:
                continue
            cls = ObverseClass(k, tuple(obverse_members(G, U)))
            for V in cls.members:
                position[V] = len(classes)
            classes.append(cls)
    return ObverseIndex(tuple(classes), position)


def enumerate_obverse_classes(G, n):
    return list(obverse_index(G, n).classes)


# 부호 함수
@dataclass(frozen=True)
class SignFunction:
    order: int
    arity: int
    choices: tuple  # ((class key, chosen member), ...) sorted by (k, colex key)

    @cached_property
    def _lookup(self):
        return dict(self.choices)

    def chosen(self, key):
        return self._lookup[tuple(key)]

    def as_dict(self):
        return dict(self.choices)

    @property
    def chosen_sets(self):
        return [chosen for _, chosen in self.choices]


def sign_function(G, n, chosen_sets):
    """Sign function from one chosen member per obverse class."""
    index = obverse_index(G, n)
    picked = {}
    for U in chosen_sets:
        U = canonical(U)
        if U not in index.position:
            raise InvalidSignFunction(f"{U} is not an obverse k-set of order {G.order} and arity {n}")
        key = index.class_of(U).key
        if key in picked and picked[key] != U:
            raise InvalidSignFunction(f"two choices for the class of {key}: {picked[key]} and {U}")
        picked[key] = U
    missing = [cls.key for cls in index.classes if cls.key not in picked]
    if missing:
        raise InvalidSignFunction(f"no choice for the class of {missing[0]}")
    return SignFunction(G.order, n, tuple(sorted(picked.items(), key=lambda kv: order_key(kv[0]))))


def validate_sign_function(G, n, lam):
    if lam.order != G.order or lam.arity != n:
        raise InvalidSignFunction(f"sign function is for order {lam.order}, arity {lam.arity}")
    index = obverse_index(G, n)
    if [key for key, _ in lam.choices] != [cls.key for cls in index.classes]:
        raise InvalidSignFunction("sign function does not cover the obverse classes")
    for (key, chosen), cls in zip(lam.choices, index.classes):
        if chosen not in cls.members:
            raise InvalidSignFunction(f"{chosen} is not in the class of {key}")
    return lam


def is_chosen(G, n, lam, U):
    return lam.chosen(obverse_index(G, n).class_of(U).key) == canonical(U)


def canonical_lambda(G, n):
    index = obverse_index(G, n)
    return SignFunction(G.order, n, tuple((cls.key, cls.key) for cls in index.classes))


def enumerate_sign_functions(G, n, cap=None):
    classes = obverse_index(G, n).classes
    caps.check("sign functions", prod(len(c.members) for c in classes), caps.enumeration if cap is None else cap)
    keys = [c.key for c in classes]
    for picks in product(*(c.members for c in classes)):
        yield SignFunction(G.order, n, tuple(zip(keys, picks)))


def dominating_member(G, n, lam, W):
    """g(W) in G_n(lambda): the w in W with lambda choosing w^-1 W minus e."""
    W = canonical(W)
    if len(W) == 1:
        return W[0]
    for w in W:
        V = canonical(v for v in G.table[G.inverse[w], list(W)].tolist() if v != G.identity)
        if is_chosen(G, n, lam, V):
            return w
    raise InvalidSignFunction(f"no member of {W} is chosen")


def lambda_from_winners(G, n, winner):
    """Sign function of a translation-equivariant winner rule ``winner(W)``."""
    chosen = []
    for cls in obverse_index(G, n).classes:
        W = canonical((G.identity, *cls.key))
        w = winner(W)
        chosen.append(canonical(v for v in G.table[G.inverse[w], list(W)].tolist() if v != G.identity))
    return sign_function(G, n, chosen)


# 키랄리티
@dataclass(frozen=True)
class Chirality:
    order: int
    arity: int
    beta: tuple   # beta[k-1][psi]: representative k-set of orbit psi
    gamma: tuple  # gamma[k-1][psi]: chosen member of beta[k-1][psi]


@lru_cache(maxsize=64)
def _orbits(G, k):
    return k_extension_orbits(G, k)


@lru_cache(maxsize=64)
def _translation_index(G, k):
    """k-set U -> (orbit, s) with U = s * (colex-least member of the orbit)."""
    index = {}
    for psi, orbit in enumerate(_orbits(G, k).orbits):
        rep = list(orbit[0])
        for s in G.elements():
            index.setdefault(canonical(G.table[s, rep].tolist()), (psi, s))
    return index


def canonical_beta(G, n):
    return tuple(_orbits(G, k).representatives for k in range(1, n + 1))


def alternate_beta(G, n):
    return tuple(tuple(orbit[-1] for orbit in _orbits(G, k).orbits) for k in range(1, n + 1))


def _locate(G, k, beta_k, U):
    """(psi, s) with U = s * beta_k[psi]."""
    psi, s = _translation_index(G, k)[canonical(U)]
    _, t = _translation_index(G, k)[canonical(beta_k[psi])]
    return psi, G.mul(s, G.inverse[t])


def validate_chirality(G, n, c):
    if c.order != G.order or c.arity != n or len(c.beta) != n or len(c.gamma) != n:
        raise InvalidChirality(f"chirality is for order {c.order}, arity {c.arity}")
    for k in range(1, n + 1):
        orbits = _orbits(G, k)
        beta_k, gamma_k = c.beta[k - 1], c.gamma[k - 1]
        if len(beta_k) != len(orbits) or len(gamma_k) != len(orbits):
            raise InvalidChirality(f"chirality has the wrong number of {k}-orbits")
        for psi, (B, b) in enumerate(zip(beta_k, gamma_k)):
            if orbits.orbit_index(B) != psi:
                raise InvalidChirality(f"{B} does not represent {k}-orbit {psi}")
            if b not in B:
                raise InvalidChirality(f"choice {b} is not a member of {B}")
    return c


def sign_to_chirality(G, n, lam, beta=None):
    require_admissible(G.order, n)
    validate_sign_function(G, n, lam)
    beta = canonical_beta(G, n) if beta is None else beta
    gamma = tuple(tuple(dominating_member(G, n, lam, B) for B in beta_k) for beta_k in beta)
    return Chirality(G.order, n, tuple(beta), gamma)


def chirality_to_sign(G, n, c):
    require_admissible(G.order, n)
    validate_chirality(G, n, c)

    def winner(W):
        k = len(W)
        psi, s = _locate(G, k, c.beta[k - 1], W)
        return G.mul(s, c.gamma[k - 1][psi])

    return lambda_from_winners(G, n, winner)


def build_from_chirality(G, n, c):
    """The left-multiplication action magma induced by (beta, gamma)."""
    require_admissible(G.order, n)
    validate_chirality(G, n, c)
    mapping = {}
    for k in range(1, n + 1):
        beta_k, gamma_k = c.beta[k - 1], c.gamma[k - 1]
        for U, (psi, s) in _translation_index(G, k).items():
            _, t = _translation_index(G, k)[canonical(beta_k[psi])]
            mapping[U] = G.mul(G.mul(s, G.inverse[t]), gamma_k[psi])
    return from_pointing(Pointing.from_mapping(G.order, n, mapping))


def build_regular(G, n, lam):
    magma = build_from_chirality(G, n, sign_to_chirality(G, n, lam))
    logger.info(f"Built regular magma over {G.name} with arity {n}")
    return magma


# 특수 부호 함수들
def _propagate(G, n, maps, seeds):
    """Extend choices along a group of automorphisms ``maps`` (permutations)."""
    index = obverse_index(G, n)
    picked = {}
    seeds = [canonical(U) for U in seeds]
    for U in seeds:
        if U not in index.position:
            raise InvalidSignFunction(f"{U} is not an obverse k-set of order {G.order} and arity {n}")
    for cls in index.classes:
        if cls.key in picked:
            continue
        orbit = {index.class_of(canonical(phi[v] for v in cls.key)).key for phi in maps}
        seeded = [U for U in seeds if index.class_of(U).key in orbit]
        for U in seeded[:1] or cls.members:
            images = _orbit_choices(index, maps, U)
            if images is not None:
                picked.update(images)
                break
        else:
            raise ConflictingConstraints(f"the class of {cls.key} is moved onto itself with no fixed choice")
    for U in seeds:
        if picked[index.class_of(U).key] != U:
            raise ConflictingConstraints(f"seed {U} disagrees with {picked[index.class_of(U).key]}")
    return sign_function(G, n, picked.values())


def _orbit_choices(index, maps, U):
    images = {}
    for phi in maps:
        image = canonical(phi[v] for v in U)
        key = index.class_of(image).key
        if images.get(key, image) != image:
            return None
        images[key] = image
    return images


def correlated_lambda(G, n, seeds=()):
    """Sign function constant on Inn(G)-orbits of obverse classes."""
    require_admissible(G.order, n)
    lam = _propagate(G, n, inner_automorphisms(G), seeds)
    logger.info(f"Correlated sign function over {G.name} from {len(seeds)} seeds")
    return lam


def _multiplier_powers(c, p):
    powers, x = [], 1
    while True:
        powers.append(x)
        x = x * c % p
        if x == 1:
            return powers


def primitive_root_multiplier(p, n):
    """Largest-order unit c = r^j (r the least primitive root) whose x -> cx admits an invariant sign function."""
    if p < 3 or not sympy.isprime(p):
        raise NotPrime(f"{p} is not an odd prime")
    if n < 2:
        raise NotAdmissible("sign functions need arity at least 2")
    if n > p - 2:
        raise ArityTooLarge(f"arity {n} exceeds {p - 2}")
    G = cyclic_group(p)
    r = int(sympy.primitive_root(p))
    for d in sorted(sympy.divisors(p - 1), reverse=True):
        if d == 1:
            break
        c = pow(r, (p - 1) // d, p)
        maps = [tuple(x * q % p for x in range(p)) for q in _multiplier_powers(c, p)]
        try:
            return c, _propagate(G, n, maps, ())
        except ConflictingConstraints:
            logger.info(f"Multiplier {c} mod {p} moves an obverse class onto itself")
    raise ConflictingConstraints(f"no multiplier x -> cx of Z{p} fixes a sign function of arity {n}")


def primitive_root_lambda(p, n):
    c, lam = primitive_root_multiplier(p, n)
    logger.info(f"Sign function on Z{p} invariant under x -> {c}x")
    return lam


def simple_lambda(p, k, n):
    """Sign function on Z_{p^k} with no nontrivial proper convex subgroup."""
    if not sympy.isprime(p):
        raise NotPrime(f"{p} is not prime")
    m = p ** k
    if n < 2:
        raise NotAdmissible("sign functions need arity at least 2")
    require_admissible(m, n)
    G = cyclic_group(m)
    index = obverse_index(G, n)
    picked = {}
    for i in range(1, k):
        a = p ** (k - i - 1)
        b = a + p ** (k - i)
        for U in ((a,), ((-b) % m,)):
            key = index.class_of(U).key
            if key in picked:
                raise ConflictingConstraints(f"the class of {key} is constrained twice")
            picked[key] = U
    for cls in index.classes:
        picked.setdefault(cls.key, cls.key)
    return sign_function(G, n, picked.values())


def subgroup_group(G, H):
    """H as a group on 0..|H|-1, plus the sorted element list."""
    elements = sorted(H)
    position = {h: i for i, h in enumerate(elements)}
    table = [[position[G.mul(x, y)] for y in elements] for x in elements]
    return make_group(table, position[G.identity], name=f"{G.name}[{len(elements)}]"), elements


def quotient_group(G, H):
    """G/H on coset indices (cosets sorted by least element), plus the cosets."""
    if not is_normal(G, H):
        raise NotNormal(f"{sorted(H)} is not normal")
    blocks = sorted(cosets(G, H), key=min)
    which = {x: i for i, block in enumerate(blocks) for x in block}
    reps = [min(block) for block in blocks]
    table = [[which[G.mul(x, y)] for y in reps] for x in reps]
    return make_group(table, which[G.identity], name=f"{G.name}/{len(H)}"), blocks


def convex_lambda(G, n, H):
    """Sign function for which the left cosets of the normal subgroup H form a congruence."""
    require_admissible(G.order, n)
    Hg, h_elements = subgroup_group(G, H)
    Q, blocks = quotient_group(G, H)
    which = {x: i for i, block in enumerate(blocks) for x in block}
    inside = canonical_lambda(Hg, n) if Hg.order > 1 else None
    between = canonical_lambda(Q, n) if Q.order > 1 else None
    h_position = {h: i for i, h in enumerate(h_elements)}

    def within(part):
        if len(part) == 1:
            return part[0]
        c = part[0]
        shifted = [h_position[G.mul(G.inverse[c], x)] for x in part]
        return G.mul(c, h_elements[dominating_member(Hg, n, inside, shifted)])

    def winner(W):
        touched = canonical(which[x] for x in W)
        target = touched[0] if len(touched) == 1 else dominating_member(Q, n, between, touched)
        return within([x for x in W if which[x] == target])

    lam = lambda_from_winners(G, n, winner)
    logger.info(f"Convex sign function over {G.name} for a subgroup of order {len(H)}")
    return lam
