from itertools import product
from math import comb

import numpy as np
import pytest

from magma_forge.core.analysis import is_automorphism, is_correlated
from magma_forge.core.construct import (
    Chirality,
    alternate_beta,
    build_from_chirality,
    build_regular,
    canonical_beta,
    canonical_lambda,
    chirality_to_sign,
    correlated_lambda,
    dominating_member,
    enumerate_obverse_classes,
    enumerate_sign_functions,
    is_chosen,
    lambda_from_winners,
    obverse_class,
    obverse_index,
    primitive_root_lambda,
    primitive_root_multiplier,
    sign_function,
    sign_to_chirality,
    simple_lambda,
    validate_sign_function,
)
from magma_forge.core.census import count_regular_rps
from magma_forge.core.groups import cyclic_group, left_translations, semidirect_cyclic
from magma_forge.core.magma import classify
from magma_forge.errors import (
    ArityTooLarge,
    ConflictingConstraints,
    ContainsIdentity,
    InvalidChirality,
    InvalidSignFunction,
    NotAdmissible,
    NotPrime,
    TooLarge,
)


# 옵버스 클래스
def test_obverse_classes_of_small_groups(z3, z5):
    assert set(obverse_class(z3, (1,)).members) == {(1,), (2,)}
    assert set(obverse_class(z5, (2,)).members) == {(2,), (3,)}
    cls = obverse_class(cyclic_group(7), (3, 1))
    assert set(cls.members) == {(1, 3), (2, 6), (4, 5)}
    assert cls.key == (1, 3)
    assert cls.k == 2


def test_obverse_class_errors(z5):
    with pytest.raises(ContainsIdentity):
        obverse_class(z5, (0, 2))
    with pytest.raises(TooLarge):
        obverse_class(z5, (1, 2, 3, 4))
    with pytest.raises(TooLarge):
        obverse_class(z5, (1, 2), n=2)


def test_enumerate_obverse_classes(z3, z5):
    assert len(enumerate_obverse_classes(z3, 2)) == 1
    classes = enumerate_obverse_classes(z5, 2)
    assert [set(c.members) for c in classes] == [{(1,), (4,)}, {(2,), (3,)}]
    ternary = enumerate_obverse_classes(z5, 3)
    assert [c.k for c in ternary] == [1, 1, 2, 2]
    assert all(len(c.members) == c.k + 1 for c in ternary)


def test_enumerate_obverse_classes_needs_admissible():
    with pytest.raises(NotAdmissible):
        enumerate_obverse_classes(cyclic_group(4), 2)


@pytest.mark.parametrize("m, n", [(5, 2), (5, 3), (7, 2), (7, 3), (7, 4), (11, 3)])
def test_obverse_class_counts(m, n):
    classes = enumerate_obverse_classes(cyclic_group(m), n)
    for k in range(1, n):
        assert sum(1 for c in classes if c.k == k) == comb(m, k + 1) // m


# 부호 함수
def test_canonical_lambda(z3, z5):
    assert canonical_lambda(z3, 2).chosen_sets == [(1,)]
    assert canonical_lambda(z5, 2).chosen_sets == [(1,), (2,)]
    assert canonical_lambda(z5, 2) == canonical_lambda(z5, 2)


def test_sign_function_errors(z5):
    with pytest.raises(InvalidSignFunction):
        sign_function(z5, 2, [(1,), (4,), (2,)])
    with pytest.raises(InvalidSignFunction):
        sign_function(z5, 2, [(1,)])
    with pytest.raises(InvalidSignFunction):
        sign_function(z5, 2, [(0,), (1,), (2,)])


def test_validate_sign_function(z5, rpssl_lambda):
    assert validate_sign_function(z5, 2, rpssl_lambda) is rpssl_lambda
    with pytest.raises(InvalidSignFunction):
        validate_sign_function(z5, 3, rpssl_lambda)


@pytest.mark.parametrize("m, n, expected", [(3, 2, 2), (5, 2, 4), (5, 3, 36)])
def test_enumerate_sign_functions(m, n, expected):
    found = list(enumerate_sign_functions(cyclic_group(m), n))
    assert len(found) == expected == count_regular_rps(m, n)
    assert len(set(found)) == expected


# 키랄리티
def test_classic_rps_chirality(z3, rps_lambda):
    c = Chirality(3, 2, canonical_beta(z3, 2), ((0,), (1,)))
    assert chirality_to_sign(z3, 2, c) == rps_lambda


def test_rpssl_chirality(z5, rpssl_lambda, rpssl):
    # f(0, 1) = 1 and f(0, 2) = 0
    c = Chirality(5, 2, canonical_beta(z5, 2), ((0,), (1, 0)))
    assert chirality_to_sign(z5, 2, c) == rpssl_lambda
    assert build_from_chirality(z5, 2, c) == rpssl


def test_invalid_chirality(z5):
    with pytest.raises(InvalidChirality):
        chirality_to_sign(z5, 2, Chirality(5, 2, canonical_beta(z5, 2), ((0,), (3, 0))))
    with pytest.raises(InvalidChirality):
        chirality_to_sign(z5, 2, Chirality(5, 2, (((0,),), ((0, 1), (1, 2))), ((0,), (1, 1))))


@pytest.mark.parametrize("m, n", [(3, 2), (5, 2), (5, 3)])
def test_sign_chirality_round_trips(m, n):
    G = cyclic_group(m)
    for lam in enumerate_sign_functions(G, n):
        assert chirality_to_sign(G, n, sign_to_chirality(G, n, lam)) == lam
    beta = canonical_beta(G, n)
    for gamma in product(*(product(*beta_k) for beta_k in beta)):
        c = Chirality(m, n, beta, tuple(gamma))
        assert sign_to_chirality(G, n, chirality_to_sign(G, n, c), beta) == c


@pytest.mark.parametrize("m, n", [(5, 2), (5, 3), (7, 3)])
def test_beta_independence(m, n):
    G = cyclic_group(m)
    other = alternate_beta(G, n)
    assert other != canonical_beta(G, n)
    for lam in list(enumerate_sign_functions(G, n))[:50]:
        assert build_from_chirality(G, n, sign_to_chirality(G, n, lam, other)) == build_regular(G, n, lam)


# 정규 마그마
def test_build_regular_reproduces_tables(z3, z5, rps, rpssl, ternary, rps_lambda, rpssl_lambda, ternary_lambda):
    assert build_regular(z3, 2, rps_lambda) == rps
    assert build_regular(z5, 2, rpssl_lambda) == rpssl
    assert build_regular(z5, 3, ternary_lambda) == ternary


def test_build_regular_needs_admissible():
    G = cyclic_group(4)
    with pytest.raises(NotAdmissible):
        build_regular(G, 2, None)


@pytest.mark.slow
@pytest.mark.parametrize("m, n", [(3, 2), (5, 2), (7, 2), (5, 3), (7, 3)])
def test_every_regular_magma_is_rps(m, n):
    G = cyclic_group(m)
    for lam in enumerate_sign_functions(G, n):
        assert classify(build_regular(G, n, lam)).all_true


@pytest.mark.parametrize("m, n", [(5, 2), (5, 3)])
def test_identity_dominates_exactly_the_chosen_sets(m, n):
    G = cyclic_group(m)
    index = obverse_index(G, n)
    for lam in enumerate_sign_functions(G, n):
        A = build_regular(G, n, lam)
        for U in index.position:
            args = [G.identity] * (n - len(U)) + list(U)
            assert (A.apply(*args) == G.identity) == is_chosen(G, n, lam, U)
            W = (G.identity, *U)
            assert dominating_member(G, n, lam, W) == A.apply(*(list(W) + [W[-1]] * (n - len(W))))


def test_left_translations_are_automorphisms(ternary):
    for s in left_translations(cyclic_group(5)):
        assert is_automorphism(ternary, s)


def test_lambda_from_winners(z5, ternary_lambda):
    rebuilt = lambda_from_winners(z5, 3, lambda W: dominating_member(z5, 3, ternary_lambda, W))
    assert rebuilt == ternary_lambda


# 상관 부호 함수
def test_correlated_lambda_order21():
    G = semidirect_cyclic(7, 3, 2)
    # seeds x+1 and 2x
    lam = correlated_lambda(G, 2, seeds=[(1,), (7,)])
    assert len(lam.choices) == 10
    assert set(lam.chosen_sets) == {(1,), (2,), (4,)} | {(7 + b,) for b in range(7)}
    assert G.label(4) == "x+4"
    assert is_correlated(G, 2, lam)


def test_correlated_lambda_seed_conflict():
    G = semidirect_cyclic(7, 3, 2)
    with pytest.raises(ConflictingConstraints):
        correlated_lambda(G, 2, seeds=[(1,), (2,), (5,)])


def test_abelian_lambda_is_correlated(z5, rpssl_lambda):
    assert is_correlated(z5, 2, rpssl_lambda)
    assert correlated_lambda(z5, 2) == canonical_lambda(z5, 2)


# 원시근 부호 함수
def test_primitive_root_multiplier_p7():
    c, lam = primitive_root_multiplier(7, 2)
    assert c == 2
    assert set(lam.chosen_sets) == {(1,), (2,), (4,)}
    A = build_regular(cyclic_group(7), 2, lam)
    assert is_automorphism(A, [2 * x % 7 for x in range(7)])


def test_primitive_root_lambda_p5_has_no_multiplier():
    with pytest.raises(ConflictingConstraints):
        primitive_root_lambda(5, 2)


def test_primitive_root_lambda_preconditions():
    with pytest.raises(NotAdmissible):
        primitive_root_lambda(3, 1)
    with pytest.raises(ArityTooLarge):
        primitive_root_lambda(7, 6)
    with pytest.raises(NotPrime):
        primitive_root_lambda(9, 2)


# 단순 부호 함수
def test_simple_lambda_z9():
    lam = simple_lambda(3, 2, 2)
    G = cyclic_group(9)
    assert is_chosen(G, 2, lam, (1,))
    assert is_chosen(G, 2, lam, (5,))
    assert not is_chosen(G, 2, lam, (4,))


def test_simple_lambda_prime_is_canonical():
    assert simple_lambda(5, 1, 2) == canonical_lambda(cyclic_group(5), 2)


def test_simple_lambda_preconditions():
    with pytest.raises(NotAdmissible):
        simple_lambda(3, 2, 1)
    with pytest.raises(NotAdmissible):
        simple_lambda(3, 2, 3)
    with pytest.raises(NotPrime):
        simple_lambda(4, 1, 2)


def test_regular_tables_are_translation_equivariant(z5, ternary_lambda):
    A = build_regular(z5, 3, ternary_lambda)
    cube = A.cube
    for s in range(5):
        shift = (np.arange(5) + s) % 5
        assert np.array_equal(shift[cube], cube[np.ix_(shift, shift, shift)])
