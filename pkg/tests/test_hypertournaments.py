from math import comb

import pytest

from magma_forge.core.hypertournaments import (
    PointedHypertournament,
    all_tournaments,
    arcs,
    dominated_counts,
    dominates,
    double_tournament,
    embed_regular,
    from_magma,
    hypertournament,
    is_balanced,
    out_degrees,
    random_tournament,
    to_magma,
    tournament_from_arcs,
    verify_embedding,
)
from magma_forge.core.magma import Pointing, classify
from magma_forge.errors import (
    ArityNot2,
    BadArity,
    BadModulus,
    ConflictingConstraints,
    LengthMismatch,
    NotHypertournamentMagma,
)


@pytest.fixture
def cycle3():
    return tournament_from_arcs(3, [(0, 2), (2, 1), (1, 0)])


def test_edges_must_point_inside():
    p = Pointing.from_mapping(2, 2, {(0,): 1, (1,): 1, (0, 1): 0})
    with pytest.raises(NotHypertournamentMagma):
        PointedHypertournament(2, 2, p)


def test_rps_magma_is_the_three_cycle(rps, cycle3):
    T = from_magma(rps)
    assert T.pointing == cycle3.pointing
    assert to_magma(cycle3) == rps


def test_non_conservative_magma_is_rejected(b_sigma):
    with pytest.raises(NotHypertournamentMagma) as info:
        from_magma(b_sigma)
    assert info.value.witness == (0, 0)


def test_balance(rps, french):
    assert is_balanced(from_magma(rps))
    assert not is_balanced(from_magma(french))
    assert dominated_counts(from_magma(french))[1].tolist() == [1, 2, 1, 2]


def test_dominates(cycle3):
    assert dominates(cycle3, 0, (2,))
    assert not dominates(cycle3, 0, (1,))
    with pytest.raises(BadArity):
        dominates(cycle3, 0, (0,))
    with pytest.raises(BadArity):
        dominates(cycle3, 0, (1, 2))


def test_arcs_and_out_degrees(cycle3):
    assert arcs(cycle3) == [(1, 0), (0, 2), (2, 1)]
    assert out_degrees(cycle3) == [1, 1, 1]


def test_tournament_from_arcs_errors():
    with pytest.raises(ConflictingConstraints):
        tournament_from_arcs(3, [(0, 1), (1, 0)])
    with pytest.raises(LengthMismatch):
        tournament_from_arcs(3, [(0, 1)])


def test_arity_two_helpers_reject_other_arities():
    T = hypertournament(2, 3, {(0,): 0, (1,): 1, (0, 1): 1})
    with pytest.raises(ArityNot2):
        arcs(T)
    with pytest.raises(ArityNot2):
        out_degrees(T)
    with pytest.raises(ArityNot2):
        double_tournament(T)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_all_tournaments_are_distinct(r):
    found = list(all_tournaments(r))
    assert len(found) == 2 ** comb(r, 2)
    assert len({T.pointing for T in found}) == len(found)


def test_random_tournament_is_seeded():
    assert random_tournament(6, seed=3) == random_tournament(6, seed=3)
    assert sum(out_degrees(random_tournament(6, seed=3))) == comb(6, 2)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_doubling_every_small_tournament(r):
    for T in all_tournaments(r):
        doubled, witness = double_tournament(T)
        assert doubled.order == 2 * r + 1
        assert is_balanced(doubled)
        assert out_degrees(doubled) == [r] * (2 * r + 1)
        assert verify_embedding(witness)


def test_doubled_tournament_is_an_rps_magma(cycle3):
    doubled, _ = double_tournament(cycle3)
    assert classify(to_magma(doubled)).all_true


@pytest.mark.parametrize("r", [2, 3])
def test_embedding_every_small_tournament(r):
    for T in all_tournaments(r):
        A, witness = embed_regular(T)
        assert A.order == 3 ** r
        assert verify_embedding(witness)
        assert classify(A).all_true


def test_embedding_a_ternary_hypertournament():
    T = hypertournament(2, 3, {(0,): 0, (1,): 1, (0, 1): 1})
    A, witness = embed_regular(T)
    assert A.order == 25 and A.arity == 3
    assert verify_embedding(witness)


def test_embedding_with_mixed_moduli(cycle3):
    A, witness = embed_regular(cycle3, [3, 5, 7])
    assert A.order == 105
    assert verify_embedding(witness)


def test_embedding_moduli_errors(cycle3):
    with pytest.raises(BadModulus):
        embed_regular(cycle3, [3, 3])
    with pytest.raises(BadModulus):
        embed_regular(cycle3, [3, 4, 5])


def test_broken_witness_fails_verification(cycle3):
    _, witness = double_tournament(cycle3)
    swapped = type(witness)(witness.source, witness.target, (1, 0, 2))
    assert not verify_embedding(swapped)


@pytest.mark.parametrize("r", [3, 4, 5])
def test_balance_agrees_with_strong_fairness(r):
    for T in all_tournaments(r):
        assert is_balanced(T) == classify(to_magma(T)).strongly_fair
