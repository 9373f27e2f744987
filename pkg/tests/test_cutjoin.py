from fractions import Fraction

import pytest

from hurwitz_hodge.cutjoin import (
    cut_and_join_hurwitz,
    cut_and_join_layer,
    cut_and_join_layers,
)
from hurwitz_hodge.engines import connected_hurwitz, ramification_count
from hurwitz_hodge.errors import InfeasibleError
from hurwitz_hodge.partitions import partitions_of

F = Fraction


def test_hand_derived_layers():
    layers = cut_and_join_layers(3, kmax=6)
    assert layers[0] == {(1,): F(1)}
    assert layers[1] == {(2,): F(1, 2)}
    assert layers[2] == {(1, 1): F(1, 2), (3,): F(1)}
    assert layers[3] == {(2,): F(1, 2), (2, 1): F(4), (4,): F(4)}


def test_single_step_matches_layer_list():
    layers = cut_and_join_layers(4, kmax=6)
    for r in range(1, 5):
        assert cut_and_join_layer(layers[:r], kmax=6) == layers[r]


def test_coefficient_examples():
    assert cut_and_join_hurwitz(0, (2,)) == F(1, 2)
    assert cut_and_join_hurwitz(0, (1, 1)) == F(1, 2)
    assert cut_and_join_hurwitz(0, (4,)) == 4


def test_layer_monomials_satisfy_genus_parity():
    layers = cut_and_join_layers(9, kmax=6)
    for r, layer in enumerate(layers):
        for mono in layer:
            assert sum(mono) <= 6
            twice_genus = r - sum(mono) - len(mono) + 2
            assert twice_genus >= 0 and twice_genus % 2 == 0


def test_absent_monomial_is_zero():
    # wrong parity: r = 2 cannot produce the type (2) (odd permutation)
    assert cut_and_join_hurwitz(0, (3,)) != 0
    layers = cut_and_join_layers(2, kmax=4)
    assert (2,) not in layers[2]


def test_agreement_with_character_engine():
    for k in range(1, 6):
        for mu in partitions_of(k):
            for g in range(3):
                assert cut_and_join_hurwitz(g, mu, kmax=6) == connected_hurwitz(g, mu)


def test_truncation_bound_error():
    with pytest.raises(InfeasibleError, match="truncation"):
        cut_and_join_hurwitz(0, (7, 4), kmax=10)
    # same request succeeds with a bigger carrier
    value = cut_and_join_hurwitz(0, (7, 4), kmax=11, r_bound=40)
    assert value == connected_hurwitz(0, (7, 4), k_bound=11)


def test_r_bound_error():
    with pytest.raises(InfeasibleError, match="r="):
        cut_and_join_hurwitz(30, (2,), r_bound=40)


def test_layers_are_copies():
    layers = cut_and_join_layers(1, kmax=6)
    layers[1][(9, 9)] = F(1)
    assert cut_and_join_layers(1, kmax=6)[1] == {(2,): F(1, 2)}


def test_ramification_consistency():
    # the layer holding h_{g;mu} is indexed by the branch point count
    mu = (2, 1)
    r = ramification_count(1, mu)
    layers = cut_and_join_layers(r, kmax=6)
    assert layers[r][(2, 1)] == connected_hurwitz(1, mu)
