import pytest

from wzslab.errors import GroupMismatch, NotASubsequence, NotInMonoid
from wzslab.group_module import identity_weights, make_group, plus_minus
from wzslab.sequence_module import (
    GSubset,
    Sequence,
    all_sequences,
    big_sigma_gamma,
    divides_in_monoid,
    is_wzs,
    is_wzs_bruteforce,
    is_wzs_free,
    sigma,
    sigma_gamma,
)

def seq(G, *coords):
    return Sequence.from_elements(G, [G.element(c) for c in coords])

def test_serialization_lists_elements_in_index_order(c5):
    S = seq(c5, (4,), (1,), (4,))
    assert S.serialize() == "[(1),(4)^2]"
    assert len(S) == 3
    assert S.count(c5.element((4,))) == 2

def test_monoid_operations(c5):
    S = seq(c5, (1,), (2,))
    T = seq(c5, (2,))
    assert (S * T).serialize() == "[(1),(2)^2]"
    assert (S ** 3).length == 6
    assert T.divides(S)
    assert (S / T) == seq(c5, (1,))
    with pytest.raises(NotASubsequence):
        T / S

def test_mixing_groups_fails(c3, c5):
    with pytest.raises(GroupMismatch):
        seq(c3, (1,)) * seq(c5, (1,))

def test_sigma(c5):
    assert sigma(seq(c5, (1,), (2,), (3,))).coordinates == (1,)
    assert sigma(Sequence.empty(c5)).is_zero()

def test_sigma_gamma_plus_minus(c3):
    pm = plus_minus(c3)
    assert sigma_gamma(seq(c3, (1,)), pm) == GSubset.from_indices(c3, [1, 2])
    assert sigma_gamma(seq(c3, (1,), (1,)), pm).is_full()
    assert sigma_gamma(Sequence.empty(c3), pm) == GSubset.zero(c3)

@pytest.mark.parametrize("coords, member", [
    ([], True),
    ([(0,)], True),
    ([(1,)], False),
    ([(1,), (1,)], True),
    ([(1,), (2,)], True),
    ([(1,), (1,), (1,)], True),
    ([(1,)] * 5, True),
])
def test_membership_plus_minus_c3(c3, coords, member):
    S = seq(c3, *coords)
    assert is_wzs(S, plus_minus(c3)) is member

def test_membership_agrees_with_brute_force():
    G = make_group([2, 4])
    pm = plus_minus(G)
    for S in all_sequences(G, 3):
        assert is_wzs(S, pm) == is_wzs_bruteforce(S, pm)

def test_identity_weights_is_plain_zero_sum(c5):
    ident = identity_weights(c5)
    assert is_wzs(seq(c5, (1,), (4,)), ident)
    assert not is_wzs(seq(c5, (1,), (1,)), ident)

def test_zero_sum_free(c5):
    ident = identity_weights(c5)
    assert is_wzs_free(seq(c5, (1,), (1,), (1,), (1,)), ident)
    assert not is_wzs_free(seq(c5, (1,), (1,), (1,), (1,), (1,)), ident)
    assert c5.zero in big_sigma_gamma(seq(c5, (2,), (3,)), ident).elements()

def test_divides_in_monoid(c3):
    pm = plus_minus(c3)
    four = seq(c3, (1,), (1,), (1,), (1,))
    assert divides_in_monoid(seq(c3, (1,), (1,)), four, pm)
    assert not divides_in_monoid(seq(c3, (1,), (1,), (1,)), four, pm)
    with pytest.raises(NotInMonoid):
        divides_in_monoid(seq(c3, (1,)), four, pm)

def test_all_sequences_counts(c3):
    # multisets of size <= 2 over 3 letters: 1 + 3 + 6
    assert sum(1 for _ in all_sequences(c3, 2)) == 10
    lengths = [len(S) for S in all_sequences(c3, 2)]
    assert lengths == sorted(lengths)
