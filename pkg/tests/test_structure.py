import pytest

from wzslab.errors import CapExceeded, GroupShapeUnsupported, HypothesisNotMet, WeightSetLacksPM
from wzslab.group_module import identity_weights, make_group, plus_minus, weight_set_from_spec
from wzslab.monoid_module import MonoidHandle
from wzslab.sequence_module import Sequence, all_sequences, is_wzs
from wzslab.structure_module import (
    a3_membership,
    a3_trace,
    applicable_witness_case,
    cic_member,
    cic_member_bruteforce,
    cic_seed,
    class_semigroup,
    divisor_closed_submonoids,
    find_seminormal_witness,
    height_one_primes,
    is_seminormal,
    nonweakly_krull_witness,
    seminormal_prediction,
    seminormalization_member,
    theorem44_verdict,
)

def seq(G, *coords):
    return Sequence.from_elements(G, [G.element(c) for c in coords])

# Seminormalization

def test_c4_is_seminormal():
    G = make_group([4])
    report = is_seminormal(G, plus_minus(G), length_bound=2)
    assert report.seminormal
    assert report.seminormal_predicted
    assert report.agrees

def test_c8_witness():
    G = make_group([8])
    pm = plus_minus(G)
    witness = find_seminormal_witness(G, pm, 2)
    assert witness == seq(G, (1,), (3,))
    assert not is_wzs(witness, pm)
    assert is_wzs(witness ** 3, pm)
    other = seq(G, (1,), (5,))
    assert not is_wzs(other, pm)
    assert is_wzs(other ** 2, pm) and is_wzs(other ** 3, pm)
    report = is_seminormal(G, pm, length_bound=2)
    assert report.seminormal is False
    assert report.witness_verified
    assert report.agrees

def test_seminormalization_needs_plus_minus():
    G = make_group([5])
    with pytest.raises(WeightSetLacksPM):
        seminormalization_member(seq(G, (1,)), identity_weights(G))

def test_odd_exponent_is_not_seminormal():
    G = make_group([3])
    assert seminormal_prediction(plus_minus(G)) is False
    assert seminormalization_member(seq(G, (1,)), plus_minus(G))

# Complete integral closure

def test_closure_for_c4():
    G = make_group([4])
    pm = plus_minus(G)
    assert not cic_member(seq(G, (1,)), pm)
    assert cic_member(seq(G, (1,), (1,)), pm)
    assert cic_member(seq(G, (1,), (3,)), pm)
    assert cic_seed(pm) == seq(G, (1,), (1,))

def test_closure_matches_bounded_search():
    G = make_group([4])
    pm = plus_minus(G)
    for S in all_sequences(G, 2, min_length=1):
        if cic_member(S, pm):
            assert cic_member_bruteforce(S, pm)

def test_closure_without_characterization():
    G = make_group([3])
    with pytest.raises(HypothesisNotMet):
        cic_member(seq(G, (1,)), plus_minus(G))

# Parity criterion for Aut(G)

def test_a3_simple_cases():
    G = make_group([2, 4])
    assert a3_membership(seq(G, (0, 1), (0, 1)))[0]
    assert not a3_membership(seq(G, (0, 1)))[0]
    member, state = a3_membership(Sequence.empty(G))
    assert member and state.zero_sequence

def test_a3_agrees_with_weighted_sums():
    G = make_group([2, 4])
    aut = weight_set_from_spec(G, "aut")
    for S in all_sequences(G, 3):
        assert a3_membership(S)[0] == is_wzs(S, aut), S.serialize()

def test_a3_trace_depth_bounded_by_rank():
    G = make_group([2, 4, 8])
    state = a3_trace(seq(G, (1, 1, 1), (0, 2, 4)))
    assert 1 <= state.t <= 3

@pytest.mark.parametrize("factors", [[2, 2], [3], [4, 4]])
def test_a3_group_shape(factors):
    G = make_group(factors)
    with pytest.raises(GroupShapeUnsupported):
        a3_trace(seq(G, G.elements[1].coordinates))

# Class semigroup

def test_class_semigroup_c3():
    G = make_group([3])
    cs = class_semigroup(G, plus_minus(G))
    assert len(cs) == 3
    assert cs.idempotents == [0, 2]
    assert cs.is_commutative()
    assert cs.is_associative()
    assert cs.idempotents_are_subgroups()
    assert cs.class_of(seq(G, (1,))) == 1

def test_class_semigroup_cap():
    G = make_group([2, 4])
    with pytest.raises(CapExceeded):
        class_semigroup(G, plus_minus(G), cap=1)

# Krull properties

def test_elementary_two_group_is_krull():
    G = make_group([2, 2])
    report = theorem44_verdict(G, plus_minus(G))
    assert report.krull_expected
    assert report.witness is None

@pytest.mark.parametrize("factors, spec, case", [
    ([3], "pm", 1),
    ([4], "pm", 2),
    ([2, 2], "aut", 3),
])
def test_fraction_witnesses(factors, spec, case):
    G = make_group(factors)
    weights = weight_set_from_spec(G, spec)
    assert applicable_witness_case(G, weights) == case
    witness = nonweakly_krull_witness(G, weights, case)
    assert witness.verified, witness.failures
    report = theorem44_verdict(G, weights)
    assert report.weakly_krull_expected is False
    assert report.witness_case == f"case {case}"
    assert report.witness_verified

def test_witness_case_hypothesis():
    G = make_group([4])
    with pytest.raises(HypothesisNotMet):
        nonweakly_krull_witness(G, plus_minus(G), 1)

def test_height_one_primes_and_submonoids(pm_c3, c3):
    primes = height_one_primes(pm_c3)
    assert len(primes) == 3
    assert seq(c3, (1,), (1,)) in primes[1]
    assert seq(c3, (1,), (1,)) not in primes[2]
    assert len(divisor_closed_submonoids(pm_c3)) == 8
    with pytest.raises(CapExceeded):
        divisor_closed_submonoids(pm_c3, cap=2)
