from itertools import combinations_with_replacement

import pytest

from wzslab.errors import HypothesisNotMet, NotAnAtom, OutOfRange
from wzslab.group_module import identity_weights, make_group
from wzslab.monoid_module import (
    MonoidHandle,
    catenary_degree,
    characterization_probe,
    davenport_lower_bound_pm,
    davenport_small,
    delta_set,
    delta_set_bounded,
    lemma63_witness,
    omega,
    omega_of_atom,
    remark_omega_witness,
    special_lemma_certificate,
    theorem62_prediction,
    unions_Uk,
)
from wzslab.sequence_module import Sequence

def test_small_davenport(pm_c3, plain_c5):
    assert davenport_small(plain_c5) == 4
    assert davenport_small(pm_c3) == 1

def test_pm_lower_bound():
    assert davenport_lower_bound_pm(make_group([3])) == 3
    assert davenport_lower_bound_pm(make_group([2, 4])) == 4

def test_delta_and_catenary(pm_c3):
    assert delta_set(pm_c3, 6) == [1]
    c = catenary_degree(pm_c3, 6)
    assert c.value == 3
    assert c.exact

def test_delta_exactness_flags(pm_c3, plain_c5):
    delta = delta_set_bounded(pm_c3, 6)
    assert delta.value == (1,)
    assert delta.exact
    assert not delta_set_bounded(plain_c5, 10).exact
    C2 = make_group([2])
    factorial = delta_set_bounded(MonoidHandle(C2, identity_weights(C2)), 6)
    assert factorial.value == ()
    assert factorial.exact

def test_union_of_lengths_matches_closed_form(pm_c3, c3):
    union = unions_Uk(pm_c3, 2, 6)
    assert union.values == (2, 3)
    assert not union.bound_too_small
    predicted = theorem62_prediction(c3, 2, davenport=3)
    assert (predicted.low, predicted.high) == (2, 3)
    assert predicted.values == union.values

def test_union_flags_small_bound(pm_c3):
    assert unions_Uk(pm_c3, 3, 6).bound_too_small

@pytest.mark.parametrize("k, low, high", [
    (2, 2, 3),
    (3, 2, 4),
    (4, 3, 6),
    (6, 4, 9),
])
def test_theorem62_intervals_c3(c3, k, low, high):
    p = theorem62_prediction(c3, k, davenport=3)
    assert (p.low, p.high) == (low, high)

def test_theorem62_hypotheses():
    with pytest.raises(HypothesisNotMet):
        theorem62_prediction(make_group([4]), 2, davenport=4)
    with pytest.raises(OutOfRange):
        theorem62_prediction(make_group([3]), 1, davenport=3)

def test_lemma_witness_is_sixth_power():
    b, lengths = lemma63_witness(3, 3)
    assert b.serialize() == "[(1)^6]"
    assert lengths.as_list() == [2, 3]

def test_special_lemma_certificate():
    cert = special_lemma_certificate(5)
    assert cert.holds
    assert cert.checked > 0

def test_omega_prime_cyclic(pm_c3, c3):
    value = omega(pm_c3, 6)
    assert value.value == 3
    assert value.exact
    zero_atom = Sequence.from_elements(c3, [c3.zero])
    assert omega_of_atom(pm_c3, zero_atom, 6).value == 1
    with pytest.raises(NotAnAtom):
        omega_of_atom(pm_c3, Sequence.from_elements(c3, [c3.element((1,))] * 4), 6)

def _omega_by_enumeration(H, u, cap):
    atoms = H.atom_matrix
    u_exps = u.exponents

    def divides(exps):
        return bool((u_exps <= exps).all()) and H.is_member_key(tuple(int(x) for x in exps - u_exps))

    best = 0
    for n in range(1, cap + 1):
        for combo in combinations_with_replacement(range(len(atoms)), n):
            total = atoms[list(combo)].sum(axis=0)
            if divides(total) and not any(divides(total - atoms[j]) for j in set(combo)):
                best = n
    return best

def test_omega_uses_atoms_disjoint_from_u(pm_c5, c5):
    g = c5.element((1,))
    u = Sequence.from_elements(c5, [g, g])
    # (2g)^2 (2g)^2 g^2(2g): dropping a (2g)^2 leaves (2g)^3, not a member
    assert omega_of_atom(pm_c5, u, 3).value == 3

def test_omega_matches_enumeration(pm_c5):
    for u in pm_c5.atoms:
        if len(u) == 2:
            assert omega_of_atom(pm_c5, u, 3).value == _omega_by_enumeration(pm_c5, u, 3), u.serialize()

def test_omega_prime_cyclic_c5(pm_c5):
    value = omega(pm_c5, 6)
    assert value.value == 5
    assert value.exact

def test_remark_witness(pm_c3):
    G = pm_c3.group
    U, factors = remark_omega_witness(pm_c3, MonoidHandle(G, identity_weights(G)))
    assert len(U) == 3
    assert len(factors) == 3

def test_characterization_probe(plain_c5):
    probe = characterization_probe(plain_c5, 10)
    assert probe["davenport"] == 5
    assert probe["rho_2"] == 5
    assert probe["has_two_D"]
