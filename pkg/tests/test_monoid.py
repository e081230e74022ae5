import pytest

from wzslab.errors import NotInMonoid, OrderCapExceeded
from wzslab.group_module import identity_weights, make_group, plus_minus
from wzslab.monoid_module import (
    LengthSet,
    MonoidHandle,
    catenary_of_element,
    davenport_large,
    distance,
    factorizations,
    is_factorial,
    set_of_lengths,
)
from wzslab.sequence_module import Sequence

def power(G, coords, k):
    return Sequence.from_elements(G, [G.element(coords)] * k)

def test_atoms_of_plus_minus_c3(pm_c3):
    atoms = pm_c3.atoms
    assert len(atoms) == 8
    assert atoms[0].serialize() == "[(0)]"
    assert [len(a) for a in atoms] == sorted(len(a) for a in atoms)
    assert "[(1)^3]" in {a.serialize() for a in atoms}
    assert davenport_large(pm_c3) == 3

def test_atom_matrix_matches_atoms(pm_c3):
    assert pm_c3.atom_matrix.shape == (8, 3)
    assert not pm_c3.atom_matrix.flags.writeable

def test_plain_c5_davenport(plain_c5):
    assert davenport_large(plain_c5) == 5

def test_lengths_of_sixth_power(pm_c3, c3):
    b = power(c3, (1,), 6)
    assert set_of_lengths(pm_c3, b).as_list() == [2, 3]
    zs = factorizations(pm_c3, b)
    assert sorted(len(z) for z in zs) == [2, 3]
    assert all(z.product() == b for z in zs)
    assert distance(zs[0], zs[1]) == 3
    assert catenary_of_element(pm_c3, b) == 3

def test_lengths_of_plain_c5_witness(plain_c5, c5):
    b = power(c5, (1,), 5) * power(c5, (4,), 5)
    assert set_of_lengths(plain_c5, b).as_list() == [2, 5]

def test_non_member_rejected(pm_c3, c3):
    with pytest.raises(NotInMonoid):
        set_of_lengths(pm_c3, power(c3, (1,), 1))
    assert pm_c3.lengths_mask(power(c3, (1,), 1)) == 0

def test_empty_sequence_has_length_zero(pm_c3, c3):
    assert set_of_lengths(pm_c3, Sequence.empty(c3)).as_list() == [0]

def test_length_set_helpers():
    L = LengthSet.from_mask(0b101100)
    assert L.as_list() == [2, 3, 5]
    assert repr(L) == "{2,3,5}"
    assert L.gaps() == {1, 2}
    assert (L.min, L.max) == (2, 5)

def test_factorial_detection(pm_c3):
    c2 = make_group([2])
    assert is_factorial(MonoidHandle(c2, identity_weights(c2)))
    assert not is_factorial(pm_c3)

def test_restricted_support(c5):
    G0 = [c5.element((1,)), c5.element((4,))]
    H = MonoidHandle(c5, identity_weights(c5), support=G0)
    assert sorted(a.serialize() for a in H.atoms) == ["[(1),(4)]", "[(1)^5]", "[(4)^5]"]
    with pytest.raises(NotInMonoid):
        H.contains(power(c5, (2,), 5))

def test_order_cap_on_handle():
    G = make_group([4, 4])
    with pytest.raises(OrderCapExceeded):
        MonoidHandle(G, plus_minus(G), order_cap=8)
