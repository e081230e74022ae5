import pytest

from wzslab.errors import InvalidFactor, OrderCapExceeded
from wzslab.group_module import (
    Endomorphism,
    WeightKind,
    WeightSet,
    element_order,
    enumerate_automorphisms,
    is_cyclic_prime,
    is_elementary_2,
    make_group,
    plus_minus,
    weight_set_from_spec,
)

@pytest.mark.parametrize("factors, expected", [
    ([3], (3,)),
    ([2, 3], (6,)),
    ([4, 2], (2, 4)),
    ([2, 2, 2], (2, 2, 2)),
    ([6, 4], (2, 12)),
])
def test_invariant_factor_normal_form(factors, expected):
    assert make_group(factors).invariant_factors == expected

def test_trivial_group():
    G = make_group([])
    assert G.order == 1
    assert G.label() == "C1"
    assert len(G.elements) == 1

def test_order_cap():
    with pytest.raises(OrderCapExceeded) as info:
        make_group([2] * 7, cap=64)
    assert info.value.exit_code == 2

def test_bad_factor():
    with pytest.raises(InvalidFactor):
        make_group([1, 3])

def test_element_arithmetic(c5):
    g = c5.element((1,))
    assert (3 * g).coordinates == (3,)
    assert (-g).coordinates == (4,)
    assert (g + 4 * g).is_zero()
    assert element_order(g) == 5

def test_dense_index_round_trips():
    G = make_group([2, 4])
    for i, g in enumerate(G.elements):
        assert g.index == i
        assert G.coordinates_of(i) == g.coordinates

def test_group_predicates():
    assert is_cyclic_prime(make_group([7]))
    assert not is_cyclic_prime(make_group([9]))
    assert is_elementary_2(make_group([2, 2]))
    assert not is_elementary_2(make_group([2, 4]))

def test_plus_minus_orbits(c5):
    pm = plus_minus(c5)
    assert len(pm) == 2
    assert pm.contains_pm()
    assert sorted(pm.orbit_indices[1]) == [1, 4]

def test_automorphisms_of_cyclic_group(c5):
    aut = weight_set_from_spec(c5, "aut")
    assert aut.kind is WeightKind.FULL_AUT
    assert len(aut) == 4
    assert len(enumerate_automorphisms(make_group([2, 2]))) == 6

def _scalings(G, factors):
    return [Endomorphism(G, (G.element((k,)),)) for k in factors]

def test_custom_weight_set_closure(c5):
    assert not WeightSet(c5, _scalings(c5, [1, 2])).is_group
    assert WeightSet(c5, _scalings(c5, [1, 2, 3, 4])).is_group
    assert not WeightSet(c5, _scalings(c5, [1, 0])).is_group

def test_full_automorphism_group_of_elementary_group():
    aut = enumerate_automorphisms(make_group([2, 2, 2]))
    assert len(aut) == 168
    assert aut.is_group
    assert aut.is_subset_of_aut()
