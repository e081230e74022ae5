import random
from itertools import combinations

import pytest
from sympy import factorint

from wzslab.errors import (
    DiscriminantMismatch,
    NotInNPrime,
    NotInRcirc,
    NotPrimitive,
    OutOfRange,
    PrimeDividesConductor,
    WrongSign,
)
from wzslab.qform_module import (
    Discriminant,
    QForm,
    admissible_range,
    ambiguous_classes,
    class_group,
    compose,
    enumerate_reduced,
    in_P_prime,
    in_Rcirc_via_transfer,
    is_admissible,
    is_fundamental,
    kronecker,
    lengths_in_Rcirc,
    lengths_via_sequences,
    prime_data,
    prime_signature,
    principal_form,
    rcirc_atoms,
    reduce_form,
    represents_principal_bruteforce,
    sweep_row,
    theta,
    theta_prime,
)

# Discriminants and forms

def test_discriminant_split():
    d = Discriminant.of(-92)
    assert (d.fundamental, d.conductor) == (-23, 2)
    assert Discriminant.of(-23).conductor == 1
    assert is_fundamental(-84)
    assert not is_fundamental(-92)

@pytest.mark.parametrize("value, error", [(5, WrongSign), (0, WrongSign), (-5, DiscriminantMismatch)])
def test_bad_discriminants(value, error):
    with pytest.raises(error):
        Discriminant.of(value)

def test_reduction():
    assert reduce_form(QForm(3, 1, 2)) == QForm(2, -1, 3)
    assert reduce_form(QForm(1, 0, 1)) == QForm(1, 0, 1)
    assert reduce_form(QForm(2, -2, 3)).is_reduced()
    with pytest.raises(NotPrimitive):
        reduce_form(QForm(2, 2, 2))

def _rotate(f):
    return QForm(f.c, -f.b, f.a)

def _shear(f):
    return QForm(f.a + f.b + f.c, f.b + 2 * f.c, f.c)

@pytest.mark.parametrize("delta", [-3, -23, -56, -84, -135, -191])
def test_reduction_is_a_class_invariant(delta):
    rng = random.Random(delta)
    for f in enumerate_reduced(delta):
        assert reduce_form(f) == f
        for _ in range(20):
            g = f
            for _ in range(rng.randint(1, 6)):
                g = rng.choice((_rotate, _shear))(g)
            assert g.discriminant == delta
            assert reduce_form(g) == f

@pytest.mark.parametrize("delta, forms", [
    (-4, [(1, 0, 1)]),
    (-15, [(1, 1, 4), (2, 1, 2)]),
    (-23, [(1, 1, 6), (2, 1, 3), (2, -1, 3)]),
    (-84, [(1, 0, 21), (2, 2, 11), (3, 0, 7), (5, 4, 5)]),
])
def test_reduced_forms(delta, forms):
    assert [f.key() for f in enumerate_reduced(delta)] == forms

def test_principal_form():
    assert principal_form(-23) == QForm(1, 1, 6)
    assert principal_form(-4) == QForm(1, 0, 1)

def test_composition_of_order_three_class():
    F = QForm(2, 1, 3)
    assert compose(F, F) == QForm(2, -1, 3)
    assert compose(F, F.negate()) == principal_form(-23)
    with pytest.raises(DiscriminantMismatch):
        compose(F, QForm(1, 0, 1))

# Class groups

@pytest.mark.parametrize("delta, factors", [
    (-4, ()),
    (-15, (2,)),
    (-23, (3,)),
    (-84, (2, 2)),
])
def test_class_group_structure(delta, factors):
    F = class_group(delta)
    assert F.group.invariant_factors == factors
    assert F.h == len(enumerate_reduced(delta))
    assert F.form(F.principal) == principal_form(delta)

def test_class_group_identification_is_an_isomorphism():
    F = class_group(-23)
    for i in range(F.h):
        for j in range(F.h):
            assert F.to_group[F.add(i, j)] == F.to_group[i] + F.to_group[j]

def test_ambiguous_classes():
    assert len(ambiguous_classes(-84)) == 4
    assert ambiguous_classes(-23) == [QForm(1, 1, 6)]
    assert all(f.is_ambiguous() for f in ambiguous_classes(-84))
    F = class_group(-84)
    assert all(F.from_group[g.index] == i for i, g in enumerate(F.to_group))

# Primes

@pytest.mark.parametrize("p, expected", [(2, 1), (3, 1), (5, -1), (23, 0)])
def test_kronecker(p, expected):
    assert kronecker(-23, p) == expected

@pytest.mark.parametrize("p, expected", [(2, 0), (3, 0), (5, 1), (7, 0), (11, 1), (13, -1)])
def test_kronecker_even_discriminant(p, expected):
    assert kronecker(-84, p) == expected

@pytest.mark.parametrize("d, fundamental", [
    (-3, True), (-4, True), (-8, True), (-15, True), (-84, True),
    (-12, False), (-16, False), (-92, False), (-135, False),
])
def test_is_fundamental(d, fundamental):
    assert is_fundamental(d) is fundamental

def test_kronecker_rejects_composites():
    with pytest.raises(OutOfRange):
        kronecker(-23, 4)

def test_prime_data():
    inert = prime_data(-23, 5)
    assert inert.f_p == 2 and not inert.split
    split = prime_data(-23, 2)
    assert split.split
    assert split.pair == (QForm(2, -1, 3), QForm(2, 1, 3))
    assert split.chosen == QForm(2, -1, 3)
    assert prime_data(-15, 3).chosen == QForm(2, 1, 2)
    assert prime_data(-23, 23).chosen == principal_form(-23)

def test_conductor_primes_are_excluded():
    with pytest.raises(PrimeDividesConductor):
        prime_data(-92, 2)
    assert not in_P_prime(-92, 2)
    assert in_P_prime(-92, 3)

# Transfer

def test_prime_signature():
    assert prime_signature(12) == "2^2*3"
    assert prime_signature(1) == "1"

def test_admissibility():
    assert is_admissible(-23, 8)
    assert not is_admissible(-23, 5)
    assert admissible_range(-23, 4) == [1, 2, 3, 4]

@pytest.mark.parametrize("n, member", [(1, True), (2, False), (4, True), (6, True), (8, True), (3, False)])
def test_transfer_agrees_with_brute_force(n, member):
    assert represents_principal_bruteforce(-23, n) is member
    assert in_Rcirc_via_transfer(-23, n) is member

@pytest.mark.parametrize("disc", [-23, -84])
def test_transfer_verdict_ignores_sign_choices(disc):
    for n in admissible_range(disc, 200):
        primes = sorted(factorint(n))
        expected = in_Rcirc_via_transfer(disc, n)
        for size in range(1, len(primes) + 1):
            for flip in combinations(primes, size):
                assert in_Rcirc_via_transfer(disc, n, flip=flip) is expected, (n, flip)

def test_theta_prime_and_theta():
    assert len(theta_prime(-23, 12)) == 3
    with pytest.raises(NotInNPrime):
        theta_prime(-23, 5)
    assert len(theta(-23, 25)) == 1
    with pytest.raises(NotInNPrime):
        theta(-23, 5)

def test_lengths_on_both_sides():
    assert rcirc_atoms(-23, 64) == [4, 8]
    assert lengths_in_Rcirc(-23, 64).as_list() == [2, 3]
    assert lengths_via_sequences(-23, 64).as_list() == [2, 3]
    with pytest.raises(NotInRcirc):
        lengths_in_Rcirc(-23, 2)

def test_sweep_row():
    row = sweep_row(-23, 64)
    assert row.agrees
    assert row.lengths_monoid == "{2,3}"
    assert row.as_dict()["prime_signature"] == "2^6"
