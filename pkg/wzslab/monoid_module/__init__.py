# Monoid module
from .handle import MonoidHandle, atom_length_bound, davenport_star
from .lattice import LengthLattice, mask_to_lengths
from .factorization import (
    Factorization,
    LengthSet,
    factorizations,
    set_of_lengths,
    distance,
    catenary_from_factorizations,
    catenary_of_element,
)
from .invariants import (
    BoundedValue,
    UnionOfLengths,
    SpecialLemmaCertificate,
    davenport_large,
    davenport_small,
    davenport_lower_bound_pm,
    is_factorial,
    special_lemma_certificate,
    omega_upper_certificate,
    delta_set,
    delta_set_bounded,
    catenary_degree,
    unions_Uk,
    rho_k,
    lambda_k,
    elasticity_at_bound,
    length_system,
    characterization_probe,
    omega_of_atom,
    omega,
    remark_omega_witness,
    atoms_contained,
)
from .predictions import PredictedInterval, theorem62_prediction, lemma63_witness

def atoms(H):
    """The canonically ordered atom list of H"""
    return list(H.atoms)

__all__ = [
    'MonoidHandle',
    'atom_length_bound',
    'davenport_star',
    'LengthLattice',
    'mask_to_lengths',
    'Factorization',
    'LengthSet',
    'factorizations',
    'set_of_lengths',
    'distance',
    'catenary_from_factorizations',
    'catenary_of_element',
    'BoundedValue',
    'UnionOfLengths',
    'SpecialLemmaCertificate',
    'davenport_large',
    'davenport_small',
    'davenport_lower_bound_pm',
    'is_factorial',
    'special_lemma_certificate',
    'omega_upper_certificate',
    'delta_set',
    'delta_set_bounded',
    'catenary_degree',
    'unions_Uk',
    'rho_k',
    'lambda_k',
    'elasticity_at_bound',
    'length_system',
    'characterization_probe',
    'omega_of_atom',
    'omega',
    'remark_omega_witness',
    'atoms_contained',
    'PredictedInterval',
    'theorem62_prediction',
    'lemma63_witness',
    'atoms',
]
