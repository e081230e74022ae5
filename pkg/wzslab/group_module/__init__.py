# Group module
from .groups import (
    FiniteAbelianGroup,
    GroupElement,
    make_group,
    elem_add,
    elem_neg,
    elem_scale,
    element_order,
    two_G,
    subgroup_generated,
    is_subgroup_indices,
    is_elementary_2,
    is_cyclic_prime,
)
from .weights import (
    Endomorphism,
    WeightKind,
    WeightSet,
    identity,
    negation,
    identity_weights,
    plus_minus,
    enumerate_automorphisms,
    weight_set_from_spec,
)

__all__ = [
    'FiniteAbelianGroup',
    'GroupElement',
    'make_group',
    'elem_add',
    'elem_neg',
    'elem_scale',
    'element_order',
    'two_G',
    'subgroup_generated',
    'is_subgroup_indices',
    'is_elementary_2',
    'is_cyclic_prime',
    'Endomorphism',
    'WeightKind',
    'WeightSet',
    'identity',
    'negation',
    'identity_weights',
    'plus_minus',
    'enumerate_automorphisms',
    'weight_set_from_spec',
]
