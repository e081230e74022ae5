# Quadratic form module
from .forms import (
    Discriminant,
    QForm,
    is_fundamental,
    reduce_form,
    enumerate_reduced,
    principal_form,
    compose,
)
from .class_group import FormClassGroup, class_group
from .primes import PrimeData, kronecker, prime_data, in_P_prime
from .transfer import (
    SweepRow,
    TransferContext,
    transfer_context,
    prime_signature,
    is_admissible,
    admissible_range,
    theta_prime,
    theta,
    in_Rcirc_via_transfer,
    in_Rcirc_via_full_theta,
    represents_principal_bruteforce,
    rcirc_member,
    rcirc_atoms,
    lengths_in_Rcirc,
    lengths_via_sequences,
    discriminant_info,
    sweep_row,
)

def ambiguous_classes(disc):
    """Reduced forms of the 2-torsion classes of F_Δ"""
    F = class_group(int(disc))
    return [F.form(i) for i in F.ambiguous_classes()]

__all__ = [
    'Discriminant',
    'QForm',
    'is_fundamental',
    'reduce_form',
    'enumerate_reduced',
    'principal_form',
    'compose',
    'FormClassGroup',
    'class_group',
    'ambiguous_classes',
    'PrimeData',
    'kronecker',
    'prime_data',
    'in_P_prime',
    'SweepRow',
    'TransferContext',
    'transfer_context',
    'prime_signature',
    'is_admissible',
    'admissible_range',
    'theta_prime',
    'theta',
    'in_Rcirc_via_transfer',
    'in_Rcirc_via_full_theta',
    'represents_principal_bruteforce',
    'rcirc_member',
    'rcirc_atoms',
    'lengths_in_Rcirc',
    'lengths_via_sequences',
    'discriminant_info',
    'sweep_row',
]
