# Sequence module
from .gsubset import GSubset, sumset_mask
from .sequences import Sequence, all_sequences
from .sums import (
    sigma,
    sigma_gamma,
    sigma_gamma_mask,
    is_wzs,
    big_sigma_gamma,
    is_wzs_free,
    is_wzs_bruteforce,
    divides_in_monoid,
    quotient,
)

__all__ = [
    'GSubset',
    'sumset_mask',
    'Sequence',
    'all_sequences',
    'sigma',
    'sigma_gamma',
    'sigma_gamma_mask',
    'is_wzs',
    'big_sigma_gamma',
    'is_wzs_free',
    'is_wzs_bruteforce',
    'divides_in_monoid',
    'quotient',
]
