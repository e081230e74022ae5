# Parse module
from .parse import parse_group_spec, parse_weight_spec, parse_sequence, parse_discriminant

__all__ = [
    'parse_group_spec',
    'parse_weight_spec',
    'parse_sequence',
    'parse_discriminant',
]
