# Structure module
from .closures import (
    StructureReport,
    has_distinct_two_power_factors,
    seminormalization_member,
    seminormal_prediction,
    find_seminormal_witness,
    is_seminormal,
    max_order_count,
    cic_member,
    cic_seed,
    cic_member_bruteforce,
)
from .a3 import A3Level, A3State, a3_trace, a3_membership
from .class_semigroup import ClassSemigroup, class_semigroup
from .krull import (
    HeightOnePrime,
    FractionWitness,
    NonWeaklyKrullWitness,
    height_one_primes,
    divisor_closed_submonoids,
    nonweakly_krull_witness,
    verify_nonweakly_krull_witness,
    applicable_witness_case,
    theorem44_verdict,
)

__all__ = [
    'StructureReport',
    'has_distinct_two_power_factors',
    'seminormalization_member',
    'seminormal_prediction',
    'find_seminormal_witness',
    'is_seminormal',
    'max_order_count',
    'cic_member',
    'cic_seed',
    'cic_member_bruteforce',
    'A3Level',
    'A3State',
    'a3_trace',
    'a3_membership',
    'ClassSemigroup',
    'class_semigroup',
    'HeightOnePrime',
    'FractionWitness',
    'NonWeaklyKrullWitness',
    'height_one_primes',
    'divisor_closed_submonoids',
    'nonweakly_krull_witness',
    'verify_nonweakly_krull_witness',
    'applicable_witness_case',
    'theorem44_verdict',
]
