"""
Seminormalization and complete integral closure of B_Γ(G)

For Γ ⊇ {±id}, S ∈ F(G) lies in the seminormalization iff some odd power
of S is a member. The complete integral closure has closed forms in two
cases: σ(S) ∈ 2G for Γ = {±id} with exp(G) | 4, and an even number of
letters of maximal order for Γ = Aut(G) over 2-groups with distinct
invariant factors.
"""
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from wzslab.config import AUT_CAP, CIC_C_LEN_CAP, CIC_K_MAX, DEFAULT_SEMINORMAL_BOUND
from wzslab.errors import HypothesisNotMet, WeightSetLacksPM
from wzslab.group_module import WeightKind, element_order, enumerate_automorphisms, plus_minus, two_G
from wzslab.logger import logger
from wzslab.sequence_module import Sequence, all_sequences, is_wzs, sigma, sigma_gamma_mask, sumset_mask

@dataclass
class StructureReport:
    """
    Verdicts on the algebraic structure of one monoid

    Fields left as None were not examined. A negative seminormality
    verdict always carries a witness S ∈ B' \\ B.
    """
    monoid: str
    seminormal: Optional[bool] = None
    seminormal_predicted: Optional[bool] = None
    search_bound: Optional[int] = None
    root_closed_expected: Optional[bool] = None
    krull_expected: Optional[bool] = None
    weakly_krull_expected: Optional[bool] = None
    transfer_krull_expected: Optional[bool] = None
    witness: Optional[Sequence] = None
    witness_case: str = ""
    witness_verified: Optional[bool] = None
    notes: list = field(default_factory=list)

    @property
    def agrees(self):
        """Search verdict matches the characterization (None when either is missing)"""
        if self.seminormal is None or self.seminormal_predicted is None:
            return None
        return self.seminormal == self.seminormal_predicted

    def as_dict(self):
        return {
            "monoid": self.monoid,
            "seminormal": self.seminormal,
            "seminormal_predicted": self.seminormal_predicted,
            "agrees": self.agrees,
            "search_bound": self.search_bound,
            "root_closed_expected": self.root_closed_expected,
            "krull_expected": self.krull_expected,
            "weakly_krull_expected": self.weakly_krull_expected,
            "transfer_krull_expected": self.transfer_krull_expected,
            "witness": self.witness.serialize() if self.witness is not None else None,
            "witness_case": self.witness_case,
            "witness_verified": self.witness_verified,
            "notes": list(self.notes),
        }

def _require_pm(weights):
    if not weights.contains_pm():
        raise WeightSetLacksPM(f"weight set {weights.label()} does not contain id and -id")

def _is_full_aut(weights):
    if weights.kind is WeightKind.FULL_AUT:
        return True
    G = weights.group
    return weights.is_subset_of_aut() and len(weights) == len(enumerate_automorphisms(G))

def has_distinct_two_power_factors(G):
    """G ≅ C_{2^t_1} ⊕ ... ⊕ C_{2^t_r} with t_1 < ... < t_r"""
    factors = G.invariant_factors
    return (G.order > 1 and G.is_two_group()
            and all(a < b for a, b in zip(factors, factors[1:])))

# Seminormalization

def seminormalization_member(S, weights):
    """
    S ∈ B_Γ(G)' iff S^m ∈ B_Γ(G) for some odd m ≤ 2|G| + 1

    σ_Γ(S^(m+2)) = σ_Γ(S^m) + σ_Γ(S²) ⊇ σ_Γ(S^m) since 0 ∈ σ_Γ(S²), so the
    odd-power value sets form a chain that stops growing within |G| steps.
    """
    _require_pm(weights)
    G = S.group
    zero = G.zero.index
    mask = sigma_gamma_mask(S, weights)
    square = np.flatnonzero(sigma_gamma_mask(S ** 2, weights))
    for _ in range(G.order + 1):
        if mask[zero]:
            return True
        grown = sumset_mask(G, mask, square)
        if np.array_equal(grown, mask):
            return False
        mask = grown
    return bool(mask[zero])

def seminormal_prediction(weights):
    """
    Seminormality as characterized for Γ ⊇ {±id}, Γ ⊆ Aut(G)

    {±id}: exp(G) | 4. Aut(G): a 2-group with pairwise distinct invariant
    factors. Otherwise known only to fail when exp(G) is not a power of 2.
    """
    G = weights.group
    if G.order == 1:
        return True
    if not weights.is_subset_of_aut():
        return None
    if weights.same_set(plus_minus(G)):
        return 4 % G.exponent == 0
    if G.exponent & (G.exponent - 1):
        return False
    if G.order <= AUT_CAP and _is_full_aut(weights):
        return has_distinct_two_power_factors(G)
    return None

def find_seminormal_witness(G, weights, length_bound):
    """First S (canonical order) with |S| ≤ length_bound in B' \\ B, or None"""
    _require_pm(weights)
    for S in all_sequences(G, length_bound, min_length=1):
        if is_wzs(S, weights):
            continue
        if seminormalization_member(S, weights):
            return S
    return None

def is_seminormal(G, weights, length_bound=DEFAULT_SEMINORMAL_BOUND):
    """Bounded witness search next to the characterization"""
    _require_pm(weights)
    report = StructureReport(monoid=f"B_{weights.label()}({G.label()})", search_bound=length_bound)
    report.seminormal_predicted = seminormal_prediction(weights)
    witness = find_seminormal_witness(G, weights, length_bound)
    if witness is None:
        report.seminormal = True
        report.notes.append(f"no witness of length <= {length_bound}")
    else:
        # re-check before publishing
        report.witness_verified = (not is_wzs(witness, weights)) and seminormalization_member(witness, weights)
        report.seminormal = False
        report.witness = witness
        report.witness_case = "odd power in monoid"
    logger.debug(f"{report.monoid}: seminormal={report.seminormal}, predicted={report.seminormal_predicted}")
    return report

# Complete integral closure

def max_order_count(S):
    """n(S): letters of order exp(G)"""
    G = S.group
    return sum(v for g, v in zip(G.elements, S.key()) if v and element_order(g) == G.exponent)

def _cic_rule(weights):
    G = weights.group
    if weights.same_set(plus_minus(G)) and 4 % G.exponent == 0:
        return "pm"
    if has_distinct_two_power_factors(G) and _is_full_aut(weights):
        return "aut"
    raise HypothesisNotMet(
        f"no closure characterization for B_{weights.label()}({G.label()}): "
        "need ±id with exp(G) | 4, or Aut(G) with distinct 2-power factors")

def cic_member(S, weights):
    """S in the complete integral closure of B_Γ(G)"""
    rule = _cic_rule(weights)
    G = S.group
    if rule == "pm":
        return sigma(S) in two_G(G)
    return max_order_count(S) % 2 == 0

def cic_seed(weights):
    """
    The closure witness c from the characterization proofs:
    f_1²···f_t² over the order-4 basis elements for ±id, e_r² for Aut(G)
    """
    rule = _cic_rule(weights)
    G = weights.group
    basis = G.basis()
    if rule == "pm":
        return Sequence.from_elements(G, [e for e, n in zip(basis, G.invariant_factors) if n == 4] * 2)
    return Sequence.from_elements(G, [basis[-1]] * 2)

def cic_member_bruteforce(S, weights, c_len_cap=CIC_C_LEN_CAP, k_max=CIC_K_MAX):
    """
    ∃ c ∈ B_Γ(G) with |c| ≤ c_len_cap and c·S^k ∈ B_Γ(G) for k ∈ [1, k_max]

    A bounded cross-check only. The proof's c is tried first, then every
    member in canonical order.
    """
    G = S.group

    def works(c):
        return all(is_wzs(c * S ** k, weights) for k in range(1, k_max + 1))

    try:
        seed = cic_seed(weights)
    except HypothesisNotMet:
        seed = None
    if seed is not None and is_wzs(seed, weights) and works(seed):
        return True
    for c in all_sequences(G, c_len_cap):
        if is_wzs(c, weights) and works(c):
            return True
    return False
