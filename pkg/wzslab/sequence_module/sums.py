"""
Sums of sequences: σ, σ_Γ, Σ_Γ, weighted zero-sum membership and
divisibility inside B_Γ(G0)

σ_Γ is folded one occurrence at a time, adding the orbit {γ(g) : γ ∈ Γ}
to the running set, so the cost is |S|·|G|·|Γ| rather than |Γ|^|S|.
"""
from itertools import product

import numpy as np

from wzslab.errors import GroupMismatch, NotInMonoid
from wzslab.sequence_module.gsubset import GSubset, sumset_mask

def _check(S, weights):
    if S.group != weights.group:
        raise GroupMismatch("sequence and weight set live over different groups")

def sigma(S):
    """The ordinary sum g_1 + ... + g_l"""
    G = S.group
    if not G.rank:
        return G.zero
    coords = (S.exponents @ G.coordinate_array) % np.array(G.invariant_factors, dtype=np.int64)
    return G.element(tuple(int(a) for a in coords))

def sigma_gamma_mask(S, weights, start=None):
    """Characteristic array of σ_Γ(S), optionally folded onto a start set"""
    G = S.group
    if start is None:
        mask = np.zeros(G.order, dtype=bool)
        mask[G.zero.index] = True
    else:
        mask = start
    orbits = weights.orbit_indices
    for i, v in enumerate(S.key()):
        for _ in range(v):
            mask = sumset_mask(G, mask, orbits[i])
    return mask

def sigma_gamma(S, weights):
    """σ_Γ(S) = {γ_1(g_1) + ... + γ_l(g_l)}; σ_Γ(1) = {0}"""
    _check(S, weights)
    return GSubset(S.group, sigma_gamma_mask(S, weights))

def is_wzs(S, weights):
    """True iff 0 ∈ σ_Γ(S); the empty sequence is a member"""
    _check(S, weights)
    return bool(sigma_gamma_mask(S, weights)[S.group.zero.index])

def big_sigma_gamma(S, weights):
    """Σ_Γ(S): weighted sums over all nonempty subsequences"""
    _check(S, weights)
    G = S.group
    reach = np.zeros(G.order, dtype=bool)
    orbits = weights.orbit_indices
    for i, v in enumerate(S.key()):
        orbit_mask = np.zeros(G.order, dtype=bool)
        orbit_mask[orbits[i]] = True
        for _ in range(v):
            reach = reach | sumset_mask(G, reach, orbits[i]) | orbit_mask
    return GSubset(G, reach)

def is_wzs_free(S, weights):
    return S.group.zero.index not in big_sigma_gamma(S, weights).indices()

def is_wzs_bruteforce(S, weights):
    """Membership by trying every weight tuple; only for small test inputs"""
    _check(S, weights)
    G = S.group
    elements = S.elements()
    if not elements:
        return True
    for gammas in product(weights.endos, repeat=len(elements)):
        total = G.zero
        for gamma, g in zip(gammas, elements):
            total = total + gamma(g)
        if total.is_zero():
            return True
    return False

def quotient(U, B):
    """B · U^{-1} as a multiset difference"""
    return B / U

def divides_in_monoid(U, B, weights):
    """U | B inside B_Γ: U ≤ B as multisets and B·U^{-1} is a member"""
    if not is_wzs(U, weights):
        raise NotInMonoid(f"{U.serialize()} is not a weighted zero-sum sequence")
    if not is_wzs(B, weights):
        raise NotInMonoid(f"{B.serialize()} is not a weighted zero-sum sequence")
    if not U.divides(B):
        return False
    return is_wzs(B / U, weights)
