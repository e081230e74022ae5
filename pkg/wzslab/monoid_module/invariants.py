"""
Global invariants of B_Γ(G0)

Bounded explorations always say whether a value is exact (an upper-bound
certificate applies) or only a lower bound at the explored cap.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

import numpy as np

from wzslab.config import OMEGA_NODE_BUDGET
from wzslab.errors import NotAnAtom, VerificationFailed
from wzslab.group_module import identity_weights, is_cyclic_prime, plus_minus
from wzslab.logger import logger
from wzslab.monoid_module.factorization import (
    catenary_from_factorizations,
    factorizations,
)
from wzslab.monoid_module.handle import MonoidHandle
from wzslab.monoid_module.lattice import mask_to_lengths
from wzslab.sequence_module import Sequence, sumset_mask

@dataclass(frozen=True)
class BoundedValue:
    """A value found by bounded search, with its exactness flag"""
    value: object  # int, or the sorted gaps for Δ
    exact: bool
    bound: int
    certificate: str = ""

    def as_dict(self):
        return {"value": self.value, "exact": self.exact, "bound": self.bound, "certificate": self.certificate}

@dataclass(frozen=True)
class UnionOfLengths:
    k: int
    bound: int
    values: tuple
    bound_too_small: bool

    @property
    def rho(self):
        return self.values[-1] if self.values else None

    @property
    def lam(self):
        return self.values[0] if self.values else None

    def is_interval(self):
        return bool(self.values) and self.values[-1] - self.values[0] + 1 == len(self.values)

    def as_dict(self):
        return {
            "k": self.k,
            "bound": self.bound,
            "values": list(self.values),
            "rho_k": self.rho,
            "lambda_k": self.lam,
            "interval": self.is_interval(),
            "bound_too_small": self.bound_too_small,
        }

@dataclass(frozen=True)
class SpecialLemmaCertificate:
    """Every sequence over G• of length p-1 has σ_± = G"""
    p: int
    checked: int
    holds: bool

# Davenport constants

def davenport_large(H):
    """D(H): maximal atom length"""
    return max((len(a) for a in H.atoms), default=0)

def davenport_small(H):
    """
    d(H): maximal length of a Γ-weighted zero-sum free sequence over G0

    Zero-sum freeness passes to subsequences, so the search grows only
    free sequences (non-decreasing letters) and stops at a level with none.
    """
    G = H.group
    zero = G.zero.index
    orbits = H.weights.orbit_indices
    positions = H.support_indices
    empty = np.zeros(G.order, dtype=bool)
    frontier = [((), empty)]
    best = 0
    while frontier:
        nxt = []
        for letters, reach in frontier:
            first = letters[-1] if letters else 0
            for p in range(first, len(positions)):
                idx = positions[p]
                orbit_mask = np.zeros(G.order, dtype=bool)
                orbit_mask[orbits[idx]] = True
                grown = reach | sumset_mask(G, reach, orbits[idx]) | orbit_mask
                if not grown[zero]:
                    nxt.append((letters + (p,), grown))
        if nxt:
            best = len(nxt[0][0])
        frontier = nxt
    return best

def davenport_lower_bound_pm(G):
    """1 + Σ_{n_i odd}(n_i - 1) + Σ_{n_i even} n_i/2 ≤ D_±(G)"""
    return 1 + sum(n - 1 for n in G.invariant_factors if n % 2) + sum(n // 2 for n in G.invariant_factors if n % 2 == 0)

# Certificates

def is_factorial(H):
    """Atoms with linearly independent exponent vectors factor uniquely"""
    matrix = H.atom_matrix
    if not len(matrix):
        return True
    return int(np.linalg.matrix_rank(matrix.astype(float))) == len(matrix)

def _is_full_pm_prime_cyclic(H):
    G = H.group
    return (is_cyclic_prime(G) and G.order >= 3 and len(H.support) == G.order
            and H.weights.same_set(plus_minus(G)))

@lru_cache(maxsize=None)
def special_lemma_certificate(p):
    """
    Check exhaustively that σ_±(S) = C_p for every S over C_p• with |S| = p-1

    Longer sequences follow: adding letters to a full sumset keeps it full.
    """
    from wzslab.group_module import make_group
    G = make_group([p])
    orbits = plus_minus(G).orbit_indices
    checked = 0
    holds = True
    for letters in combinations_with_replacement(range(1, p), p - 1):
        mask = np.zeros(G.order, dtype=bool)
        mask[0] = True
        for i in letters:
            mask = sumset_mask(G, mask, orbits[i])
        checked += 1
        if not mask.all():
            holds = False
            break
    return SpecialLemmaCertificate(p=p, checked=checked, holds=holds)

def omega_upper_certificate(H):
    """ω(H) ≤ p for B_±(C_p), p ≥ 3, when the covering lemma checks out; else None"""
    if not _is_full_pm_prime_cyclic(H):
        return None
    p = H.group.order
    cert = special_lemma_certificate(p)
    if not cert.holds:
        return None
    return p

# Bounded invariants

def delta_set(H, bound):
    """Δ(H) restricted to members of length ≤ bound"""
    gaps = set()
    for mask in H.lattice(bound).masks(bound):
        lengths = mask_to_lengths(mask)
        gaps.update(b - a for a, b in zip(lengths, lengths[1:]))
    return sorted(gaps)

def delta_set_bounded(H, bound):
    """
    Δ(H)@bound with its exactness flag

    Exact when H is factorial (Δ empty) or, for B_±(C_p), when every gap in
    [1, p-2] was seen: Δ ⊆ [1, c-2] and c ≤ ω ≤ p.
    """
    gaps = tuple(delta_set(H, bound))
    if is_factorial(H):
        return BoundedValue(gaps, True, bound, "factorial")
    upper = omega_upper_certificate(H)
    if upper is not None and gaps == tuple(range(1, upper - 1)):
        return BoundedValue(gaps, True, bound, "prime-cyclic covering lemma")
    return BoundedValue(gaps, False, bound)

def catenary_degree(H, bound):
    """
    max c(b) over members with |b| ≤ bound

    Exact when H is factorial (value 0) or when the prime-cyclic sandwich
    p ≤ 2 + max Δ ≤ c ≤ ω ≤ p applies and the search reached p.
    """
    lattice = H.lattice(bound)
    best = 0
    for b, mask in lattice.members(bound):
        # L(b) = {1} only for atoms, which factor uniquely
        if mask == 2:
            continue
        value = catenary_from_factorizations(factorizations(H, b))
        best = max(best, value)
    if is_factorial(H):
        return BoundedValue(best, True, bound, "factorial")
    upper = omega_upper_certificate(H)
    if upper is not None and best == upper:
        return BoundedValue(best, True, bound, "prime-cyclic covering lemma")
    return BoundedValue(best, False, bound)

def unions_Uk(H, k, bound):
    """U_k at the bound; ρ_k is exact only when bound ≥ k·D"""
    values = 0
    bit = 1 << k
    for mask in H.lattice(bound).masks(bound):
        if mask & bit:
            values |= mask
    too_small = bound < k * davenport_large(H)
    if too_small:
        logger.warning(f"U_{k} bound {bound} is below k·D = {k * davenport_large(H)}; ρ_{k} is only a lower bound")
    return UnionOfLengths(k=k, bound=bound, values=tuple(mask_to_lengths(values)), bound_too_small=too_small)

def rho_k(H, k, bound):
    return unions_Uk(H, k, bound).rho

def lambda_k(H, k, bound):
    return unions_Uk(H, k, bound).lam

def elasticity_at_bound(H, bound):
    """max over L(b) of max L / min L, |b| ≤ bound (lower bound for ρ(H))"""
    best = Fraction(1)
    for mask in H.lattice(bound).masks(bound):
        lengths = mask_to_lengths(mask)
        if lengths and lengths[0] > 0:
            best = max(best, Fraction(lengths[-1], lengths[0]))
    return best

def length_system(H, bound):
    """Distinct sets of lengths of members with |b| ≤ bound"""
    return sorted({tuple(mask_to_lengths(m)) for m in H.lattice(bound).masks(bound)})

def characterization_probe(H, bound):
    """ρ_2, D and whether {2, D} occurs among the truncated sets of lengths"""
    D = davenport_large(H)
    system = set(length_system(H, bound))
    return {
        "monoid": H.label(),
        "bound": bound,
        "davenport": D,
        "rho_2": rho_k(H, 2, bound) if bound >= 2 else None,
        "has_two_D": (2, D) in system,
        "distinct_length_sets": len(system),
    }

# The ω invariant

def _divides_product(H, u_exps, product_exps):
    if np.any(u_exps > product_exps):
        return False
    return H.is_member_key(tuple(int(x) for x in product_exps - u_exps))

def _is_minimal(H, u_exps, atoms, chosen, product_exps):
    """No product missing one of the chosen atoms is still divisible by u"""
    for pos in range(len(chosen)):
        if pos and chosen[pos] == chosen[pos - 1]:
            continue
        if _divides_product(H, u_exps, product_exps - atoms[chosen[pos]]):
            return False
    return True

def omega_of_atom(H, u, cap, node_budget=OMEGA_NODE_BUDGET):
    """
    Largest minimal number of atoms whose product u divides in H

    Products v_1···v_n (n ≤ cap) are grown with non-decreasing atom
    indices over all atoms: B_Γ is not saturated in F(G), so a factor
    sharing no letter with u can still be needed for P·u⁻¹ to be a member.
    A product divisible by u is minimal when dropping any single atom
    breaks divisibility
    (divisibility is monotone in the product). The search stops at the
    node budget, or as soon as a certified upper bound is reached;
    without a certificate the value is a lower bound.
    """
    if H.atom_index(u) is None:
        raise NotAnAtom(f"{u.serialize()} is not an atom of {H.label()}")
    if len(u) == 1 and u.support()[0].is_zero():
        # 0 is prime: it divides a product iff it is one of the factors
        return BoundedValue(1, True, cap, "prime")
    if is_factorial(H):
        return BoundedValue(1, True, cap, "factorial")

    upper = omega_upper_certificate(H)
    atoms = H.atom_matrix
    u_exps = u.exponents
    best = 1
    nodes = 0
    complete = True

    stack = [((), np.zeros(H.group.order, dtype=np.int64))]
    while stack:
        if upper is not None and best >= upper:
            break
        chosen, product_exps = stack.pop()
        if len(chosen) >= cap:
            continue
        start = chosen[-1] if chosen else 0
        for j in reversed(range(start, len(atoms))):
            nodes += 1
            if nodes > node_budget:
                complete = False
                stack.clear()
                break
            grown = chosen + (j,)
            grown_exps = product_exps + atoms[j]
            if _divides_product(H, u_exps, grown_exps):
                if _is_minimal(H, u_exps, atoms, grown, grown_exps):
                    best = max(best, len(grown))
                continue
            stack.append((grown, grown_exps))

    if upper is not None and best == upper:
        return BoundedValue(best, True, cap, "prime-cyclic covering lemma")
    return BoundedValue(best, False, cap, "" if complete else "node budget exhausted")

def omega(H, cap, node_budget=OMEGA_NODE_BUDGET):
    """max ω(H, u) over atoms u, longest atoms first"""
    upper = omega_upper_certificate(H)
    if upper is not None and upper <= cap:
        seeded = _remark_lower_bound(H)
        if seeded >= upper:
            return BoundedValue(upper, True, cap, "prime-cyclic covering lemma")
    best = BoundedValue(0, False, cap)
    for u in sorted(H.atoms, key=lambda a: (-len(a), a.sort_key())):
        value = omega_of_atom(H, u, cap, node_budget)
        if value.value > best.value:
            best = value
        if upper is not None and best.value >= upper:
            break
    if is_factorial(H):
        return BoundedValue(best.value, True, cap, "factorial")
    if upper is not None and best.value == upper:
        return BoundedValue(best.value, True, cap, "prime-cyclic covering lemma")
    return BoundedValue(best.value, False, cap, best.certificate)

def remark_omega_witness(H_pm, H_id):
    """
    For |G| odd: an atom U = g_1···g_l of B(G) with l = D(B(G)) and the
    product ((-g_1)g_1)···((-g_l)g_l), which U divides in B_±(G) while no
    proper subproduct does. Returns (U, factors) after verifying both
    facts, or None when the group has even order.
    """
    if H_pm.group.order % 2 == 0:
        return None
    D = davenport_large(H_id)
    U = next(a for a in H_id.atoms if len(a) == D)
    factors = [Sequence.from_elements(U.group, [-g, g]) for g in U.elements()]
    atoms = np.array([f.exponents for f in factors], dtype=np.int64)
    total = atoms.sum(axis=0)
    u_exps = U.exponents
    if not _divides_product(H_pm, u_exps, total):
        raise VerificationFailed(f"{U.serialize()} does not divide its (-g)g product")
    if not _is_minimal(H_pm, u_exps, atoms, tuple(range(len(factors))), total):
        raise VerificationFailed(f"a proper subproduct is divisible by {U.serialize()}")
    return U, factors

def _remark_lower_bound(H_pm):
    """ω(H_pm) ≥ D(B(G)) from the (-g)g witness; 0 when it does not apply"""
    G = H_pm.group
    if G.order % 2 == 0 or not H_pm.weights.same_set(plus_minus(G)):
        return 0
    witness = remark_omega_witness(H_pm, MonoidHandle(G, identity_weights(G)))
    if witness is None or H_pm.atom_index(witness[0]) is None:
        return 0
    return len(witness[1])

def atoms_contained(H_small, H_large):
    """A(H_small) ⊆ A(H_large)"""
    large = {a.key() for a in H_large.atoms}
    return all(a.key() in large for a in H_small.atoms)
