"""
Closed-form predictions for plus-minus weighted monoids over groups of odd
order, used as oracles against the bounded computations.
"""
from dataclasses import dataclass

from wzslab.errors import HypothesisNotMet, OutOfRange, VerificationFailed
from wzslab.group_module import identity_weights, make_group, plus_minus
from wzslab.logger import logger
from wzslab.monoid_module.factorization import set_of_lengths
from wzslab.monoid_module.handle import MonoidHandle, davenport_star
from wzslab.monoid_module.invariants import davenport_large
from wzslab.sequence_module import Sequence

@dataclass(frozen=True)
class PredictedInterval:
    k: int
    ell: int
    j: int
    low: int
    high: int
    case: str

    @property
    def values(self):
        return tuple(range(self.low, self.high + 1))

    def as_dict(self):
        return {"k": self.k, "ell": self.ell, "j": self.j, "interval": [self.low, self.high], "case": self.case}

def theorem62_prediction(G, k, davenport=None):
    """
    U_k(B_±(G)) for |G| odd with D(G) = D*(G) ≥ 3

    Write k = ℓD + j with j ∈ [0, D-1]. The maximum is ⌊kD/2⌋; the
    minimum depends on where j falls relative to (D-1)/2.

    Args:
        G: FiniteAbelianGroup
        k: at least 2
        davenport: D(G) if already known; computed from B(G) otherwise
    """
    if k < 2:
        raise OutOfRange(f"k = {k} must be at least 2")
    if G.order % 2 == 0:
        raise HypothesisNotMet(f"{G.label()} has even order")
    if davenport is None:
        davenport = davenport_large(MonoidHandle(G, identity_weights(G)))
    star = davenport_star(G)
    if davenport != star or davenport < 3:
        raise HypothesisNotMet(f"need D(G) = D*(G) ≥ 3, got D = {davenport}, D* = {star}")

    D = davenport
    d = D - 1
    ell, j = divmod(k, D)
    high = k * D // 2
    if ell == 0:
        low, case = 2, "j in [2, d], l = 0"
    elif j == 0:
        low, case = 2 * ell, "j = 0, l >= 1"
    elif j <= d // 2:
        low, case = 2 * ell + 1, "j in [1, d/2], l >= 1"
    else:
        low, case = 2 * ell + 2, "j in [d/2 + 1, d], l >= 1"
    return PredictedInterval(k=k, ell=ell, j=j, low=low, high=high, case=case)

def lemma63_witness(n, j, handle=None):
    """
    b = g^n · g^(n-k)(kg) with k = n - j + 1 over C_n, verified to have
    L(b) = {2, j} in B_±(C_n). For j = n this is g^(2n).

    Returns:
        (b, LengthSet)
    """
    if n < 3 or n % 2 == 0:
        raise OutOfRange(f"n = {n} must be odd and at least 3")
    if not 3 <= j <= n:
        raise OutOfRange(f"j = {j} is outside [3, {n}]")
    k = n - j + 1
    if handle is None:
        G = make_group([n])
        handle = MonoidHandle(G, plus_minus(G))
    G = handle.group
    g = G.element((1,))
    b = Sequence.from_elements(G, [g] * n + [g] * (n - k) + [k * g])
    lengths = set_of_lengths(handle, b)
    if lengths.as_list() != [2, j]:
        raise VerificationFailed(f"L({b.serialize()}) = {lengths}, expected {{2,{j}}}")
    logger.debug(f"L({b.serialize()}) = {lengths}")
    return b, lengths
