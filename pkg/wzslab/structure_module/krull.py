"""
Height-one primes, divisor-closed submonoids and the weakly Krull
property of B_Γ(G0)
"""
from dataclasses import dataclass
from itertools import combinations

from wzslab.config import DIVISOR_CLOSED_CAP
from wzslab.errors import CapExceeded, HypothesisNotMet
from wzslab.group_module import element_order, is_elementary_2, plus_minus
from wzslab.logger import logger
from wzslab.sequence_module import Sequence, is_wzs
from wzslab.structure_module.closures import StructureReport

@dataclass(frozen=True)
class HeightOnePrime:
    """p_g: members of B_Γ(G0) containing g"""
    handle: object
    element: object

    def __contains__(self, S):
        return self.handle.contains(S) and S.count(self.element) >= 1

    def __repr__(self):
        return f"p_{self.element!r}"

def height_one_primes(H):
    return [HeightOnePrime(H, g) for g in H.support]

def divisor_closed_submonoids(H, cap=DIVISOR_CLOSED_CAP):
    """Supports G1 ⊆ G0 (each gives B_Γ(G1)), ordered by size then indices"""
    support = H.support
    if len(support) > cap:
        raise CapExceeded("divisor-closed submonoid cap", cap, len(support))
    return [tuple(chosen) for size in range(len(support) + 1) for chosen in combinations(support, size)]

@dataclass(frozen=True)
class FractionWitness:
    """x = a / s in the quotient group, with a, s members"""
    numerator: Sequence
    denominator: Sequence

    def as_dict(self):
        return {"numerator": self.numerator.serialize(), "denominator": self.denominator.serialize()}

@dataclass(frozen=True)
class NonWeaklyKrullWitness:
    case: int
    x: Sequence
    representations: tuple
    verified: bool
    failures: tuple = ()

    def as_dict(self):
        return {
            "case": self.case,
            "x": self.x.serialize(),
            "representations": [rep.as_dict() for rep in self.representations],
            "verified": self.verified,
            "failures": list(self.failures),
        }

def _check_weights(weights):
    if not weights.contains_pm():
        raise HypothesisNotMet(f"weight set {weights.label()} does not contain id and -id")
    if not weights.is_subset_of_aut():
        raise HypothesisNotMet(f"weight set {weights.label()} is not contained in Aut(G)")

def _candidates(G, weights, case):
    """(x, [(a, s), ...]) following the fractions for the requested case"""
    seq = lambda *elements: Sequence.from_elements(G, list(elements))
    if case == 1:
        g = next((h for h in G.elements if element_order(h) >= 3 and element_order(h) % 2), None)
        if g is None:
            raise HypothesisNotMet(f"{G.label()} has no element of odd order >= 3")
        n = element_order(g)
        x = seq(g)
        reps = [
            (seq(g, g) ** ((n + 1) // 2), seq(g) ** n),
            (seq(-g, g) * seq(-g, -g) ** ((n - 1) // 2), seq(-g) ** n),
        ]
        return x, reps
    if case == 2:
        g = next((h for h in G.elements if element_order(h) >= 4 and element_order(h) % 2 == 0), None)
        if g is None:
            raise HypothesisNotMet(f"{G.label()} has no element of even order >= 4")
        n = element_order(g)
        x = seq(2 * g)
        reps = [
            (seq(2 * g) * seq(g) ** (n - 2), seq(g) ** (n - 2)),
            (seq(2 * g) * seq(-g) ** (n - 2), seq(-g) ** (n - 2)),
        ]
        return x, reps
    if case == 3:
        if not is_elementary_2(G):
            raise HypothesisNotMet(f"{G.label()} is not an elementary 2-group")
        for tau in weights:
            e = next((h for h in G.elements if tau(h) != h), None)
            if e is not None:
                te = tau(e)
                x = seq(e + te)
                reps = [(seq(e, e, e + te), seq(e, e)), (seq(te, te, e + te), seq(te, te))]
                return x, reps
        raise HypothesisNotMet("every weight fixes G pointwise")
    raise HypothesisNotMet(f"unknown witness case {case!r} (expected 1, 2 or 3)")

def nonweakly_krull_witness(G, weights, case):
    """
    Build x ∉ B_Γ(G) together with fractions x = a/s, and check that for
    every height-one prime p_h some listed denominator avoids h
    """
    _check_weights(weights)
    x, reps = _candidates(G, weights, case)
    failures = []
    for a, s in reps:
        if x * s != a:
            failures.append(f"{x.serialize()} * {s.serialize()} != {a.serialize()}")
        if not is_wzs(a, weights):
            failures.append(f"numerator {a.serialize()} is not a member")
        if not is_wzs(s, weights):
            failures.append(f"denominator {s.serialize()} is not a member")
    for h in G.elements:
        if all(s.count(h) for _, s in reps):
            failures.append(f"every denominator lies in p_{h!r}")
    if is_wzs(x, weights):
        failures.append(f"{x.serialize()} is a member")
    witness = NonWeaklyKrullWitness(
        case=case,
        x=x,
        representations=tuple(FractionWitness(a, s) for a, s in reps),
        verified=not failures,
        failures=tuple(failures),
    )
    for message in failures:
        logger.warning(message)
    return witness

def verify_nonweakly_krull_witness(G, weights, case):
    return nonweakly_krull_witness(G, weights, case).verified

def applicable_witness_case(G, weights):
    """The first fraction construction whose hypothesis holds, or None"""
    if any(element_order(g) >= 3 and element_order(g) % 2 for g in G.elements):
        return 1
    if any(element_order(g) >= 4 and element_order(g) % 2 == 0 for g in G.elements):
        return 2
    if is_elementary_2(G) and any(tau(h) != h for tau in weights for h in G.elements):
        return 3
    return None

def theorem44_verdict(G, weights):
    """
    Root closed, Krull, transfer Krull and weakly Krull coincide for
    ±id ⊆ Γ ⊆ Aut(G); all hold iff G is an elementary 2-group and Γ = {±id}
    """
    _check_weights(weights)
    krull = is_elementary_2(G) and weights.same_set(plus_minus(G))
    report = StructureReport(
        monoid=f"B_{weights.label()}({G.label()})",
        root_closed_expected=krull,
        krull_expected=krull,
        weakly_krull_expected=krull,
        transfer_krull_expected=krull,
    )
    if krull:
        report.notes.append("B_Γ(G) = B(G)")
        return report
    case = applicable_witness_case(G, weights)
    if case is None:
        report.notes.append("no fraction witness applies")
        return report
    witness = nonweakly_krull_witness(G, weights, case)
    report.witness = witness.x
    report.witness_case = f"case {case}"
    report.witness_verified = witness.verified
    return report
