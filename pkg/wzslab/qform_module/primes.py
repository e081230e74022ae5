"""
Splitting of primes in the order of discriminant Δ

(Δ/p) = 1: f_p = 1 and p is represented by exactly the classes F_p, -F_p
(Δ/p) = -1: f_p = 2, p² is represented by O only
(Δ/p) = 0, p ∤ m: f_p = 1 and 2F_p = O
"""
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Optional

from sympy import isprime, legendre_symbol

from wzslab.errors import OutOfRange, PrimeDividesConductor, VerificationFailed
from wzslab.qform_module.class_group import class_group
from wzslab.qform_module.forms import QForm, as_discriminant, reduce_form

def kronecker(disc, p):
    """(Δ/p) for a prime p"""
    delta = int(disc)
    if not isprime(p):
        raise OutOfRange(f"{p} is not prime")
    if p == 2:
        if delta % 2 == 0:
            return 0
        return 1 if delta % 8 in (1, 7) else -1
    return int(legendre_symbol(delta % p, p))

@dataclass(frozen=True)
class PrimeData:
    p: int
    kronecker: int
    f_p: int
    pair: tuple = ()
    chosen: Optional[QForm] = None

    @property
    def split(self):
        return self.f_p == 1

    def as_dict(self):
        return {
            "p": self.p,
            "kronecker": self.kronecker,
            "f_p": self.f_p,
            "pair": [list(f.key()) for f in self.pair],
            "chosen": list(self.chosen.key()) if self.chosen is not None else None,
        }

def _form_over_p(delta, p):
    # (p, b, (b² - Δ)/4p) with b² ≡ Δ mod 4p
    for b in range(2 * p):
        if (b * b - delta) % (4 * p):
            continue
        form = QForm(p, b, (b * b - delta) // (4 * p))
        if gcd(gcd(form.a, form.b), form.c) == 1:
            return form
    raise VerificationFailed(f"no primitive form of discriminant {delta} has leading coefficient {p}")

@lru_cache(maxsize=4096)
def _prime_data(delta, p):
    disc = as_discriminant(delta)
    if disc.conductor % p == 0:
        raise PrimeDividesConductor(f"{p} divides the conductor {disc.conductor} of {delta}")
    kr = kronecker(delta, p)
    if kr == -1:
        return PrimeData(p=p, kronecker=kr, f_p=2)
    F = reduce_form(_form_over_p(delta, p))
    minus = reduce_form(F.negate())
    pair = tuple(sorted({F, minus}, key=QForm.key))
    data = PrimeData(p=p, kronecker=kr, f_p=1, pair=pair, chosen=pair[0])
    if kr == 0:
        F_delta = class_group(delta)
        i = F_delta.index(F)
        if F_delta.add(i, i) != F_delta.principal:
            raise VerificationFailed(f"2F_{p} != O for Δ = {delta}")
    return data

def prime_data(disc, p):
    """Kronecker symbol, inertia degree and class pair {F_p, -F_p}"""
    if not isprime(p):
        raise OutOfRange(f"{p} is not prime")
    return _prime_data(as_discriminant(disc).value, int(p))

def in_P_prime(disc, p):
    """p ∈ P'_m: p ∤ m and f_p = 1"""
    d = as_discriminant(disc)
    return d.conductor % p != 0 and kronecker(d.value, p) != -1
