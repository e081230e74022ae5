"""
Norms represented by the principal class and the transfer
ϑ': R'°_m(Δ) -> B_±(F_Δ)

For n built from primes p ∈ P'_m (p ∤ m, f_p = 1),
ϑ'(n) = ∏ F_p^{v_p(n)} and n is represented by the principal form
iff ϑ'(n) is a ±-weighted zero-sum sequence over F_Δ.
"""
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from sympy import divisors, factorint
from sympy.ntheory.primetest import is_square

from wzslab.errors import NotInNPrime, NotInRcirc, OutOfRange, PrimeDividesConductor
from wzslab.group_module import plus_minus
from wzslab.monoid_module import LengthSet, MonoidHandle, set_of_lengths
from wzslab.qform_module.class_group import class_group
from wzslab.qform_module.forms import as_discriminant, principal_form
from wzslab.qform_module.primes import in_P_prime, prime_data
from wzslab.sequence_module import Sequence, is_wzs

class TransferContext:
    """F_Δ with the monoid B_±(F_Δ) over its abstract group"""

    def __init__(self, disc):
        self.disc = as_discriminant(disc)
        self.class_group = class_group(self.disc.value)
        G = self.class_group.group
        self.group = G
        self.weights = plus_minus(G)
        self.handle = MonoidHandle(G, self.weights, order_cap=max(G.order, 1))

    def letter(self, form, negate=False):
        F = self.class_group
        i = F.index(form)
        return F.element(F.neg(i) if negate else i)

@lru_cache(maxsize=64)
def transfer_context(delta):
    return TransferContext(delta)

def _context(disc):
    return transfer_context(as_discriminant(disc).value)

def _check_n(n):
    if int(n) < 1:
        raise OutOfRange(f"n must be a positive integer, got {n}")
    return int(n)

def prime_signature(n):
    """2^2*3 for 12; 1 for 1"""
    factors = factorint(n)
    if not factors:
        return "1"
    return "*".join(str(p) if e == 1 else f"{p}^{e}" for p, e in sorted(factors.items()))

def is_admissible(disc, n):
    """Every prime factor of n lies in P'_m"""
    return all(in_P_prime(disc, p) for p in factorint(_check_n(n)))

def admissible_range(disc, max_n):
    return [n for n in range(1, max_n + 1) if is_admissible(disc, n)]

def theta_prime(disc, n, flip=()):
    """
    ϑ'(n) over the abstract class group

    Each prime contributes its chosen class F_p (the lexicographically
    smaller reduced form of the pair); primes listed in flip contribute
    -F_p instead.
    """
    n = _check_n(n)
    ctx = _context(disc)
    letters = []
    for p, e in sorted(factorint(n).items()):
        try:
            data = prime_data(ctx.disc, p)
        except PrimeDividesConductor as exc:
            raise NotInNPrime(str(exc))
        if not data.split:
            raise NotInNPrime(f"{p} is inert in discriminant {ctx.disc.value}")
        letters.extend([ctx.letter(data.chosen, negate=p in flip)] * e)
    return Sequence.from_elements(ctx.group, letters)

def theta(disc, n):
    """
    ϑ(n) including inert primes: p² with f_p = 2 contributes the
    principal letter; an odd power of an inert prime is not a norm
    """
    n = _check_n(n)
    ctx = _context(disc)
    zero = ctx.group.zero
    letters = []
    admissible = 1
    for p, e in sorted(factorint(n).items()):
        if ctx.disc.conductor % p == 0:
            raise NotInNPrime(f"{p} divides the conductor {ctx.disc.conductor}")
        if prime_data(ctx.disc, p).split:
            admissible *= p ** e
            continue
        if e % 2:
            raise NotInNPrime(f"{p}^{e} with {p} inert is not a norm")
        letters.extend([zero] * (e // 2))
    return theta_prime(ctx.disc, admissible) * Sequence.from_elements(ctx.group, letters)

def in_Rcirc_via_transfer(disc, n, flip=()):
    """n ∈ R'°_m(Δ) iff ϑ'(n) ∈ B_±(F_Δ)"""
    ctx = _context(disc)
    return is_wzs(theta_prime(ctx.disc, n, flip), ctx.weights)

def in_Rcirc_via_full_theta(disc, n):
    ctx = _context(disc)
    return is_wzs(theta(ctx.disc, n), ctx.weights)

def represents_principal_bruteforce(disc, n):
    """
    Some (x, y) ∈ Z² with x² + sxy + cy² = n

    4·O(x, y) = (2x + sy)² + |Δ|y², so |y| ≤ √(4n/|Δ|) and each y leaves
    a square to test.
    """
    n = _check_n(n)
    d = as_discriminant(disc)
    s = principal_form(d).b
    size = -d.value
    for y in range(isqrt(4 * n // size) + 1):
        rest = 4 * n - size * y * y
        if rest < 0 or not is_square(rest):
            continue
        t = isqrt(rest)
        # 2x = ±t - sy must be even
        if (t - s * y) % 2 == 0:
            return True
    return False

def rcirc_member(disc, n):
    """Membership in R'°_m(Δ) without the transfer"""
    return is_admissible(disc, n) and represents_principal_bruteforce(disc, n)

def rcirc_atoms(disc, n):
    """Atoms of the multiplicative monoid R'°_m(Δ) dividing n"""
    found = []
    for a in divisors(n):
        if a == 1 or not rcirc_member(disc, a):
            continue
        split = any(rcirc_member(disc, e) and rcirc_member(disc, a // e)
                    for e in divisors(a) if 1 < e < a)
        if not split:
            found.append(a)
    return found

def lengths_in_Rcirc(disc, n):
    """
    L(n) in the monoid R'°_m(Δ), computed on the integer side by
    recursive division through atoms
    """
    n = _check_n(n)
    if not is_admissible(disc, n) or not in_Rcirc_via_transfer(disc, n):
        raise NotInRcirc(f"{n} is not in R'° for discriminant {as_discriminant(disc).value}")
    atoms = rcirc_atoms(disc, n)
    memo = {1: 1}

    def mask(k):
        cached = memo.get(k)
        if cached is not None:
            return cached
        result = 0
        for a in atoms:
            if k % a == 0 and rcirc_member(disc, k // a):
                result |= mask(k // a) << 1
        memo[k] = result
        return result

    return LengthSet.from_mask(mask(n))

def lengths_via_sequences(disc, n):
    """L(ϑ'(n)) in B_±(F_Δ)"""
    ctx = _context(disc)
    return set_of_lengths(ctx.handle, theta_prime(ctx.disc, n))

def discriminant_info(disc):
    d = as_discriminant(disc)
    F = class_group(d.value)
    ramified = sorted(p for p in factorint(abs(d.fundamental)))
    return {
        "discriminant": d.value,
        "fundamental": d.fundamental,
        "conductor": d.conductor,
        "class_number": F.h,
        "structure": F.group.label(),
        "ramified_primes": ramified,
        "principal_form": list(principal_form(d).key()),
    }

@dataclass(frozen=True)
class SweepRow:
    n: int
    prime_signature: str
    transfer_verdict: bool
    bruteforce_verdict: bool
    lengths_monoid: str = ""
    lengths_sequences: str = ""

    COLUMNS = ("n", "prime_signature", "transfer_verdict", "bruteforce_verdict",
               "lengths_monoid", "lengths_sequences")

    @property
    def agrees(self):
        return (self.transfer_verdict == self.bruteforce_verdict
                and self.lengths_monoid == self.lengths_sequences)

    def as_dict(self):
        return {name: getattr(self, name) for name in self.COLUMNS}

def sweep_row(disc, n, with_lengths=True):
    """One admissible n: both membership verdicts and, for members, both sides' L(n)"""
    via_transfer = in_Rcirc_via_transfer(disc, n)
    via_search = represents_principal_bruteforce(disc, n)
    monoid_side = sequence_side = ""
    if with_lengths and via_transfer:
        monoid_side = repr(lengths_in_Rcirc(disc, n))
        sequence_side = repr(lengths_via_sequences(disc, n))
    return SweepRow(
        n=n,
        prime_signature=prime_signature(n),
        transfer_verdict=via_transfer,
        bruteforce_verdict=via_search,
        lengths_monoid=monoid_side,
        lengths_sequences=sequence_side,
    )
