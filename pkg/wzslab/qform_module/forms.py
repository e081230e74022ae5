"""
Positive definite binary quadratic forms aX² + bXY + cY² of negative
discriminant Δ = b² - 4ac
"""
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from sympy import divisors, factorint

from wzslab.errors import CompositionInconsistent, DiscriminantMismatch, NotPrimitive, WrongSign

def _is_squarefree(d):
    return all(e == 1 for e in factorint(abs(d)).values())

def is_fundamental(d):
    """d ≡ 1 mod 4 squarefree, or d = 4d' with d' ≡ 2, 3 mod 4 squarefree"""
    if d % 4 == 1:
        return _is_squarefree(d)
    if d % 4 == 0:
        q = d // 4
        return q % 4 in (2, 3) and _is_squarefree(q)
    return False

@dataclass(frozen=True)
class Discriminant:
    value: int
    fundamental: int
    conductor: int

    @classmethod
    def of(cls, value):
        value = int(value)
        if value >= 0:
            raise WrongSign(f"only negative discriminants are supported, got {value}")
        if value % 4 not in (0, 1):
            raise DiscriminantMismatch(f"{value} is not 0 or 1 mod 4")
        return _split_discriminant(value)

    @property
    def s(self):
        """Δ = 4D + s with s ∈ {0, 1}"""
        return self.value % 4

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Δ={self.value} (d_K={self.fundamental}, m={self.conductor})"

@lru_cache(maxsize=256)
def _split_discriminant(value):
    # Largest f with f² | Δ and Δ/f² fundamental
    for f in reversed(divisors(abs(value))):
        if value % (f * f) == 0 and is_fundamental(value // (f * f)):
            return Discriminant(value, value // (f * f), f)
    raise DiscriminantMismatch(f"{value} has no fundamental part")

def as_discriminant(disc):
    return disc if isinstance(disc, Discriminant) else Discriminant.of(disc)

@dataclass(frozen=True)
class QForm:
    a: int
    b: int
    c: int

    @property
    def discriminant(self):
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, x, y):
        return self.a * x * x + self.b * x * y + self.c * y * y

    def key(self):
        return (self.a, self.b, self.c)

    def is_primitive(self):
        return gcd(gcd(self.a, self.b), self.c) == 1

    def negate(self):
        """-F = [[a, -b, c]]"""
        return QForm(self.a, -self.b, self.c)

    def is_reduced(self):
        a, b, c = self.a, self.b, self.c
        if not abs(b) <= a <= c:
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True

    def is_ambiguous(self):
        """Reduced forms of order dividing 2: b = 0, |b| = a or a = c"""
        return self.b == 0 or abs(self.b) == self.a or self.a == self.c

    def __repr__(self):
        return f"({self.a},{self.b},{self.c})"

def _normalized(a, b, delta):
    # x -> x + ky moves b into (-a, a]
    r = b % (2 * a)
    if r > a:
        r -= 2 * a
    return a, r, (r * r - delta) // (4 * a)

def reduce_form(f):
    """
    The unique reduced form properly equivalent to f

    Alternates the normalization of b into (-a, a] with the flip
    (a, b, c) -> (c, -b, a); a strictly decreases at every flip.
    """
    delta = f.discriminant
    if delta >= 0 or f.a <= 0:
        raise WrongSign(f"{f!r} is not positive definite")
    if not f.is_primitive():
        raise NotPrimitive(f"{f!r} is not primitive")
    a, b, c = f.a, f.b, f.c
    while True:
        a, b, c = _normalized(a, b, delta)
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        return QForm(a, b, c)

def enumerate_reduced(disc):
    """
    All reduced primitive forms of discriminant Δ, ordered by a, then |b|,
    positive b first
    """
    delta = as_discriminant(disc).value
    bound = isqrt(-delta // 3)
    found = []
    for b in range(-bound, bound + 1):
        if (b - delta) % 2:
            continue
        ac = (b * b - delta) // 4
        for a in range(max(abs(b), 1), isqrt(ac) + 1):
            if ac % a:
                continue
            form = QForm(a, b, ac // a)
            if form.is_reduced() and form.is_primitive():
                found.append(form)
    return sorted(found, key=lambda f: (f.a, abs(f.b), -f.b, f.c))

def principal_form(disc):
    """O = [[1, s, -D]] for Δ = 4D + s"""
    d = as_discriminant(disc)
    return QForm(1, d.s, (d.s - d.value) // 4)

def xgcd(a, b):
    """(x, y, g) with x·a + y·b = g = gcd(a, b) ≥ 0"""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -x0, -y0, -a
    return x0, y0, a

def compose(f1, f2):
    """
    Gaussian composition of two primitive forms, reduced

    Dirichlet's method in the united-forms formulation: the two leading
    coefficients are merged through gcd(a1, a2, (b1 + b2)/2).
    """
    delta = f1.discriminant
    if f2.discriminant != delta:
        raise DiscriminantMismatch(f"{f1!r} and {f2!r} have different discriminants")
    if f1.a > f2.a:
        f1, f2 = f2, f1
    a1, b1 = f1.a, f1.b
    a2, b2, c2 = f2.a, f2.b, f2.c
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        u, _, d = xgcd(a2, a1)
        y1 = u
    if s % d == 0:
        x2, y2, d1 = 0, -1, d
    else:
        x2, y2, d1 = xgcd(s, d)
        y2 = -y2
    v1 = a1 // d1
    v2 = a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    numerator = b3 * b3 - delta
    if numerator % (4 * a3):
        raise CompositionInconsistent(f"{f1!r} * {f2!r}: ({a3}, {b3}, ?) has no integral c")
    return reduce_form(QForm(a3, b3, numerator // (4 * a3)))
