"""
Parity test for membership in B_Aut(G)(G) over 2-groups with distinct
invariant factors

With G = C_{2^t_1} ⊕ ... ⊕ C_{2^t_r}, t_1 < ... < t_r, and coordinates
[g]_i, each level λ of the recursion records

    d_i   = min_j v_2([g_j]_i)              (∞ when every coordinate is 0)
    d     = min_i d_i
    m     = max{i : d_i = d}
    N     = {j : v_2([g_j]_m) = d}
    I     = {i : t_i - d_i > t_m - d}

and S_{λ+1} keeps only the coordinates in I. S is a member iff |N| is
even at every level up to the first one with I empty.
Coordinate positions and letter positions below are 0-based.
"""
import math
from dataclasses import dataclass, field

from wzslab.errors import GroupShapeUnsupported, VerificationFailed

INF = math.inf

def v2(a):
    """2-adic valuation, ∞ at 0"""
    if a == 0:
        return INF
    return (a & -a).bit_length() - 1

@dataclass(frozen=True)
class A3Level:
    d_i: tuple
    d: float
    m: int
    N: tuple
    I: tuple

    @property
    def parity_ok(self):
        return len(self.N) % 2 == 0

    def as_dict(self):
        show = lambda x: "inf" if x == INF else int(x)
        return {
            "d_i": [show(x) for x in self.d_i],
            "d": show(self.d),
            "m": self.m,
            "N": list(self.N),
            "I": list(self.I),
        }

@dataclass
class A3State:
    levels: list = field(default_factory=list)
    zero_sequence: bool = False

    @property
    def t(self):
        return len(self.levels)

    def as_dict(self):
        return {"t": self.t, "zero_sequence": self.zero_sequence, "levels": [lv.as_dict() for lv in self.levels]}

def _exponents_t(G):
    factors = G.invariant_factors
    if not G.is_two_group() or G.order == 1:
        raise GroupShapeUnsupported(f"{G.label()} is not a nontrivial 2-group")
    if any(a >= b for a, b in zip(factors, factors[1:])):
        raise GroupShapeUnsupported(f"{G.label()} has repeated invariant factors")
    return [n.bit_length() - 1 for n in factors]

def _level(coords, t):
    r = len(t)
    d_i = tuple(min((v2(c[i]) for c in coords), default=INF) for i in range(r))
    d = min(d_i)
    m = max(i for i in range(r) if d_i[i] == d)
    N = tuple(j for j, c in enumerate(coords) if v2(c[m]) == d)
    threshold = t[m] - d
    I = tuple(i for i in range(r) if d_i[i] != INF and t[i] - d_i[i] > threshold)
    return A3Level(d_i=d_i, d=d, m=m, N=N, I=I)

def a3_trace(S):
    """All levels of the recursion for S"""
    G = S.group
    t = _exponents_t(G)
    coords = [g.coordinates for g in S.elements()]
    state = A3State()
    if all(not any(c) for c in coords):
        state.zero_sequence = True
        return state

    previous = None
    while True:
        level = _level(coords, t)
        if previous is not None and previous.I and not set(level.I) < set(previous.I):
            raise VerificationFailed(f"index sets do not shrink: {previous.I} -> {level.I}")
        state.levels.append(level)
        if not level.I or len(state.levels) > len(t):
            break
        keep = set(level.I)
        coords = [tuple(a if i in keep else 0 for i, a in enumerate(c)) for c in coords]
        previous = level
    if state.t > len(t):
        raise VerificationFailed(f"recursion depth {state.t} exceeds rank {len(t)}")
    return state

def a3_membership(S):
    """
    S ∈ B_Aut(G)(G) by the parity criterion

    Returns:
        (bool, A3State)
    """
    state = a3_trace(S)
    if state.zero_sequence:
        return True, state
    return all(level.parity_ok for level in state.levels), state
