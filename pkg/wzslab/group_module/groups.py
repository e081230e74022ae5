"""
Finite abelian groups in invariant-factor form
Elements are reduced residue tuples; every group also carries a dense
mixed-radix index so that subsets of G fit in fixed-size numpy arrays.
"""
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import product
from math import gcd, lcm

import numpy as np
from sympy import factorint, isprime

from wzslab.config import ORDER_CAP
from wzslab.errors import GroupMismatch, InvalidFactor, OrderCapExceeded

class FiniteAbelianGroup:
    """
    C_{n_1} ⊕ ... ⊕ C_{n_r} with 1 < n_1 | n_2 | ... | n_r

    Build through make_group(); the constructor trusts its input chain.
    """

    def __init__(self, invariant_factors):
        self.invariant_factors = tuple(invariant_factors)
        self.rank = len(self.invariant_factors)
        self.order = reduce(lambda a, b: a * b, self.invariant_factors, 1)
        self.exponent = self.invariant_factors[-1] if self.rank else 1
        # Mixed-radix weights, first coordinate most significant
        weights = []
        w = 1
        for n in reversed(self.invariant_factors):
            weights.append(w)
            w *= n
        self._weights = tuple(reversed(weights))

    def __eq__(self, other):
        return isinstance(other, FiniteAbelianGroup) and self.invariant_factors == other.invariant_factors

    def __hash__(self):
        return hash(("FiniteAbelianGroup", self.invariant_factors))

    def __repr__(self):
        return f"FiniteAbelianGroup({self.label()})"

    def label(self):
        """Human readable name, e.g. C2+C4"""
        if not self.rank:
            return "C1"
        return "+".join(f"C{n}" for n in self.invariant_factors)

    def spec(self):
        """Group spec string accepted by the parser"""
        return ",".join(str(n) for n in self.invariant_factors)

    # Elements and the dense index

    def element(self, coordinates):
        coords = tuple(int(a) % n for a, n in zip(coordinates, self.invariant_factors))
        if len(coords) != self.rank or len(tuple(coordinates)) != self.rank:
            raise GroupMismatch(f"{tuple(coordinates)} has wrong arity for {self.label()}")
        return GroupElement(self, coords)

    @property
    def zero(self):
        return GroupElement(self, (0,) * self.rank)

    def basis(self):
        """Canonical basis e_1, ..., e_r"""
        return [GroupElement(self, tuple(int(i == j) for j in range(self.rank)))
                for i in range(self.rank)]

    def index_of(self, coordinates):
        return sum(a * w for a, w in zip(coordinates, self._weights))

    def coordinates_of(self, index):
        coords = []
        for n, w in zip(self.invariant_factors, self._weights):
            coords.append((index // w) % n)
        return tuple(coords)

    @cached_property
    def elements(self):
        """All elements in dense-index order"""
        return [GroupElement(self, c) for c in product(*(range(n) for n in self.invariant_factors))]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return self.order

    @cached_property
    def coordinate_array(self):
        """(|G|, r) array of coordinates, row i is element i"""
        return np.array([e.coordinates for e in self.elements], dtype=np.int64).reshape(self.order, self.rank)

    @cached_property
    def add_table(self):
        """add_table[i, j] = index(element_i + element_j)"""
        coords = self.coordinate_array
        moduli = np.array(self.invariant_factors, dtype=np.int64)
        summed = (coords[:, None, :] + coords[None, :, :]) % moduli
        weights = np.array(self._weights, dtype=np.int64)
        table = summed @ weights if self.rank else np.zeros((1, 1), dtype=np.int64)
        table.setflags(write=False)
        return table

    @cached_property
    def neg_table(self):
        moduli = np.array(self.invariant_factors, dtype=np.int64)
        neg = (-self.coordinate_array) % moduli
        weights = np.array(self._weights, dtype=np.int64)
        table = neg @ weights if self.rank else np.zeros(1, dtype=np.int64)
        table.setflags(write=False)
        return table

    @cached_property
    def shift_table(self):
        """shift_table[h, x] = index(x - h); row h gathers the translate A + h"""
        table = self.add_table[:, self.neg_table].T.copy()
        table.setflags(write=False)
        return table

    def is_two_group(self):
        return self.order & (self.order - 1) == 0

@dataclass(frozen=True)
class GroupElement:
    group: FiniteAbelianGroup
    coordinates: tuple

    @property
    def index(self):
        return self.group.index_of(self.coordinates)

    def is_zero(self):
        return not any(self.coordinates)

    def __add__(self, other):
        return elem_add(self, other)

    def __neg__(self):
        return elem_neg(self)

    def __sub__(self, other):
        return elem_add(self, elem_neg(other))

    def __rmul__(self, k):
        return elem_scale(k, self)

    def __lt__(self, other):
        return self.index < other.index

    def __repr__(self):
        return "(" + ",".join(str(a) for a in self.coordinates) + ")"

def _normalize_factors(factors):
    """Invariant factors of ⊕ C_n via the elementary divisors of each n"""
    powers = {}
    for n in factors:
        for p, e in factorint(n).items():
            powers.setdefault(p, []).append(p ** e)
    if not powers:
        return ()
    length = max(len(v) for v in powers.values())
    chain = [1] * length
    for p, values in powers.items():
        values.sort()
        # Largest prime powers go to the largest invariant factors
        for offset, q in enumerate(reversed(values)):
            chain[length - 1 - offset] *= q
    return tuple(chain)

def make_group(factors, cap=ORDER_CAP):
    """
    Build the group ⊕ C_n for n in factors, normalized to its divisor chain

    Args:
        factors: iterable of integers >= 2 (empty for the trivial group)
        cap: maximal allowed order

    Returns:
        FiniteAbelianGroup
    """
    factors = [int(n) for n in factors]
    for n in factors:
        if n < 2:
            raise InvalidFactor(f"cyclic factor must be >= 2, got {n}")
    order = reduce(lambda a, b: a * b, factors, 1)
    if order > cap:
        raise OrderCapExceeded(cap, order)
    return FiniteAbelianGroup(_normalize_factors(factors))

def _check_same(g, h):
    if g.group != h.group:
        raise GroupMismatch(f"elements of {g.group.label()} and {h.group.label()} cannot be combined")

def elem_add(g, h):
    _check_same(g, h)
    factors = g.group.invariant_factors
    return GroupElement(g.group, tuple((a + b) % n for a, b, n in zip(g.coordinates, h.coordinates, factors)))

def elem_neg(g):
    factors = g.group.invariant_factors
    return GroupElement(g.group, tuple((-a) % n for a, n in zip(g.coordinates, factors)))

def elem_scale(k, g):
    factors = g.group.invariant_factors
    return GroupElement(g.group, tuple((k * a) % n for a, n in zip(g.coordinates, factors)))

def element_order(g):
    """Least k >= 1 with kg = 0"""
    return lcm(1, *(n // gcd(a, n) for a, n in zip(g.coordinates, g.group.invariant_factors)))

def two_G(G):
    """{2g : g in G} in index order"""
    seen = {}
    for g in G.elements:
        h = elem_scale(2, g)
        seen[h.index] = h
    return [seen[i] for i in sorted(seen)]

def subgroup_generated(elements, G=None):
    """Closure of a set of elements under addition (negation follows in a finite group)"""
    elements = list(elements)
    if G is None:
        if not elements:
            raise GroupMismatch("cannot infer the group of an empty generating set")
        G = elements[0].group
    members = {G.zero.index}
    frontier = [G.zero.index]
    gens = [g.index for g in elements]
    table = G.add_table
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = int(table[x, s])
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return [G.elements[i] for i in sorted(members)]

def is_subgroup_indices(G, indices):
    """True iff the index set contains 0 and is closed under addition"""
    indices = sorted(set(int(i) for i in indices))
    if not indices or G.zero.index not in indices:
        return False
    sub = np.array(indices)
    sums = G.add_table[np.ix_(sub, sub)]
    return bool(np.isin(sums, sub).all())

def is_elementary_2(G):
    return G.exponent <= 2

def is_cyclic_prime(G):
    """True for C_p with p prime"""
    return G.rank == 1 and isprime(G.order)
