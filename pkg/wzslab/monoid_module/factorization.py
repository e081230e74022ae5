"""
Factorizations, sets of lengths, distances and the catenary degree of
single elements
"""
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from wzslab.errors import HandleMismatch
from wzslab.monoid_module.lattice import mask_to_lengths
from wzslab.sequence_module import Sequence

@dataclass(frozen=True)
class Factorization:
    """A multiset of atoms, stored as non-decreasing atom indices"""
    handle: object
    atom_indices: tuple

    def __len__(self):
        return len(self.atom_indices)

    def counts(self):
        return Counter(self.atom_indices)

    def product(self):
        """Multiply the referenced atoms back together"""
        H = self.handle
        exps = np.zeros(H.group.order, dtype=np.int64)
        for j in self.atom_indices:
            exps += H.atom_matrix[j]
        return Sequence(H.group, exps)

    def __repr__(self):
        return "z(" + ",".join(f"A{j}" for j in self.atom_indices) + ")"

@dataclass(frozen=True)
class LengthSet:
    values: tuple

    @classmethod
    def from_mask(cls, mask):
        return cls(tuple(mask_to_lengths(mask)))

    def __contains__(self, k):
        return k in self.values

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __bool__(self):
        return bool(self.values)

    @property
    def min(self):
        return self.values[0]

    @property
    def max(self):
        return self.values[-1]

    def gaps(self):
        """Δ(L): differences of successive elements"""
        return {b - a for a, b in zip(self.values, self.values[1:])}

    def as_list(self):
        return list(self.values)

    def __repr__(self):
        return "{" + ",".join(str(v) for v in self.values) + "}"

def factorizations(H, b):
    """
    Z(b) by recursive descent with non-decreasing atom indices

    Each multiset of atoms is produced exactly once; results come out in
    lexicographic order of their index tuples.
    """
    H.require_member(b)
    atoms = H.atom_matrix
    memo = {}

    def descend(key, start):
        if not any(key):
            return [()]
        cached = memo.get((key, start))
        if cached is not None:
            return cached
        exps = np.array(key, dtype=np.int64)
        found = []
        for j in H.dividing_atoms(exps):
            j = int(j)
            if j < start:
                continue
            rest = tuple(int(x) for x in exps - atoms[j])
            if not H.is_member_key(rest):
                continue
            for tail in descend(rest, j):
                found.append((j,) + tail)
        memo[(key, start)] = found
        return found

    return [Factorization(H, z) for z in descend(b.key(), 0)]

def set_of_lengths(H, b):
    """L(b) = {|z| : z ∈ Z(b)}"""
    H.require_member(b)
    return LengthSet.from_mask(H.lengths_mask(b))

def distance(z, w):
    """d(z, w): strip the common part, take the larger remaining length"""
    if z.handle is not w.handle:
        raise HandleMismatch("factorizations of different monoids")
    common = z.counts() & w.counts()
    shared = sum(common.values())
    return max(len(z) - shared, len(w) - shared)

class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))
        self.components = n

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)
            self.components -= 1

def catenary_from_factorizations(zs):
    """Least N making the distance-≤N graph on zs connected (Kruskal)"""
    if len(zs) <= 1:
        return 0
    edges = sorted((distance(zs[i], zs[j]), i, j) for i, j in combinations(range(len(zs)), 2))
    uf = _UnionFind(len(zs))
    for d, i, j in edges:
        uf.union(i, j)
        if uf.components == 1:
            return d
    raise AssertionError("complete graph must connect")

def catenary_of_element(H, b):
    H.require_member(b)
    return catenary_from_factorizations(factorizations(H, b))
