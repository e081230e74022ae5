"""
The monoid B_Γ(G0) of Γ-weighted zero-sum sequences over G0 ⊆ G

A MonoidHandle owns the canonically ordered atom list and the caches
shared by every invariant computation: membership, sets of lengths and
the graded length lattice.
"""
from threading import RLock

import numpy as np
from sympy import factorint

from wzslab.config import ORDER_CAP
from wzslab.errors import GroupMismatch, NotInMonoid, OrderCapExceeded
from wzslab.logger import logger
from wzslab.monoid_module.lattice import LengthLattice
from wzslab.sequence_module import Sequence, is_wzs

def davenport_star(G):
    """D*(G) = 1 + Σ (n_i - 1)"""
    return 1 + sum(n - 1 for n in G.invariant_factors)

def atom_length_bound(G):
    """
    Upper bound for the length of an atom of any B_Γ(G0)

    D(B_Γ(G0)) ≤ D(G) ≤ |G|, and D(G) = D*(G) for p-groups and for groups
    of rank at most two.
    """
    if G.rank <= 2 or len(factorint(G.order)) <= 1:
        return max(1, davenport_star(G))
    return G.order

class MonoidHandle:
    """
    B_Γ(G0) with lazily computed, then frozen, atoms

    Args:
        group: FiniteAbelianGroup
        weights: WeightSet over the same group
        support: elements of G0 (default: all of G)
    """

    def __init__(self, group, weights, support=None, order_cap=ORDER_CAP):
        if group.order > order_cap:
            raise OrderCapExceeded(order_cap, group.order)
        if weights.group != group:
            raise GroupMismatch("weight set belongs to another group")
        if support is None:
            support = group.elements
        indices = sorted({g.index for g in support})
        self.group = group
        self.weights = weights
        self.support_indices = tuple(indices)
        self.support = [group.elements[i] for i in indices]
        self._lock = RLock()
        self._atoms = None
        self._atom_matrix = None
        self._lattice = None
        self._member_cache = {}
        self._length_cache = {}

    def __repr__(self):
        return f"MonoidHandle({self.group.label()}, {self.weights.label()}, |G0|={len(self.support)})"

    def label(self):
        full = len(self.support) == self.group.order
        return f"B_{self.weights.label()}({self.group.label()}{'' if full else ', G0'})"

    def describe(self):
        return {
            "group": self.group.label(),
            "invariant_factors": list(self.group.invariant_factors),
            "weights": self.weights.label(),
            "weight_count": len(self.weights),
            "support": [repr(g) for g in self.support],
        }

    # Membership

    def check_support(self, S):
        if S.group != self.group:
            raise GroupMismatch(f"sequence over {S.group.label()} used with {self.label()}")
        outside = set(S.support_indices()) - set(self.support_indices)
        if outside:
            raise NotInMonoid(f"{S.serialize()} has letters outside G0")

    def contains(self, S):
        """S ∈ B_Γ(G0)"""
        self.check_support(S)
        return self.is_member_key(S.key())

    def is_member_key(self, key):
        cached = self._member_cache.get(key)
        if cached is None:
            cached = is_wzs(Sequence(self.group, key), self.weights)
            self._member_cache[key] = cached
        return cached

    def require_member(self, S):
        if not self.contains(S):
            raise NotInMonoid(f"{S.serialize()} is not in {self.label()}")

    # Lattice and atoms

    def lattice(self, bound):
        """Members with |b| ≤ bound and their sets of lengths (cached, monotone in bound)"""
        with self._lock:
            if self._lattice is None or self._lattice.bound < bound:
                logger.debug(f"Walking {self.label()} up to length {bound}")
                self._lattice = LengthLattice(self, max(bound, 0))
            return self._lattice

    @property
    def atoms(self):
        """Atoms sorted by (length, serialization)"""
        with self._lock:
            if self._atoms is None:
                lattice = self.lattice(atom_length_bound(self.group))
                self._atoms = tuple(lattice.atoms)
                self._atom_matrix = np.array([a.exponents for a in self._atoms], dtype=np.int64).reshape(
                    len(self._atoms), self.group.order)
                self._atom_matrix.setflags(write=False)
            return self._atoms

    @property
    def atom_matrix(self):
        self.atoms
        return self._atom_matrix

    def atom_index(self, S):
        for i, a in enumerate(self.atoms):
            if a == S:
                return i
        return None

    def dividing_atoms(self, exps):
        """Indices of atoms A with A ≤ exps as multisets"""
        matrix = self.atom_matrix
        if not len(matrix):
            return np.zeros(0, dtype=np.int64)
        return np.flatnonzero(np.all(matrix <= np.asarray(exps), axis=1))

    def lengths_mask(self, S):
        """Bit i set iff i ∈ L(S); 0 when S is not a member"""
        self.check_support(S)
        return self._lengths_of_key(S.key())

    def _lengths_of_key(self, key):
        cached = self._length_cache.get(key)
        if cached is not None:
            return cached
        if not any(key):
            return 1
        if not self.is_member_key(key):
            return 0
        atoms = self.atom_matrix
        mask = 0
        exps = np.array(key, dtype=np.int64)
        for j in self.dividing_atoms(exps):
            rest = tuple(int(x) for x in exps - atoms[j])
            if self.is_member_key(rest):
                mask |= self._lengths_of_key(rest) << 1
        self._length_cache[key] = mask
        return mask
