"""
Sequences over a finite abelian group: the free abelian monoid F(G)

A sequence is stored as its exponent table v_g(S) over the dense element
index. The canonical serialization lists elements in index order as
`(coords)^k`, e.g. `[(1)^2,(2)]`.
"""
from itertools import combinations_with_replacement

import numpy as np

from wzslab.errors import GroupMismatch, NotASubsequence

class Sequence:
    __slots__ = ("group", "exponents", "_key")

    def __init__(self, group, exponents):
        exps = np.asarray(exponents, dtype=np.int64)
        if exps.shape != (group.order,):
            raise GroupMismatch(f"exponent table of shape {exps.shape} does not fit {group.label()}")
        if (exps < 0).any():
            raise NotASubsequence("negative multiplicity")
        exps = exps.copy()
        exps.setflags(write=False)
        self.group = group
        self.exponents = exps
        self._key = tuple(int(v) for v in exps)

    @classmethod
    def empty(cls, group):
        return cls(group, np.zeros(group.order, dtype=np.int64))

    @classmethod
    def from_elements(cls, group, elements):
        exps = np.zeros(group.order, dtype=np.int64)
        for g in elements:
            if g.group != group:
                raise GroupMismatch(f"{g} is not an element of {group.label()}")
            exps[g.index] += 1
        return cls(group, exps)

    @classmethod
    def from_indices(cls, group, indices):
        exps = np.zeros(group.order, dtype=np.int64)
        for i in indices:
            exps[i] += 1
        return cls(group, exps)

    @classmethod
    def from_counts(cls, group, counts):
        """counts: mapping element -> multiplicity"""
        exps = np.zeros(group.order, dtype=np.int64)
        for g, k in counts.items():
            exps[g.index] += k
        return cls(group, exps)

    # Basic attributes

    def __len__(self):
        return int(self.exponents.sum())

    @property
    def length(self):
        return len(self)

    def count(self, g):
        return int(self.exponents[g.index])

    def support(self):
        return [self.group.elements[int(i)] for i in np.flatnonzero(self.exponents)]

    def support_indices(self):
        return [int(i) for i in np.flatnonzero(self.exponents)]

    def index_list(self):
        """Element indices with multiplicity, non-decreasing"""
        return [i for i, v in enumerate(self._key) for _ in range(v)]

    def elements(self):
        return [self.group.elements[i] for i in self.index_list()]

    def key(self):
        return self._key

    def sort_key(self):
        """(length, serialization) order used for atom lists and witnesses"""
        idx = tuple(self.index_list())
        return (len(idx), idx)

    def is_empty(self):
        return not any(self._key)

    # Monoid operations of F(G)

    def _check(self, other):
        if self.group != other.group:
            raise GroupMismatch("sequences over different groups")

    def __mul__(self, other):
        self._check(other)
        return Sequence(self.group, self.exponents + other.exponents)

    def __pow__(self, k):
        return Sequence(self.group, self.exponents * int(k))

    def divides(self, other):
        """T | S in F(G): multiplicities never exceed those of other"""
        self._check(other)
        return bool(np.all(self.exponents <= other.exponents))

    def __truediv__(self, divisor):
        """Multiset difference self · divisor^{-1}"""
        self._check(divisor)
        if not divisor.divides(self):
            raise NotASubsequence(f"{divisor.serialize()} is not a subsequence of {self.serialize()}")
        return Sequence(self.group, self.exponents - divisor.exponents)

    def __eq__(self, other):
        return isinstance(other, Sequence) and self.group == other.group and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def serialize(self):
        parts = []
        for i, v in enumerate(self._key):
            if v:
                g = self.group.elements[i]
                parts.append(repr(g) if v == 1 else f"{g!r}^{v}")
        return "[" + ",".join(parts) + "]"

    def __repr__(self):
        return f"Sequence({self.serialize()})"

def all_sequences(group, max_length, min_length=0, support=None):
    """
    Every sequence over support (default: all of G) with length in
    [min_length, max_length], in canonical (length, serialization) order
    """
    indices = sorted(g.index for g in (group.elements if support is None else support))
    for ell in range(max(min_length, 0), max_length + 1):
        for combo in combinations_with_replacement(indices, ell):
            yield Sequence.from_indices(group, combo)
