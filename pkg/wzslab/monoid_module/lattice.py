"""
Graded walk over all sequences of bounded length

Multisets over G0 are visited level by level (length 1, 2, ...) in
lexicographic order of their sorted index tuples, which is the canonical
(length, serialization) order. Each σ_Γ set is obtained from its parent
(the multiset without its last letter) by one orbit sumset, and each
member's set of lengths follows from the recurrence

    L(b) = ⋃ { 1 + L(b·A^{-1}) : A atom, A | b in B_Γ(G0) }

over atoms found at earlier levels. A member that no earlier atom
divides is itself an atom.
"""
import sys
from itertools import combinations_with_replacement, islice
from math import comb

import numpy as np
from tqdm import tqdm

from wzslab.config import LATTICE_PROGRESS_THRESHOLD
from wzslab.errors import VerificationFailed
from wzslab.logger import logger
from wzslab.sequence_module import Sequence, sumset_mask

class LengthLattice:
    """
    Members b of B_Γ(G0) with |b| ≤ bound, each with its length bitmask
    (bit i set iff i ∈ L(b)).

    Keys encode a multiset by its support-position exponents in base
    bound + 1, so dividing out an atom is an integer subtraction.
    """

    def __init__(self, handle, bound):
        self.handle = handle
        self.group = handle.group
        self.bound = bound
        self.positions = tuple(handle.support_indices)
        self._base = bound + 1
        self._radix = [self._base ** p for p in range(len(self.positions))]
        self.lengths = {0: 1}
        # _level_end[l] = number of members of length ≤ l (dict order is graded)
        self._level_end = [1]
        self.atoms = []
        self.visited = 0
        self._walk()

    def _walk(self):
        # Imported here: handle imports this module
        from wzslab.monoid_module.handle import atom_length_bound

        G = self.group
        s = len(self.positions)
        zero = G.zero.index
        orbits = self.handle.weights.orbit_indices
        atom_limit = atom_length_bound(G)
        radix = self._radix

        start = np.zeros(G.order, dtype=bool)
        start[zero] = True
        frontier = {(): (start, 0)}
        atom_vecs = np.zeros((0, s), dtype=np.int64)
        atom_keys = []

        total = comb(s + self.bound, self.bound) - 1 if s else 0
        levels = range(1, self.bound + 1) if s else range(0)
        progress = tqdm(
            total=total,
            desc=f"lattice {self.handle.label()} |b|≤{self.bound}",
            file=sys.stderr,
            disable=logger.quiet or total < LATTICE_PROGRESS_THRESHOLD,
            leave=False,
        )
        for ell in levels:
            nxt = {}
            new_atoms = []
            for c in combinations_with_replacement(range(s), ell):
                parent_mask, parent_key = frontier[c[:-1]]
                p = c[-1]
                mask = sumset_mask(G, parent_mask, orbits[self.positions[p]])
                key = parent_key + radix[p]
                if ell < self.bound:
                    nxt[c] = (mask, key)
                self.visited += 1
                if not mask[zero]:
                    continue
                vec = np.bincount(c, minlength=s)
                lengths = 0
                if atom_keys:
                    for j in np.flatnonzero(np.all(atom_vecs <= vec, axis=1)):
                        rest = self.lengths.get(key - atom_keys[j])
                        if rest:
                            lengths |= rest << 1
                if not lengths:
                    if ell > atom_limit:
                        raise VerificationFailed(
                            f"member of length {ell} without atom divisor exceeds the atom length bound {atom_limit}")
                    lengths = 2
                    new_atoms.append((c, vec, key))
                self.lengths[key] = lengths
            progress.update(comb(s + ell - 1, ell))
            self._level_end.append(len(self.lengths))
            if new_atoms:
                atom_vecs = np.vstack([atom_vecs] + [vec[None, :] for _, vec, _ in new_atoms])
                atom_keys.extend(key for _, _, key in new_atoms)
                for c, _, _ in new_atoms:
                    self.atoms.append(Sequence.from_indices(G, [self.positions[p] for p in c]))
            frontier = nxt
        progress.close()

    # Keys

    def key_of(self, S):
        key = 0
        for pos, index in enumerate(self.positions):
            key += int(S.exponents[index]) * self._radix[pos]
        return key

    def decode(self, key):
        exps = [0] * self.group.order
        for pos, index in enumerate(self.positions):
            key, digit = divmod(key, self._base)
            exps[index] = digit
        return Sequence(self.group, exps)

    # Queries

    def __len__(self):
        return len(self.lengths)

    def lengths_mask(self, S):
        if len(S) > self.bound:
            raise ValueError(f"|S| = {len(S)} exceeds the lattice bound {self.bound}")
        return self.lengths.get(self.key_of(S), 0)

    def _take(self, bound):
        if bound is None or bound >= self.bound:
            return len(self.lengths)
        return self._level_end[min(max(bound, 0), len(self._level_end) - 1)]

    def masks(self, bound=None):
        """Length bitmasks of members with |b| ≤ bound, empty sequence included"""
        return islice(self.lengths.values(), self._take(bound))

    def items(self, bound=None):
        """(key, length bitmask) in canonical order"""
        return islice(self.lengths.items(), self._take(bound))

    def members(self, bound=None, include_empty=False):
        for key, mask in self.items(bound):
            if key == 0 and not include_empty:
                continue
            yield self.decode(key), mask

def mask_to_lengths(mask):
    """Sorted list of set bit positions"""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out
