"""
Subsets of a finite abelian group as characteristic boolean arrays
"""
import numpy as np

class GSubset:
    """Immutable subset of G over the dense element index"""

    __slots__ = ("group", "mask", "_key")

    def __init__(self, group, mask):
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (group.order,):
            raise ValueError(f"mask of shape {mask.shape} does not fit {group.label()}")
        mask = mask.copy()
        mask.setflags(write=False)
        self.group = group
        self.mask = mask
        self._key = mask.tobytes()

    @classmethod
    def from_indices(cls, group, indices):
        mask = np.zeros(group.order, dtype=bool)
        mask[list(indices)] = True
        return cls(group, mask)

    @classmethod
    def from_elements(cls, group, elements):
        return cls.from_indices(group, [g.index for g in elements])

    @classmethod
    def zero(cls, group):
        return cls.from_indices(group, [group.zero.index])

    @classmethod
    def empty(cls, group):
        return cls(group, np.zeros(group.order, dtype=bool))

    def __contains__(self, item):
        index = item if isinstance(item, (int, np.integer)) else item.index
        return bool(self.mask[index])

    def __len__(self):
        return int(self.mask.sum())

    def __eq__(self, other):
        return isinstance(other, GSubset) and self.group == other.group and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __le__(self, other):
        return bool(np.all(other.mask[self.mask]))

    def __repr__(self):
        return "{" + ", ".join(repr(g) for g in self.elements()) + "}"

    def key(self):
        return self._key

    def indices(self):
        return [int(i) for i in np.flatnonzero(self.mask)]

    def elements(self):
        return [self.group.elements[i] for i in self.indices()]

    def is_full(self):
        return bool(self.mask.all())

    def sort_key(self):
        """Canonical order: by size, then by sorted element indices"""
        idx = self.indices()
        return (len(idx), tuple(idx))

    def __add__(self, other):
        """Minkowski sum A + B"""
        return GSubset(self.group, sumset_mask(self.group, self.mask, np.flatnonzero(other.mask)))

def sumset_mask(group, mask, indices):
    """Mask of A + {h : h in indices} for the characteristic array of A"""
    if len(indices) == 0:
        return np.zeros(group.order, dtype=bool)
    return np.any(mask[group.shift_table[indices]], axis=0)
