"""
Endomorphisms of a finite abelian group and weight sets Γ ⊂ End(G)
"""
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import product

import numpy as np

from wzslab.config import AUT_CAP
from wzslab.errors import GroupMismatch, HypothesisNotMet, OrderCapExceeded
from wzslab.group_module.groups import element_order

class WeightKind(Enum):
    ID = "id"
    PLUS_MINUS = "pm"
    FULL_AUT = "aut"
    CUSTOM = "custom"

@dataclass(frozen=True)
class Endomorphism:
    """A homomorphism G -> G given by the images of the canonical basis"""
    group: object
    basis_images: tuple

    def __post_init__(self):
        G = self.group
        if len(self.basis_images) != G.rank:
            raise GroupMismatch(f"need {G.rank} basis images, got {len(self.basis_images)}")
        for n, image in zip(G.invariant_factors, self.basis_images):
            if image.group != G:
                raise GroupMismatch("basis image lives in another group")
            if not (n * image).is_zero():
                raise HypothesisNotMet(f"image {image} of a basis element of order {n} is not killed by {n}")

    @cached_property
    def table(self):
        """table[i] = index of γ(element_i)"""
        G = self.group
        if not G.rank:
            return np.zeros(1, dtype=np.int64)
        images = np.array([img.coordinates for img in self.basis_images], dtype=np.int64)
        mapped = (G.coordinate_array @ images) % np.array(G.invariant_factors, dtype=np.int64)
        table = mapped @ np.array(G._weights, dtype=np.int64)
        table.setflags(write=False)
        return table

    def __call__(self, g):
        return self.group.elements[int(self.table[g.index])]

    def key(self):
        return tuple(int(x) for x in self.table)

    def is_bijective(self):
        return len(set(self.key())) == self.group.order

    def compose(self, other):
        """self ∘ other"""
        return Endomorphism(self.group, tuple(self(img) for img in other.basis_images))

def identity(G):
    return Endomorphism(G, tuple(G.basis()))

def negation(G):
    return Endomorphism(G, tuple(-e for e in G.basis()))

class WeightSet:
    """
    A nonempty duplicate-free set Γ of endomorphisms

    is_group is computed at construction: closed under composition with
    every member bijective. The id, pm and aut constructors build groups,
    so only custom sets pay for the pairwise closure check.
    """

    def __init__(self, group, endos, kind=WeightKind.CUSTOM):
        endos = list(endos)
        if not endos:
            raise HypothesisNotMet("a weight set must be nonempty")
        unique = {}
        for gamma in endos:
            if gamma.group != group:
                raise GroupMismatch("endomorphism of another group")
            unique.setdefault(gamma.key(), gamma)
        self.group = group
        self.kind = kind
        self.endos = tuple(unique.values())
        self._keys = frozenset(unique)
        self.is_group = self._check_group()

    def _check_group(self):
        if self.kind is not WeightKind.CUSTOM:
            return True
        if not all(gamma.is_bijective() for gamma in self.endos):
            return False
        for a in self.endos:
            for b in self.endos:
                if a.compose(b).key() not in self._keys:
                    return False
        return True

    def __len__(self):
        return len(self.endos)

    def __iter__(self):
        return iter(self.endos)

    def __contains__(self, gamma):
        return gamma.key() in self._keys

    def __repr__(self):
        return f"WeightSet({self.kind.value}, |Γ|={len(self)}, {self.group.label()})"

    def same_set(self, other):
        return self.group == other.group and self._keys == other._keys

    def label(self):
        return self.kind.value

    def contains_pm(self):
        G = self.group
        return identity(G) in self and negation(G) in self

    def is_subset_of_aut(self):
        return all(gamma.is_bijective() for gamma in self.endos)

    @cached_property
    def orbit_indices(self):
        """orbit_indices[i]: sorted index array of {γ(g_i) : γ ∈ Γ}"""
        stacked = np.stack([gamma.table for gamma in self.endos])
        return tuple(np.unique(stacked[:, i]) for i in range(self.group.order))

    def orbit(self, g):
        return [self.group.elements[int(i)] for i in self.orbit_indices[g.index]]

def identity_weights(G):
    return WeightSet(G, [identity(G)], WeightKind.ID)

def plus_minus(G):
    return WeightSet(G, [identity(G), negation(G)], WeightKind.PLUS_MINUS)

def enumerate_automorphisms(G, cap=AUT_CAP):
    """
    Aut(G) by brute force over basis images

    Candidates for the image of e_i are the elements whose order divides
    n_i; a candidate tuple is kept when the induced map hits |G| elements.
    Order follows the product over candidates in element-index order.
    """
    if G.order > cap:
        raise OrderCapExceeded(cap, G.order, cap_name='automorphism enumeration cap')
    candidates = [[g for g in G.elements if n % element_order(g) == 0] for n in G.invariant_factors]
    autos = []
    for images in product(*candidates):
        gamma = Endomorphism(G, tuple(images))
        if gamma.is_bijective():
            autos.append(gamma)
    return WeightSet(G, autos, WeightKind.FULL_AUT)

def weight_set_from_spec(G, spec, aut_cap=AUT_CAP):
    """id | pm | aut"""
    spec = spec.strip().lower()
    if spec == "id":
        return identity_weights(G)
    if spec == "pm":
        return plus_minus(G)
    if spec == "aut":
        return enumerate_automorphisms(G, cap=aut_cap)
    raise HypothesisNotMet(f"unknown weight set {spec!r} (expected id, pm or aut)")
