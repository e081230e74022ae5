"""
The class semigroup C(B_Γ(G), F(G)) for a group Γ ⊆ Aut(G)

Two sequences are equivalent iff their σ_Γ value sets agree, so a class is
its value set. The semigroup is the closure of {0} under adding the orbits
Γg, with the Minkowski sum as operation.
"""
from collections import deque

import numpy as np

from wzslab.config import CLASS_SEMIGROUP_CAP
from wzslab.errors import CapExceeded, WeightSetNotGroup
from wzslab.group_module import is_subgroup_indices
from wzslab.logger import logger
from wzslab.sequence_module import GSubset, sigma_gamma

class ClassSemigroup:
    """
    Elements in canonical value-set order (size, then indices); the
    identity {0} is element 0.
    """

    def __init__(self, weights, elements):
        self.weights = weights
        self.group = weights.group
        self.elements = sorted(elements, key=lambda x: x.sort_key())
        self._position = {x.key(): i for i, x in enumerate(self.elements)}
        self.table = self._build_table()
        self.idempotents = [i for i in range(len(self)) if self.table[i, i] == i]

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"ClassSemigroup({self.weights.label()}, {self.group.label()}, |C|={len(self)})"

    def index(self, subset):
        return self._position[subset.key()]

    def _build_table(self):
        n = len(self.elements)
        table = np.zeros((n, n), dtype=np.int64)
        for i, x in enumerate(self.elements):
            for j in range(i, n):
                k = self._position[(x + self.elements[j]).key()]
                table[i, j] = table[j, i] = k
        table.setflags(write=False)
        return table

    def add(self, i, j):
        return int(self.table[i, j])

    def class_of(self, S):
        """Index of [S]"""
        return self.index(sigma_gamma(S, self.weights))

    # Checks

    def is_commutative(self):
        return bool(np.array_equal(self.table, self.table.T))

    def is_associative(self):
        t = self.table
        # (x + y) + z against x + (y + z), one x at a time
        for x in range(len(self)):
            if not np.array_equal(t[t[x]], t[x][t]):
                return False
        return True

    def idempotents_are_subgroups(self):
        return all(is_subgroup_indices(self.group, self.elements[e].indices()) for e in self.idempotents)

    # Idempotents and constituent groups

    def rees_leq(self, e, f):
        """e ≤ f iff e + f = e"""
        return self.add(e, f) == e

    def rees_hasse(self):
        """Covering pairs (e, f) with e < f in the Rees order"""
        E = self.idempotents
        below = {(e, f) for e in E for f in E if e != f and self.rees_leq(e, f)}
        edges = []
        for e, f in sorted(below):
            if not any((e, g) in below and (g, f) in below for g in E):
                edges.append((e, f))
        return edges

    def constituent_group(self, e):
        """C_e = {x : x + e = x and x + y = e for some y}"""
        row_hits = set()
        for x in range(len(self)):
            if self.add(x, e) != x:
                continue
            if np.any(self.table[x] == e):
                row_hits.add(x)
        return sorted(row_hits)

    def constituent_groups(self):
        return {e: self.constituent_group(e) for e in self.idempotents}

    def is_clifford(self):
        """The constituent groups partition the semigroup"""
        covered = []
        for members in self.constituent_groups().values():
            covered.extend(members)
        return sorted(covered) == list(range(len(self)))

    def is_elementary_two(self, e):
        """Every x in C_e satisfies x + x = e"""
        return all(self.add(x, x) == e for x in self.constituent_group(e))

    def as_dict(self):
        groups = self.constituent_groups()
        return {
            "weights": self.weights.label(),
            "group": self.group.label(),
            "size": len(self),
            "elements": [[repr(g) for g in x.elements()] for x in self.elements],
            "table": self.table.tolist(),
            "idempotents": list(self.idempotents),
            "rees_hasse": [list(edge) for edge in self.rees_hasse()],
            "constituent_group_orders": {str(e): len(members) for e, members in groups.items()},
            "clifford": self.is_clifford(),
        }

def class_semigroup(G, weights, cap=CLASS_SEMIGROUP_CAP):
    """Worklist closure of {0} under + Γg for g ∈ G"""
    if weights.group != G:
        raise WeightSetNotGroup("weight set belongs to another group")
    if not weights.is_group:
        raise WeightSetNotGroup(f"weight set {weights.label()} is not a subgroup of Aut({G.label()})")
    generators = [GSubset.from_indices(G, weights.orbit_indices[i]) for i in range(G.order)]
    start = GSubset.zero(G)
    seen = {start.key(): start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for gen in generators:
            y = x + gen
            if y.key() not in seen:
                seen[y.key()] = y
                if len(seen) > cap:
                    raise CapExceeded("class semigroup cap", cap, len(seen))
                queue.append(y)
    logger.debug(f"class semigroup of B_{weights.label()}({G.label()}): {len(seen)} classes")
    return ClassSemigroup(weights, seen.values())
