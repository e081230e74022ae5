"""
The form class group F_Δ and its identification with an abstract
FiniteAbelianGroup
"""
from collections import Counter
from functools import lru_cache

import numpy as np
from sympy import divisors

from wzslab.config import ORDER_CAP
from wzslab.errors import CompositionInconsistent
from wzslab.group_module import element_order, make_group
from wzslab.logger import logger
from wzslab.qform_module.forms import as_discriminant, compose, enumerate_reduced, principal_form, reduce_form

class FormClassGroup:
    """
    Reduced representatives of F_Δ with the composition table

    Class i is self.forms[i]; self.to_group[i] is the matching element of
    self.group, and self.from_group[g.index] maps back.
    """

    def __init__(self, disc, order_cap=ORDER_CAP):
        self.disc = as_discriminant(disc)
        self.forms = enumerate_reduced(self.disc)
        self._position = {f.key(): i for i, f in enumerate(self.forms)}
        self.principal = self.index(principal_form(self.disc))
        self.table = self._build_table()
        self.negation = [self.index(reduce_form(f.negate())) for f in self.forms]
        self._check_axioms()
        self.orders = [self._order_of(i) for i in range(self.h)]
        self.group, self.to_group = self._identify(order_cap)
        self.from_group = {g.index: i for i, g in enumerate(self.to_group)}
        logger.debug(f"F_{self.disc.value}: h = {self.h}, structure {self.group.label()}")

    @property
    def h(self):
        return len(self.forms)

    def __len__(self):
        return self.h

    def __repr__(self):
        return f"FormClassGroup({self.disc.value}, h={self.h}, {self.group.label()})"

    def index(self, form):
        return self._position[reduce_form(form).key()]

    def form(self, i):
        return self.forms[i]

    def add(self, i, j):
        return int(self.table[i, j])

    def neg(self, i):
        return self.negation[i]

    def element(self, i):
        return self.to_group[i]

    def _build_table(self):
        n = self.h
        table = np.zeros((n, n), dtype=np.int64)
        for i, f in enumerate(self.forms):
            for j in range(i, n):
                k = self.index(compose(f, self.forms[j]))
                table[i, j] = table[j, i] = k
        table.setflags(write=False)
        return table

    def _check_axioms(self):
        t = self.table
        o = self.principal
        every = np.arange(self.h)
        if not np.array_equal(t[o], every):
            raise CompositionInconsistent(f"O is not the identity of F_{self.disc.value}")
        if not np.array_equal(t, t.T):
            raise CompositionInconsistent("composition table is not symmetric")
        for i in range(self.h):
            if t[i, self.negation[i]] != o:
                raise CompositionInconsistent(f"{self.forms[i]!r} + (-F) != O")
            if not np.array_equal(t[t[i]], t[i][t]):
                raise CompositionInconsistent(f"associativity fails at {self.forms[i]!r}")
        if self.negation[o] != o:
            raise CompositionInconsistent("-O != O")

    def _order_of(self, i):
        k, x = 1, i
        while x != self.principal:
            x = self.add(x, i)
            k += 1
        return k

    def multiple(self, k, i):
        x = self.principal
        for _ in range(k % self.orders[i]):
            x = self.add(x, i)
        return x

    def _identify(self, order_cap):
        """Match order statistics against each divisor chain, then find a basis"""
        profile = Counter(self.orders)
        for chain in _divisor_chains(self.h, 1):
            G = make_group(chain, cap=max(order_cap, self.h))
            if Counter(element_order(g) for g in G.elements) != profile:
                continue
            basis = self._basis_for(chain)
            if basis is None:
                continue
            to_group = [None] * self.h
            for g in G.elements:
                x = self.principal
                for coord, b in zip(g.coordinates, basis):
                    x = self.add(x, self.multiple(coord, b))
                to_group[x] = g
            if any(g is None for g in to_group):
                raise CompositionInconsistent(f"basis {basis} does not span F_{self.disc.value}")
            return G, to_group
        raise CompositionInconsistent(f"no abelian group matches the order profile of F_{self.disc.value}")

    def _basis_for(self, chain):
        # Classes b_i of order n_i whose spans multiply to |F_Δ|
        def span(gens):
            members = {self.principal}
            frontier = [self.principal]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in gens:
                        y = self.add(x, g)
                        if y not in members:
                            members.add(y)
                            nxt.append(y)
                frontier = nxt
            return members

        def search(i, chosen, size):
            if i == len(chain):
                return list(chosen)
            for x in range(self.h):
                if self.orders[x] != chain[i] or x in chosen:
                    continue
                if len(span(chosen + [x])) == size * chain[i]:
                    found = search(i + 1, chosen + [x], size * chain[i])
                    if found is not None:
                        return found
            return None

        return search(0, [], 1)

    def ambiguous_classes(self):
        """Classes with 2F = O"""
        return [i for i in range(self.h) if self.add(i, i) == self.principal]

    def as_dict(self):
        return {
            "discriminant": self.disc.value,
            "fundamental": self.disc.fundamental,
            "conductor": self.disc.conductor,
            "class_number": self.h,
            "structure": self.group.label(),
            "invariant_factors": list(self.group.invariant_factors),
            "forms": [list(f.key()) for f in self.forms],
            "principal": self.principal,
            "negation": list(self.negation),
            "orders": list(self.orders),
            "ambiguous": self.ambiguous_classes(),
            "to_group": [repr(g) for g in self.to_group],
            "table": self.table.tolist(),
        }

def _divisor_chains(h, prev):
    """n_1 | n_2 | ... with every n_i ≥ 2 and product h"""
    if h == 1:
        yield ()
        return
    for n in divisors(h):
        if n < 2 or n % prev:
            continue
        for rest in _divisor_chains(h // n, n):
            yield (n,) + rest

@lru_cache(maxsize=64)
def class_group(disc):
    """F_Δ, cached per discriminant value"""
    return FormClassGroup(as_discriminant(disc).value)
