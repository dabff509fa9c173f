"""The wreath product P wr S_n and the left-multiplication embedding.

A model group M with Sylow subgroup P and left coset representatives
m_1..m_n turns every m in M into a right-P-equivariant bijection of M;
reading off coordinates via  m . m_i = m_{sigma(i)} x_{sigma(i)}  gives
the wreath element (x_1..x_n; sigma).  The product convention is

    (x; tau)(y; sigma) = ((x_i . y_{tau^-1(i)})_i ; tau sigma),

the unique choice compatible with composing bijections as functions.
"""

from __future__ import annotations

import itertools

from .config import DEFAULT_CAPS, CapExceeded
from .groups import FiniteGroup, Perm, left_coset_reps

__all__ = ["WreathElement", "ParkGroup", "Embedding", "embedding_for_model"]


class WreathElement:
    """(x_1..x_n; sigma) with x_i in the base group P."""

    __slots__ = ("base", "top")

    def __init__(self, base, top: Perm):
        self.base = tuple(base)
        self.top = top

    def __mul__(self, other):
        if len(self.base) != len(other.base):
            raise ValueError("wreath elements of different degrees")
        tinv = self.top.inverse()
        base = tuple(self.base[i] * other.base[tinv(i)]
                     for i in range(len(self.base)))
        return WreathElement(base, self.top * other.top)

    def inverse(self):
        base = tuple(self.base[self.top(i)].inverse()
                     for i in range(len(self.base)))
        return WreathElement(base, self.top.inverse())

    def identity(self):
        e = self.base[0].identity()
        return WreathElement((e,) * len(self.base), self.top.identity())

    def in_base_group(self):
        return self.top.is_identity()

    def key(self):
        return (self.top.key(), tuple(x.key() for x in self.base))

    def __eq__(self, other):
        return (isinstance(other, WreathElement)
                and self.top == other.top and self.base == other.base)

    def __hash__(self):
        return hash((self.top, self.base))

    def __repr__(self):
        return f"Wreath(top={self.top.images}, base={[x.key() for x in self.base]})"


class ParkGroup:
    """P wr S_n, kept structural; enumerated only when small enough."""

    def __init__(self, p_group: FiniteGroup, n: int, caps=DEFAULT_CAPS):
        self.P = p_group
        self.n = n
        self.caps = caps

    @property
    def order(self):
        import math
        return self.P.order ** self.n * math.factorial(self.n)

    @property
    def identity(self):
        e = self.P.identity
        return WreathElement((e,) * self.n, Perm.identity_of(self.n))

    def wrap(self, base, top):
        base = tuple(base)
        assert len(base) == self.n and all(x in self.P.elements for x in base)
        return WreathElement(base, top)

    def enumerate(self) -> FiniteGroup:
        """Materialize all |P|^n n! elements (p = 2 scale only)."""
        if self.order > self.caps.closure_cap:
            raise CapExceeded("ParkGroup.enumerate", "closure_cap",
                              self.caps.closure_cap, needed=self.order)
        pel = self.P.sorted_elements()
        elems = []
        for top in itertools.permutations(range(self.n)):
            tp = Perm(top)
            for base in itertools.product(pel, repeat=self.n):
                elems.append(WreathElement(base, tp))
        g = FiniteGroup(elements=elems, caps=self.caps,
                        name=f"{self.P.name} wr S_{self.n}")
        assert g.order == self.order
        return g


class Embedding:
    """iota : M -> P wr S_n from left multiplication on the coset table.

    ``resolver(x) -> (j, u)`` writes x = m_j u with u in P; for Qd(p) this
    is the matrix-part test of the coset table, for generic models a
    lookup table over the enumerated group.
    """

    def __init__(self, model: FiniteGroup, p_group: FiniteGroup, reps,
                 resolver, caps=DEFAULT_CAPS):
        self.M = model
        self.P = p_group
        self.reps = list(reps)
        self.n = len(self.reps)
        self.resolver = resolver
        self.G = ParkGroup(p_group, self.n, caps=caps)
        self._cache = {}

    def sigma(self, m) -> Perm:
        return self.iota(m).top

    def iota(self, m) -> WreathElement:
        w = self._cache.get(m)
        if w is not None:
            return w
        base = [None] * self.n
        img = [None] * self.n
        for i, mi in enumerate(self.reps):
            j, u = self.resolver(m * mi)
            img[i] = j
            base[j] = u
        w = WreathElement(base, Perm(img))
        self._cache[m] = w
        return w

    def iota_image(self):
        """iota(M) as a set of wreath elements."""
        return frozenset(self.iota(m) for m in self.M.elements)

    def iota_subgroup(self, elems):
        return frozenset(self.iota(m) for m in elems)

    def iota_as_bijection(self, m):
        """The left-multiplication bijection x -> m x on the model itself."""
        return {x: m * x for x in self.M.elements}

    def wreath_from_bijection(self, f) -> WreathElement:
        """Reconstruct wreath coordinates from a bijection of the model."""
        base = [None] * self.n
        img = [None] * self.n
        for i, mi in enumerate(self.reps):
            j, u = self.resolver(f[mi])
            img[i] = j
            base[j] = u
        return WreathElement(base, Perm(img))


def qd_embedding(p, caps=DEFAULT_CAPS, lazy=False) -> Embedding:
    """Embedding for the model Qd(p), resolving cosets by matrix test.

    With lazy=True the model group is not enumerated; everything driven by
    the coset table (sigma computations, P-level checks) still works.
    """
    from .qd import build_qd, coset_reps, sylow_subgroup

    model = build_qd(p, caps=caps, verify=not lazy)
    P = sylow_subgroup(model, p)
    table = coset_reps(p)
    return Embedding(model, P, table.reps, table.resolve, caps=caps)


def embedding_for_model(model: FiniteGroup, p_group: FiniteGroup,
                        caps=DEFAULT_CAPS) -> Embedding:
    """Embedding for an arbitrary enumerable model via a lookup resolver."""
    reps = left_coset_reps(model, p_group)
    table = {}
    for j, r in enumerate(reps):
        for u in p_group.elements:
            table[r * u] = (j, u)
    assert len(table) == model.order
    return Embedding(model, p_group, reps, table.__getitem__, caps=caps)
