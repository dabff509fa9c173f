"""Fusion systems of finite groups by explicit conjugation morphisms.

A morphism Q -> R is stored as its graph (the induced map), deduplicated
across the conjugating witnesses that induce it.  F-conjugacy, the
fully-normalized / fully-centralized flags and the constrained-model
predicates are all computed by direct scans over the ambient group.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groups import (FiniteGroup, all_subgroups, centralizer, generating_set,
                     normalizer, p_core, p_prime_core, subgroup_conjugate)

__all__ = [
    "ConjugationMap",
    "FusionSystem",
    "hom_set",
    "fusion_equal",
    "SubgroupClassification",
    "classify_subgroups",
    "is_strictly_p_constrained",
    "is_constrained",
]


@dataclass(frozen=True)
class ConjugationMap:
    """Monomorphism Q -> R given by x -> g x g^-1, stored as its graph."""

    graph: tuple  # sorted tuple of (x, g x g^-1) pairs
    witness: object  # one conjugating element inducing the map

    def apply(self, x):
        for a, b in self.graph:
            if a == x:
                return b
        raise KeyError(x)

    def verify(self):
        g = self.witness
        gi = g.inverse()
        return all(b == g * a * gi for a, b in self.graph)


def _graph_of(g, q_elems):
    gi = g.inverse()
    return tuple(sorted(((a, g * a * gi) for a in q_elems),
                        key=lambda ab: ab[0].key()))


def hom_set(h: FiniteGroup, q_elems, r_elems):
    """All conjugation-induced monomorphisms Q -> R with h-witnesses."""
    q_elems = frozenset(q_elems)
    r_elems = frozenset(r_elems)
    seen = {}
    for g in h.sorted_elements():
        if subgroup_conjugate(h, q_elems, g) <= r_elems:
            graph = _graph_of(g, q_elems)
            if graph not in seen:
                seen[graph] = ConjugationMap(graph=graph, witness=g)
    return sorted(seen.values(), key=lambda m: tuple((a.key(), b.key()) for a, b in m.graph))


def fusion_equal(h1: FiniteGroup, h2: FiniteGroup, p_sub: FiniteGroup):
    """Whether F_P(h1) = F_P(h2), quantifying over subgroup pairs of P.

    Returns (equal, witness); the witness names the first subgroup pair
    with differing morphism graphs.
    """
    subs = all_subgroups(p_sub)
    for q in subs:
        for r in subs:
            g1 = {m.graph for m in hom_set(h1, q.elements, r.elements)}
            g2 = {m.graph for m in hom_set(h2, q.elements, r.elements)}
            if g1 != g2:
                return False, {
                    "Q_order": q.order, "R_order": r.order,
                    "only_in_first": len(g1 - g2), "only_in_second": len(g2 - g1),
                }
    return True, None


class FusionSystem:
    """F_P(H): ambient group, Sylow subgroup, memoized morphism sets."""

    def __init__(self, ambient: FiniteGroup, p_sub: FiniteGroup, p: int):
        self.H = ambient
        self.P = p_sub
        self.p = p
        self._homs = {}

    def hom(self, q: FiniteGroup, r: FiniteGroup):
        key = (q.elements, r.elements)
        if key not in self._homs:
            self._homs[key] = hom_set(self.H, q.elements, r.elements)
        return self._homs[key]

    def are_conjugate(self, q_elems, r_elems):
        q_elems, r_elems = frozenset(q_elems), frozenset(r_elems)
        if len(q_elems) != len(r_elems):
            return False
        return any(subgroup_conjugate(self.H, q_elems, g) == r_elems
                   for g in self.H.elements)

    def o_p(self):
        """O_p(F) computed as O_p of the ambient model."""
        return p_core(self.H, self.p)


@dataclass
class SubgroupClassification:
    """F-conjugacy classes of subgroups of P with locality flags."""

    classes: list = field(default_factory=list)  # list of list[FiniteGroup]
    fully_normalized: dict = field(default_factory=dict)  # elements -> bool
    fully_centralized: dict = field(default_factory=dict)
    representatives: list = field(default_factory=list)

    def class_of(self, sub_elems):
        sub_elems = frozenset(sub_elems)
        for i, cls in enumerate(self.classes):
            if any(q.elements == sub_elems for q in cls):
                return i
        raise KeyError("subgroup not classified")


def classify_subgroups(fs: FusionSystem) -> SubgroupClassification:
    """Partition the subgroup lattice of P into F-conjugacy classes.

    The chosen representative of each class maximizes |N_P(Q)| (is fully
    normalized); flags record which members attain the class maxima.
    """
    subs = all_subgroups(fs.P)
    by_set = {q.elements: q for q in subs}
    gens = fs.H.generators or generating_set(fs.H)
    gens = list(gens) + [g.inverse() for g in gens]
    out = SubgroupClassification()
    assigned = set()
    for q in subs:
        if q.elements in assigned:
            continue
        # orbit of the subgroup under conjugation by ambient generators;
        # conjugates leaving P are tracked but not classified
        orbit = {q.elements}
        frontier = [q.elements]
        while frontier:
            s = frontier.pop()
            for g in gens:
                c = subgroup_conjugate(fs.H, s, g)
                if c not in orbit:
                    orbit.add(c)
                    frontier.append(c)
        cls = [by_set[s] for s in sorted(
            (s for s in orbit if s in by_set),
            key=lambda s: sorted(x.key() for x in s))]
        for r in cls:
            assigned.add(r.elements)
        norms = {r.elements: normalizer(fs.P, r.elements).order for r in cls}
        cents = {r.elements: centralizer(fs.P, r.elements).order for r in cls}
        max_n, max_c = max(norms.values()), max(cents.values())
        for r in cls:
            out.fully_normalized[r.elements] = norms[r.elements] == max_n
            out.fully_centralized[r.elements] = cents[r.elements] == max_c
        rep = min((r for r in cls if norms[r.elements] == max_n),
                  key=lambda r: sorted(x.key() for x in r.elements))
        out.classes.append(cls)
        out.representatives.append(rep)
    return out


def is_strictly_p_constrained(h: FiniteGroup, p) -> bool:
    """O_{p'}(H) = 1 and C_H(O_p(H)) <= O_p(H)."""
    if p_prime_core(h, p).order != 1:
        return False
    op = p_core(h, p)
    return centralizer(h, op.elements).elements <= op.elements


def is_constrained(fs: FusionSystem) -> bool:
    """C_P(O_p(F)) <= O_p(F), with O_p(F) taken from the ambient model."""
    op = fs.o_p()
    return centralizer(fs.P, op.elements).elements <= op.elements
