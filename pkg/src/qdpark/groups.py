"""Generic machinery for finite groups small enough to enumerate.

Elements are immutable values with a carrier-specific canonical form; the
protocol is ``a * b``, ``a.inverse()``, ``a.identity()`` and a totally
ordered ``a.key()``.  All derived sets (cosets, centralizers, Sylow
subgroups, ...) are computed by deterministic scans over the sorted
element list, so results are reproducible byte for byte.
"""

from __future__ import annotations

from .config import Caps, CapExceeded, DEFAULT_CAPS

__all__ = [
    "Perm",
    "Coset",
    "FiniteGroup",
    "closure_set",
    "element_order",
    "left_coset_reps",
    "centralizer",
    "normalizer",
    "sylow_p",
    "all_subgroups",
    "conjugacy_classes",
    "subgroup_conjugate",
    "is_normal",
    "normal_closure",
    "p_part",
    "p_core",
    "p_prime_core",
    "p_length",
    "quotient_group",
    "set_product",
    "generating_set",
]


class Perm:
    """Permutation of {0..n-1} stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(images)

    @classmethod
    def identity_of(cls, n):
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n, *cycles):
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(img)

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        # (self * other)(i) = self(other(i))
        return Perm(self.images[j] for j in other.images)

    def inverse(self):
        img = [0] * len(self.images)
        for i, j in enumerate(self.images):
            img[j] = i
        return Perm(img)

    def identity(self):
        return Perm.identity_of(len(self.images))

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self):
        """Nontrivial cycles, each starting at its least point."""
        seen = [False] * len(self.images)
        out = []
        for i in range(len(self.images)):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def fixed(self):
        return [i for i, j in enumerate(self.images) if i == j]

    def key(self):
        return self.images

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm{self.images}"


class Coset:
    """Coset aN of a normal subgroup, usable as a group element itself."""

    __slots__ = ("members", "_key")

    def __init__(self, members):
        self.members = frozenset(members)
        self._key = min(x.key() for x in self.members)

    def _rep(self):
        return min(self.members, key=lambda x: x.key())

    def __mul__(self, other):
        a = self._rep()
        return Coset(a * x for x in other.members)

    def inverse(self):
        return Coset(x.inverse() for x in self.members)

    def identity(self):
        a = self._rep()
        ai = a.inverse()
        return Coset(ai * x for x in self.members)

    def key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, Coset) and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"Coset({self._rep()!r}, size={len(self.members)})"


def closure_set(generators, cap=DEFAULT_CAPS.closure_cap, what="closure"):
    """Smallest set closed under products containing the generators."""
    generators = list(generators)
    if not generators:
        raise ValueError("closure needs at least one generator (or the identity)")
    e = generators[0].identity()
    elems = {e}
    frontier = [e]
    gens = []
    for g in generators:
        if g not in elems:
            elems.add(g)
            frontier.append(g)
        gens.append(g)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
                    if len(elems) > cap:
                        raise CapExceeded(what, "closure_cap", cap)
        frontier = nxt
    return frozenset(elems)


def element_order(x):
    e = x.identity()
    y = x
    n = 1
    while y != e:
        y = y * x
        n += 1
    return n


class FiniteGroup:
    """Finite group materialized as an explicit element set.

    Construct either from generators (closure is run on first access) or
    from an explicit element set.  ``parent`` marks subgroup provenance.
    """

    def __init__(self, generators=None, elements=None, caps=DEFAULT_CAPS,
                 name="", parent=None):
        if generators is None and elements is None:
            raise ValueError("need generators or elements")
        self.generators = list(generators) if generators is not None else None
        self._elements = frozenset(elements) if elements is not None else None
        self.caps = caps
        self.name = name
        self.parent = parent
        self._sorted = None

    @property
    def elements(self):
        if self._elements is None:
            self._elements = closure_set(
                self.generators, self.caps.closure_cap, what=f"closure({self.name})")
        return self._elements

    @property
    def order(self):
        return len(self.elements)

    @property
    def identity(self):
        if self.generators:
            return self.generators[0].identity()
        return next(iter(self.elements)).identity()

    def sorted_elements(self):
        if self._sorted is None:
            self._sorted = sorted(self.elements, key=lambda x: x.key())
        return self._sorted

    def __contains__(self, x):
        return x in self.elements

    def __iter__(self):
        return iter(self.sorted_elements())

    def __len__(self):
        return self.order

    def subgroup(self, generators=None, elements=None, name=""):
        sub = FiniteGroup(generators=generators, elements=elements,
                          caps=self.caps, name=name, parent=self)
        return sub

    def subgroup_from_set(self, elems, name=""):
        return self.subgroup(elements=elems, name=name)

    def is_subset_subgroup(self, elems):
        """Check a subset is a genuine subgroup (closed, with inverses)."""
        elems = frozenset(elems)
        if self.identity not in elems:
            return False
        for a in elems:
            if a.inverse() not in elems:
                return False
            for b in elems:
                if a * b not in elems:
                    return False
        return True

    def __repr__(self):
        n = self.name or "FiniteGroup"
        if self._elements is not None:
            return f"{n}(order={self.order})"
        return f"{n}(generators={len(self.generators)})"


def left_coset_reps(g: FiniteGroup, h: FiniteGroup):
    """Left coset representatives of h in g, first rep is the identity.

    The cosets are checked to be pairwise disjoint and to cover g.
    """
    helems = h.elements
    if not helems <= g.elements:
        raise ValueError("h is not contained in g")
    if g.order % len(helems) != 0:
        raise ValueError("h is not a subgroup of g (Lagrange fails)")
    seen = set()
    reps = []
    for x in [g.identity] + g.sorted_elements():
        if x in seen:
            continue
        reps.append(x)
        coset = {x * u for u in helems}
        if coset & seen:
            raise AssertionError("cosets are not disjoint; h is not a subgroup")
        seen |= coset
    assert len(seen) == g.order and len(reps) == g.order // len(helems)
    return reps


def centralizer(g: FiniteGroup, s, name="centralizer"):
    """C_g(s) for a set (or iterable) of elements s, by full scan."""
    s = list(s)
    elems = frozenset(x for x in g.elements
                      if all(x * a == a * x for a in s))
    return g.subgroup_from_set(elems, name=name)


def normalizer(g: FiniteGroup, s, name="normalizer"):
    """N_g(s) = {x : x s x^-1 = s} for a subset s, by full scan."""
    s = frozenset(s)
    elems = frozenset(x for x in g.elements
                      if frozenset(x * a * x.inverse() for a in s) == s)
    return g.subgroup_from_set(elems, name=name)


def p_part(n, p):
    m = 1
    while n % p == 0:
        n //= p
        m *= p
    return m


def _p_element_power(x, p):
    """Power of x of order the p-part of |x|."""
    n = element_order(x)
    q = n // p_part(n, p)
    y = x
    for _ in range(q - 1):
        y = y * x
    return y  # x**q


def sylow_p(g: FiniteGroup, p):
    """A Sylow p-subgroup, grown inside successive normalizers."""
    target = p_part(g.order, p)
    h = g.subgroup_from_set({g.identity}, name=f"sylow_{p}")
    while h.order < target:
        n = normalizer(g, h.elements)
        grown = False
        for x in n.sorted_elements():
            if x in h.elements:
                continue
            y = _p_element_power(x, p)
            if y in h.elements or y == g.identity:
                continue
            j = closure_set(list(h.elements) + [y], cap=g.caps.closure_cap,
                            what="sylow_p")
            if len(j) == p_part(len(j), p):
                h = g.subgroup_from_set(j, name=f"sylow_{p}")
                grown = True
                break
        if not grown:
            raise AssertionError("sylow_p failed to grow; non-group input?")
    return h


def conjugacy_classes(g: FiniteGroup):
    seen = set()
    classes = []
    for x in g.sorted_elements():
        if x in seen:
            continue
        cls = frozenset(a * x * a.inverse() for a in g.elements)
        seen |= cls
        classes.append(cls)
    return classes


def subgroup_conjugate(g: FiniteGroup, sub_elems, x):
    """x S x^-1 as a frozenset; conjugation determined elementwise."""
    xi = x.inverse()
    return frozenset(x * s * xi for s in sub_elems)


def is_normal(g: FiniteGroup, sub_elems):
    sub_elems = frozenset(sub_elems)
    return all(subgroup_conjugate(g, sub_elems, x) == sub_elems
               for x in g.generators or g.sorted_elements())


def normal_closure(g: FiniteGroup, s):
    conj = [x * a * x.inverse() for a in s for x in g.elements]
    return closure_set(conj + [g.identity], cap=g.caps.closure_cap,
                       what="normal_closure")


def all_subgroups(g: FiniteGroup):
    """Every subgroup, by closing the cyclic subgroups under joins.

    Joining with arbitrary cyclic subgroups (not only those inside a
    normalizer) reaches every subgroup, including perfect ones.
    """
    if g.order > g.caps.subgroup_order_cap:
        raise CapExceeded("all_subgroups", "subgroup_order_cap",
                          g.caps.subgroup_order_cap, needed=g.order)
    cyclics = set()
    for x in g.sorted_elements():
        cyclics.add(closure_set([x], cap=g.caps.closure_cap, what="cyclic"))
    subs = {frozenset([g.identity])} | cyclics
    frontier = set(subs)
    while frontier:
        new = set()
        for h in frontier:
            for c in cyclics:
                if c <= h:
                    continue
                j = closure_set(list(h | c), cap=g.caps.closure_cap,
                                what="subgroup join")
                if j not in subs and j not in new:
                    new.add(j)
        subs |= new
        frontier = new
    out = [g.subgroup_from_set(s) for s in subs]
    out.sort(key=lambda h: (h.order, sorted(x.key() for x in h.elements)))
    return out


def p_core(g: FiniteGroup, p):
    """O_p(g): intersection of all Sylow p-subgroups."""
    s = sylow_p(g, p)
    core = set(s.elements)
    for x in g.sorted_elements():
        core &= subgroup_conjugate(g, s.elements, x)
        if len(core) == 1:
            break
    return g.subgroup_from_set(frozenset(core), name=f"O_{p}")


def p_prime_core(g: FiniteGroup, p):
    """O_{p'}(g): largest normal subgroup of order coprime to p.

    A conjugacy class lies in O_{p'} exactly when its normal closure is a
    p'-group, and the product of normal p'-subgroups is again one.
    """
    good = []
    for cls in conjugacy_classes(g):
        x = next(iter(cls))
        if element_order(x) % p == 0:
            continue
        nc = normal_closure(g, [x])
        if all(element_order(y) % p != 0 for y in nc) and len(nc) % p != 0:
            good.extend(cls)
    core = closure_set(good + [g.identity], cap=g.caps.closure_cap,
                       what="p_prime_core")
    assert len(core) % p != 0
    return g.subgroup_from_set(core, name=f"O_{p}'")


def quotient_group(g: FiniteGroup, n: FiniteGroup):
    """g/n for a normal subgroup n, with Coset elements."""
    nelems = n.elements
    if not is_normal(g, nelems):
        raise ValueError("quotient by a non-normal subgroup")
    seen = set()
    cosets = []
    for x in g.sorted_elements():
        if x in seen:
            continue
        c = frozenset(x * u for u in nelems)
        seen |= c
        cosets.append(Coset(c))
    return FiniteGroup(elements=cosets, caps=g.caps, name=f"{g.name}/{n.name}")


def p_length(g: FiniteGroup, p):
    """Number of p-steps in the upper O_{p'}/O_p series."""
    h = g
    count = 0
    while h.order > 1:
        opp = p_prime_core(h, p)
        if opp.order > 1:
            h = quotient_group(h, opp)
        if h.order == 1:
            break
        op = p_core(h, p)
        if op.order == 1:
            raise AssertionError(f"group is not {p}-solvable; p_length undefined")
        count += 1
        h = quotient_group(h, op)
    return count


def set_product(a, b):
    """{x*y : x in a, y in b} as a frozenset."""
    return frozenset(x * y for x in a for y in b)


def generating_set(g: FiniteGroup):
    """Small generating set found greedily over the sorted elements."""
    gens = []
    have = {g.identity}
    for x in g.sorted_elements():
        if x not in have:
            gens.append(x)
            have = closure_set(gens, cap=g.caps.closure_cap, what="generating_set")
            if len(have) == g.order:
                break
    return gens
