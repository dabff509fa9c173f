"""The quadratic group Qd(p) = (Z/p x Z/p) x| SL(2,p) and its coset table.

Elements are pairs (v, A) with v a translation in V = (Z/p)^2 and A in
SL(2,p) acting on column vectors, multiplied by
(v, A)(w, B) = (v + A.w, A.B).  The Sylow p-subgroup is P = V x| <alpha>
with alpha the upper elementary transvection.  The table of left coset
representatives m_1..m_{p^2-1} of P follows the explicit beta/gamma/nu
pattern, and membership x in m_j P is decided by a matrix test alone, so
no enumeration of Qd(p) is needed to resolve cosets.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import DEFAULT_CAPS, CapExceeded
from .groups import FiniteGroup

__all__ = [
    "SL2",
    "QdElement",
    "CosetRepTable",
    "alpha",
    "beta",
    "gamma",
    "nu",
    "t_element",
    "v_translation",
    "qd_order",
    "build_qd",
    "sylow_subgroup",
    "coset_reps",
    "in_sylow",
    "check_alpha_beta_relation",
    "f_iteration",
    "sigma_of_alpha_cycle_check",
    "v_base_formula_check",
    "lemma_4_3_matrix",
]


class SL2:
    """2x2 determinant-one matrix over GF(p)."""

    __slots__ = ("p", "a", "b", "c", "d")

    def __init__(self, p, a, b, c, d):
        self.p = p
        self.a, self.b, self.c, self.d = a % p, b % p, c % p, d % p
        if (self.a * self.d - self.b * self.c) % p != 1:
            raise ValueError("determinant is not 1")

    def __mul__(self, other):
        p = self.p
        return SL2(p,
                   self.a * other.a + self.b * other.c,
                   self.a * other.b + self.b * other.d,
                   self.c * other.a + self.d * other.c,
                   self.c * other.b + self.d * other.d)

    def inverse(self):
        return SL2(self.p, self.d, -self.b, -self.c, self.a)

    def identity(self):
        return SL2(self.p, 1, 0, 0, 1)

    def apply(self, v):
        """Action on a column vector (pair)."""
        p = self.p
        return ((self.a * v[0] + self.b * v[1]) % p,
                (self.c * v[0] + self.d * v[1]) % p)

    def key(self):
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        return isinstance(other, SL2) and self.p == other.p and self.key() == other.key()

    def __hash__(self):
        return hash((self.p,) + self.key())

    def __repr__(self):
        return f"SL2(p={self.p}, [[{self.a},{self.b}],[{self.c},{self.d}]])"


class QdElement:
    """Element (v, A) of Qd(p) with the left-action product law."""

    __slots__ = ("p", "v", "m")

    def __init__(self, p, v, m):
        self.p = p
        self.v = (v[0] % p, v[1] % p)
        self.m = m

    def __mul__(self, other):
        w = self.m.apply(other.v)
        return QdElement(self.p,
                         ((self.v[0] + w[0]), (self.v[1] + w[1])),
                         self.m * other.m)

    def inverse(self):
        mi = self.m.inverse()
        w = mi.apply(self.v)
        return QdElement(self.p, (-w[0], -w[1]), mi)

    def identity(self):
        return QdElement(self.p, (0, 0), self.m.identity())

    def key(self):
        return self.v + self.m.key()

    def __eq__(self, other):
        return (isinstance(other, QdElement) and self.p == other.p
                and self.v == other.v and self.m == other.m)

    def __hash__(self):
        return hash((self.p, self.v) + self.m.key())

    def __repr__(self):
        return f"Qd(p={self.p}, v={self.v}, m={self.m.key()})"


def alpha(p):
    return SL2(p, 1, 1, 0, 1)


def beta(p):
    return SL2(p, 1, 0, 1, 1)


def gamma(p):
    return SL2(p, 0, -1, 1, 0)


def nu(p, r):
    return SL2(p, r, 0, 0, pow(r, p - 2, p))


def _lift(p, m: SL2) -> QdElement:
    return QdElement(p, (0, 0), m)


def v_translation(p, x, y):
    return QdElement(p, (x, y), SL2(p, 1, 0, 0, 1))


def t_element(p):
    """The element t = (1,0) of V, central in P."""
    return v_translation(p, 1, 0)


def qd_order(p):
    return p ** 3 * (p * p - 1)


def build_qd(p, caps=DEFAULT_CAPS, verify=True) -> FiniteGroup:
    """Qd(p) as a (lazily enumerated) group; |Qd(p)| = p^3 (p^2 - 1).

    With verify=False the element set is not materialized up front, which
    lets coset-table computations run for p where enumeration is wasteful.
    """
    if qd_order(p) > caps.closure_cap:
        raise CapExceeded("build_qd", "closure_cap", caps.closure_cap,
                          needed=qd_order(p))
    gens = [v_translation(p, 1, 0), v_translation(p, 0, 1),
            _lift(p, alpha(p)), _lift(p, beta(p))]
    g = FiniteGroup(generators=gens, caps=caps, name=f"Qd({p})")
    if verify:
        assert g.order == qd_order(p)
    return g


def sylow_subgroup(qd: FiniteGroup, p) -> FiniteGroup:
    """P = V x| <alpha>, of order p^3."""
    gens = [v_translation(p, 1, 0), v_translation(p, 0, 1), _lift(p, alpha(p))]
    sub = qd.subgroup(generators=gens, name=f"P({p})")
    assert sub.order == p ** 3
    return sub


def in_sylow(x: QdElement) -> bool:
    """Membership in P = V x| <alpha>: the matrix part is unipotent upper."""
    m = x.m
    return m.a == 1 and m.d == 1 and m.c == 0


@dataclass
class CosetRepTable:
    """Left coset representatives m_1..m_n of P in Qd(p), n = p^2 - 1."""

    p: int
    reps: list = field(default_factory=list)

    @property
    def n(self):
        return self.p * self.p - 1

    def coset_index(self, x: QdElement) -> int:
        """The unique j (0-based) with x in m_j P."""
        for j, m in enumerate(self.reps):
            if in_sylow(m.inverse() * x):
                return j
        raise AssertionError("coset table does not cover Qd(p): corrupt table")

    def resolve(self, x: QdElement):
        """(j, u) with x = m_j u and u in P."""
        j = self.coset_index(x)
        u = self.reps[j].inverse() * x
        return j, u


def coset_reps(p) -> CosetRepTable:
    """Build the rep table: beta^s nu_{r+1} blocks then gamma nu_{r+1}."""
    reps = []
    for j in range(1, p * p - p + 1):
        s, r = divmod(j - 1, p - 1)
        reps.append(_lift(p, _sl2_pow(beta(p), s) * nu(p, r + 1)))
    for j in range(p * p - p + 1, p * p):
        r = (j - 1) - p * (p - 1)
        reps.append(_lift(p, gamma(p) * nu(p, r + 1)))
    table = CosetRepTable(p=p, reps=reps)
    assert len(reps) == table.n
    assert reps[0] == reps[0].identity()
    # partition sanity: reps lie in pairwise distinct cosets
    for i, m in enumerate(reps):
        if table.coset_index(m) != i:
            raise AssertionError("coset representative formula yields a collision")
    return table


def _sl2_pow(m: SL2, k: int) -> SL2:
    out = m.identity()
    for _ in range(k):
        out = out * m
    return out


def check_alpha_beta_relation(p, s) -> bool:
    """The transport identities moving alpha across beta^s.

    For s+1 invertible:  alpha beta^s = beta^{s(s+1)^-1} nu_{s+1} alpha^{(s+1)^-1};
    for s = p-1:         alpha beta^{p-1} = gamma nu_{p-1} alpha^{p-1};
    and alpha gamma = beta alpha^{p-1}.
    """
    a, b, g = alpha(p), beta(p), gamma(p)
    lhs = a * _sl2_pow(b, s)
    if (s + 1) % p != 0:
        inv = pow(s + 1, p - 2, p)
        rhs = _sl2_pow(b, (s * inv) % p) * nu(p, (s + 1) % p) * _sl2_pow(a, inv)
    else:
        rhs = g * nu(p, p - 1) * _sl2_pow(a, p - 1)
    ok = lhs == rhs
    # the gamma identity rides along with every call
    ok = ok and (a * g == b * _sl2_pow(a, p - 1))
    return ok


def f_iteration(p):
    """Iterates f^{(0)}(1), f^{(1)}(1), ... of f(s) = s (s+1)^{-1} mod p.

    Stops at the first iterate equal to p-1 (no longer mapped by f).
    Expected: f^{(s)}(1) = (s+1)^{-1} and the stop index is s = p-2.
    """
    seq = [1]
    cur = 1
    while cur != p - 1:
        cur = (cur * pow(cur + 1, p - 2, p)) % p
        seq.append(cur)
    return seq


def sigma_of_alpha_cycle_check(p):
    """Cycle shape of sigma_alpha on the coset table.

    Expected: the positions of m_1..m_{p-1} (0-based 0..p-2) are fixed and
    the remaining p^2 - p points split into exactly p-1 disjoint p-cycles.
    """
    from .park import qd_embedding

    emb = qd_embedding(p, lazy=True)
    sig = emb.sigma(_lift(p, alpha(p)))
    fixed = set(sig.fixed())
    cyc = sig.cycles()
    ok = (set(range(p - 1)) <= fixed
          and fixed == set(range(p - 1))
          and len(cyc) == p - 1
          and all(len(c) == p for c in cyc))
    return {"ok": ok, "fixed": sorted(fixed),
            "cycles": cyc, "p": p}


def v_base_formula_check(p, exhaustive=True):
    """iota(u) for u in V has identity top and base (u^{m_1},...,u^{m_n})."""
    from .park import qd_embedding

    emb = qd_embedding(p, lazy=True)
    vs = ([v_translation(p, a, b) for a in range(p) for b in range(p)]
          if exhaustive else [v_translation(p, 1, 0), v_translation(p, 0, 1)])
    for u in vs:
        w = emb.iota(u)
        if not w.top.is_identity():
            return {"ok": False, "witness": u, "reason": "nontrivial top"}
        for j, mj in enumerate(emb.reps):
            if w.base[j] != mj.inverse() * u * mj:
                return {"ok": False, "witness": (u, j),
                        "reason": "base coordinate differs from u^{m_j}"}
    return {"ok": True, "count": len(vs), "p": p}


def lemma_4_3_matrix(p, r, rp, i) -> SL2:
    """The obstruction matrix beta nu_r alpha^{-i} nu_{rp^-1} beta^{-1}."""
    b = beta(p)
    a_inv_i = _sl2_pow(alpha(p).inverse(), i)
    return b * nu(p, r) * a_inv_i * nu(p, pow(rp, p - 2, p)) * b.inverse()


def lemma_4_3_matrix_display(p, r, rp, i) -> SL2:
    """The same matrix written out entrywise (independent formula)."""
    rp_inv = pow(rp, p - 2, p)
    r_inv = pow(r, p - 2, p)
    return SL2(p,
               r * rp_inv + i * r * rp,
               -i * r * rp,
               r * rp_inv + i * r * rp - r_inv * rp,
               -i * r * rp + r_inv * rp)
