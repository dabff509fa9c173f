"""Exact linear algebra over prime fields GF(p).

Matrices over GF(2) store each row as a packed Python-int bitmask so that
row elimination is word-level XOR; odd characteristic uses numpy residue
arrays.  Everything is immutable after construction and all results are
deterministic (first-nonzero pivoting, no randomization).
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "FpMatrix",
    "FpSubspace",
    "poly_mul",
    "poly_divmod",
    "poly_gcd",
    "poly_lcm",
]


def _inv_mod(x: int, p: int) -> int:
    return pow(x, p - 2, p)


class FpMatrix:
    """Immutable matrix over GF(p), p prime."""

    __slots__ = ("p", "nrows", "ncols", "_bits", "_arr")

    def __init__(self, p, nrows, ncols, _bits=None, _arr=None):
        self.p = p
        self.nrows = nrows
        self.ncols = ncols
        self._bits = _bits  # list[int] bitmasks, p == 2 only
        self._arr = _arr    # numpy int64 array, p > 2 only

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows, p, ncols=None):
        rows = [tuple(int(x) % p for x in r) for r in rows]
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        if p == 2:
            bits = [sum(1 << j for j, x in enumerate(r) if x) for r in rows]
            return cls(p, nrows, ncols, _bits=bits)
        arr = np.array(rows, dtype=np.int64).reshape(nrows, ncols)
        return cls(p, nrows, ncols, _arr=arr)

    @classmethod
    def zeros(cls, p, nrows, ncols):
        if p == 2:
            return cls(p, nrows, ncols, _bits=[0] * nrows)
        return cls(p, nrows, ncols, _arr=np.zeros((nrows, ncols), dtype=np.int64))

    @classmethod
    def identity(cls, p, n):
        if p == 2:
            return cls(p, n, n, _bits=[1 << i for i in range(n)])
        return cls(p, n, n, _arr=np.eye(n, dtype=np.int64))

    # -- access ------------------------------------------------------------

    def row(self, i):
        if self.p == 2:
            b = self._bits[i]
            return tuple((b >> j) & 1 for j in range(self.ncols))
        return tuple(int(x) for x in self._arr[i])

    def rows(self):
        return [self.row(i) for i in range(self.nrows)]

    def entry(self, i, j):
        if self.p == 2:
            return (self._bits[i] >> j) & 1
        return int(self._arr[i, j])

    def is_zero(self):
        if self.p == 2:
            return all(b == 0 for b in self._bits)
        return not self._arr.any()

    def __eq__(self, other):
        if not isinstance(other, FpMatrix):
            return NotImplemented
        if (self.p, self.nrows, self.ncols) != (other.p, other.nrows, other.ncols):
            return False
        if self.p == 2:
            return self._bits == other._bits
        return bool((self._arr == other._arr).all())

    def __repr__(self):
        return f"FpMatrix(p={self.p}, {self.nrows}x{self.ncols})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._check_same_shape(other)
        if self.p == 2:
            return FpMatrix(2, self.nrows, self.ncols,
                            _bits=[a ^ b for a, b in zip(self._bits, other._bits)])
        return FpMatrix(self.p, self.nrows, self.ncols,
                        _arr=(self._arr + other._arr) % self.p)

    def __sub__(self, other):
        self._check_same_shape(other)
        if self.p == 2:
            return self + other
        return FpMatrix(self.p, self.nrows, self.ncols,
                        _arr=(self._arr - other._arr) % self.p)

    def scale(self, c):
        c %= self.p
        if self.p == 2:
            if c:
                return self
            return FpMatrix.zeros(2, self.nrows, self.ncols)
        return FpMatrix(self.p, self.nrows, self.ncols, _arr=(self._arr * c) % self.p)

    def __matmul__(self, other):
        if self.ncols != other.nrows or self.p != other.p:
            raise ValueError("dimension mismatch in matrix product")
        if self.p == 2:
            out = []
            brows = other._bits
            for a in self._bits:
                acc = 0
                x = a
                while x:
                    j = (x & -x).bit_length() - 1
                    acc ^= brows[j]
                    x &= x - 1
                out.append(acc)
            return FpMatrix(2, self.nrows, other.ncols, _bits=out)
        return FpMatrix(self.p, self.nrows, other.ncols,
                        _arr=(self._arr @ other._arr) % self.p)

    def mat_vec(self, v):
        """Apply to a column vector, returning a tuple."""
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch in mat_vec")
        if self.p == 2:
            vb = sum(1 << j for j, x in enumerate(v) if x % 2)
            return tuple((self._bits[i] & vb).bit_count() & 1 for i in range(self.nrows))
        out = (self._arr @ np.array([x % self.p for x in v], dtype=np.int64)) % self.p
        return tuple(int(x) for x in out)

    def transpose(self):
        return FpMatrix.from_rows(
            [[self.entry(i, j) for i in range(self.nrows)] for j in range(self.ncols)],
            self.p, ncols=self.nrows)

    def stack(self, other):
        """Vertical concatenation."""
        if self.ncols != other.ncols or self.p != other.p:
            raise ValueError("dimension mismatch in stack")
        if self.p == 2:
            return FpMatrix(2, self.nrows + other.nrows, self.ncols,
                            _bits=self._bits + other._bits)
        return FpMatrix(self.p, self.nrows + other.nrows, self.ncols,
                        _arr=np.vstack([self._arr, other._arr]))

    def _check_same_shape(self, other):
        if (self.p, self.nrows, self.ncols) != (other.p, other.nrows, other.ncols):
            raise ValueError("shape/field mismatch")

    # -- elimination -------------------------------------------------------

    def rref(self):
        """Reduced row-echelon form.

        Returns (R, rank, pivot_columns).  Pivoting is deterministic: the
        first row with a nonzero entry in the leftmost unfinished column.
        """
        if self.p == 2:
            rows = list(self._bits)
            m, n = self.nrows, self.ncols
            pivots = []
            r = 0
            for col in range(n):
                mask = 1 << col
                sel = next((i for i in range(r, m) if rows[i] & mask), None)
                if sel is None:
                    continue
                rows[r], rows[sel] = rows[sel], rows[r]
                for i in range(m):
                    if i != r and rows[i] & mask:
                        rows[i] ^= rows[r]
                pivots.append(col)
                r += 1
                if r == m:
                    break
            return FpMatrix(2, m, n, _bits=rows), r, pivots
        a = self._arr.copy()
        p = self.p
        m, n = self.nrows, self.ncols
        pivots = []
        r = 0
        for col in range(n):
            sel = next((i for i in range(r, m) if a[i, col]), None)
            if sel is None:
                continue
            a[[r, sel]] = a[[sel, r]]
            a[r] = (a[r] * _inv_mod(int(a[r, col]), p)) % p
            for i in range(m):
                if i != r and a[i, col]:
                    a[i] = (a[i] - a[i, col] * a[r]) % p
            pivots.append(col)
            r += 1
            if r == m:
                break
        return FpMatrix(p, m, n, _arr=a), r, pivots

    def rank(self):
        return self.rref()[1]

    def solve(self, b):
        """Solve self @ x = b; returns a tuple or None when inconsistent."""
        if len(b) != self.nrows:
            raise ValueError("right-hand side has wrong length")
        aug = self.stack_column(b)
        red, _, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [0] * self.ncols
        for i, col in enumerate(pivots):
            x[col] = red.entry(i, self.ncols)
        x = tuple(x)
        assert self.mat_vec(x) == tuple(v % self.p for v in b)
        return x

    def stack_column(self, b):
        """Append one extra column (used for augmented systems)."""
        rows = [self.row(i) + (int(b[i]) % self.p,) for i in range(self.nrows)]
        return FpMatrix.from_rows(rows, self.p, ncols=self.ncols + 1)

    def nullspace(self):
        """Right nullspace as an FpSubspace of GF(p)^ncols."""
        red, rank, pivots = self.rref()
        free = [j for j in range(self.ncols) if j not in pivots]
        basis = []
        for f in free:
            v = [0] * self.ncols
            v[f] = 1
            for i, col in enumerate(pivots):
                v[col] = (-red.entry(i, f)) % self.p
            basis.append(v)
        for v in basis:
            assert all(c == 0 for c in self.mat_vec(v))
        return FpSubspace.from_vectors(basis, self.p, self.ncols)

    # -- spectral-ish ------------------------------------------------------

    def min_poly(self):
        """Minimal polynomial, ascending coefficients, monic.

        Computed as the lcm of per-seed Krylov annihilators, stopping as
        soon as the running lcm annihilates the matrix.
        """
        if self.nrows != self.ncols:
            raise ValueError("min_poly requires a square matrix")
        n = self.nrows
        p = self.p
        if n == 0:
            return (1,)
        q = (1,)
        for seed in range(n):
            ann = self._krylov_annihilator(seed)
            q = poly_lcm(q, ann, p)
            if _poly_eval_matrix(q, self).is_zero():
                break
        assert _poly_eval_matrix(q, self).is_zero()
        return q

    def _krylov_annihilator(self, seed):
        """Monic annihilator of the seed-th standard basis vector."""
        p = self.p
        n = self.nrows
        echelon = []  # (pivot, vec list, poly tuple)
        cur = [0] * n
        cur[seed] = 1
        k = 0
        while True:
            vec = list(cur)
            poly = [0] * k + [1]
            for piv, evec, epoly in echelon:
                c = vec[piv]
                if c:
                    vec = [(a - c * b) % p for a, b in zip(vec, evec)]
                    poly = _poly_sub_scaled(poly, epoly, c, p)
            if all(x == 0 for x in vec):
                return _poly_trim(tuple(poly))
            piv = next(i for i, x in enumerate(vec) if x)
            inv = _inv_mod(vec[piv], p)
            vec = [(x * inv) % p for x in vec]
            poly = [(c * inv) % p for c in poly]
            echelon.append((piv, vec, tuple(poly)))
            cur = list(self.mat_vec(cur))
            k += 1

    def is_nilpotent(self):
        q = self.min_poly()
        return all(c == 0 for c in q[:-1])

    def is_invertible(self):
        if self.nrows != self.ncols:
            raise ValueError("is_invertible requires a square matrix")
        return self.rank() == self.nrows


class FpSubspace:
    """Subspace of GF(p)^n carried by a reduced row-echelon basis."""

    __slots__ = ("p", "ambient", "basis")

    def __init__(self, p, ambient, basis):
        self.p = p
        self.ambient = ambient
        self.basis = basis  # FpMatrix in rref, no zero rows

    @classmethod
    def from_vectors(cls, vectors, p, ambient):
        vectors = list(vectors)
        if not vectors:
            return cls(p, ambient, FpMatrix.zeros(p, 0, ambient))
        m = FpMatrix.from_rows(vectors, p, ncols=ambient)
        red, rank, _ = m.rref()
        return cls(p, ambient, FpMatrix.from_rows(red.rows()[:rank], p, ncols=ambient))

    @property
    def dim(self):
        return self.basis.nrows

    def contains(self, v):
        v = [int(x) % self.p for x in v]
        for i in range(self.basis.nrows):
            row = self.basis.row(i)
            piv = next(j for j, x in enumerate(row) if x)
            c = v[piv]
            if c:
                v = [(a - c * b) % self.p for a, b in zip(v, row)]
        return all(x == 0 for x in v)

    def vectors(self):
        return self.basis.rows()

    def __eq__(self, other):
        return (isinstance(other, FpSubspace)
                and self.p == other.p and self.ambient == other.ambient
                and self.basis == other.basis)

    def __repr__(self):
        return f"FpSubspace(p={self.p}, dim={self.dim}, ambient={self.ambient})"


# -- polynomial helpers (ascending coefficient tuples) ---------------------

def _poly_trim(q):
    q = tuple(q)
    while len(q) > 1 and q[-1] == 0:
        q = q[:-1]
    return q


def _poly_sub_scaled(a, b, c, p):
    """a - c*b as lists, padded."""
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    for i, x in enumerate(b):
        a[i] = (a[i] - c * x) % p
    return a


def poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_trim(out)


def poly_divmod(a, b, p):
    a = list(a)
    b = _poly_trim(b)
    if b == (0,):
        raise ZeroDivisionError
    db = len(b) - 1
    inv = _inv_mod(b[-1], p)
    quo = [0] * max(1, len(a) - db)
    while len(_poly_trim(a)) - 1 >= db and _poly_trim(a) != (0,):
        a = list(_poly_trim(a))
        shift = len(a) - 1 - db
        c = (a[-1] * inv) % p
        quo[shift] = c
        for i, x in enumerate(b):
            a[shift + i] = (a[shift + i] - c * x) % p
    return _poly_trim(quo), _poly_trim(a)


def poly_gcd(a, b, p):
    a, b = _poly_trim(a), _poly_trim(b)
    while b != (0,):
        _, r = poly_divmod(a, b, p)
        a, b = b, r
    if a == (0,):
        return a
    inv = _inv_mod(a[-1], p)
    return _poly_trim(tuple((c * inv) % p for c in a))


def poly_lcm(a, b, p):
    a, b = _poly_trim(a), _poly_trim(b)
    if a == (0,) or b == (0,):
        return (0,)
    g = poly_gcd(a, b, p)
    q, r = poly_divmod(poly_mul(a, b, p), g, p)
    assert r == (0,)
    inv = _inv_mod(q[-1], p)
    return _poly_trim(tuple((c * inv) % p for c in q))


def _poly_eval_matrix(q, a):
    n = a.nrows
    acc = FpMatrix.zeros(a.p, n, n)
    for c in reversed(q):
        acc = acc @ a
        if c:
            acc = acc + FpMatrix.identity(a.p, n).scale(c)
    return acc
