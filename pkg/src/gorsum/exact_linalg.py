"""Exact linear algebra over QQ or F_p: row reduction, kernels, solves, subspaces."""

from __future__ import annotations

from .scalars import QQ


class Matrix:
    __slots__ = ("rows", "nrows", "ncols", "field", "_rref")

    def __init__(self, rows, field=QQ, ncols=None):
        self.field = field
        self.rows = [[field(x) for x in r] for r in rows]
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")
        self._rref = None

    @classmethod
    def _raw(cls, rows, field, ncols):
        m = cls.__new__(cls)
        m.rows, m.field, m.nrows, m.ncols, m._rref = rows, field, len(rows), ncols, None
        return m

    @classmethod
    def zeros(cls, nrows, ncols, field=QQ):
        z = field.zero
        return cls._raw([[z] * ncols for _ in range(nrows)], field, ncols)

    @classmethod
    def identity(cls, n, field=QQ):
        m = cls.zeros(n, n, field)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    @classmethod
    def from_columns(cls, cols, nrows, field=QQ):
        return cls([[c[i] for c in cols] for i in range(nrows)], field, len(cols))

    def column(self, j):
        return [r[j] for r in self.rows]

    def transpose(self):
        return Matrix._raw([[r[j] for r in self.rows] for j in range(self.ncols)], self.field, self.nrows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            z = self.field.zero
            cols = other.ncols
            out = []
            for r in self.rows:
                row = [z] * cols
                for k, a in enumerate(r):
                    if a != 0:
                        brow = other.rows[k]
                        for j in range(cols):
                            b = brow[j]
                            if b != 0:
                                row[j] = row[j] + a * b
                out.append(row)
            return Matrix._raw(out, self.field, cols)
        return self.apply(other)

    def apply(self, v):
        z = self.field.zero
        out = []
        for r in self.rows:
            s = z
            for a, b in zip(r, v):
                if a != 0 and b != 0:
                    s = s + a * b
            out.append(s)
        return out

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.ncols == other.ncols and self.rows == other.rows

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})"

    def rref(self):
        """Reduced row echelon form as (rows, pivot columns)."""
        if self._rref is None:
            self._rref = _rref(self.rows, self.ncols)
        return self._rref

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self):
        return kernel_basis(self)


def _rref(rows, ncols):
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        p = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                p = i
                break
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        prow = m[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow = [x * inv if x != 0 else x for x in prow]
            m[r] = prow
        nz = [j for j in range(c, ncols) if prow[j] != 0]
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f != 0:
                    row = m[i]
                    for j in nz:
                        row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return m[:r], tuple(pivots)


def rref(M: Matrix):
    return M.rref()


def rank(M: Matrix) -> int:
    return M.rank()


def kernel_basis(M: Matrix) -> list:
    """Basis of {v : M v = 0}, one vector per free column."""
    R, piv = M.rref()
    field = M.field
    pivset = set(piv)
    out = []
    for f in range(M.ncols):
        if f in pivset:
            continue
        v = [field.zero] * M.ncols
        v[f] = field.one
        for row, pc in zip(R, piv):
            if row[f] != 0:
                v[pc] = -row[f]
        out.append(v)
    return out


def solve(M: Matrix, b):
    """One solution of M x = b (free variables set to zero), or None."""
    if len(b) != M.nrows:
        raise ValueError("right-hand side has wrong length")
    aug = Matrix._raw([list(r) + [M.field(x)] for r, x in zip(M.rows, b)], M.field, M.ncols + 1)
    R, piv = aug.rref()
    if piv and piv[-1] == M.ncols:
        return None
    x = [M.field.zero] * M.ncols
    for row, pc in zip(R, piv):
        x[pc] = row[-1]
    return x


def span_basis(vectors, length, field=QQ):
    """Reduced echelon basis of the span of ``vectors``."""
    if not vectors:
        return [], ()
    return Matrix(vectors, field, length).rref()


def span_dim(vectors, length, field=QQ) -> int:
    return len(span_basis(vectors, length, field)[1])


def subspace_dims(U, V, length, field=QQ):
    """(dim U, dim V, dim U+V, dim U∩V) for spans of vector lists."""
    du = span_dim(U, length, field)
    dv = span_dim(V, length, field)
    ds = span_dim(list(U) + list(V), length, field)
    return du, dv, ds, du + dv - ds


def same_span(U, V, length, field=QQ) -> bool:
    du, dv, ds, _ = subspace_dims(U, V, length, field)
    return du == dv == ds


def in_span(basis, v, length, field=QQ) -> bool:
    return span_dim(list(basis) + [v], length, field) == span_dim(basis, length, field)


def intersection(U, V, length, field=QQ) -> list:
    """Basis of span(U) ∩ span(V)."""
    if not U or not V:
        return []
    cols = list(U) + [[-x for x in v] for v in V]
    M = Matrix.from_columns(cols, length, field)
    out = []
    for k in kernel_basis(M):
        w = [field.zero] * length
        for c, u in zip(k[: len(U)], U):
            if c != 0:
                w = [a + c * b for a, b in zip(w, u)]
        out.append(w)
    return span_basis(out, length, field)[0]


class Coordinates:
    """Coordinates of vectors with respect to a fixed independent list of vectors."""

    def __init__(self, basis, length, field=QQ):
        self.basis = [list(b) for b in basis]
        self.length = length
        self.field = field
        s = len(self.basis)
        if s == 0:
            self.rows, self.inv = (), None
            return
        BT = Matrix(self.basis, field, length)
        R, piv = BT.rref()
        if len(piv) != s:
            raise ValueError("basis vectors are dependent")
        self.rows = piv
        sub = Matrix([[b[r] for b in self.basis] for r in piv], field, s)
        aug = Matrix([row + e for row, e in zip(sub.rows, Matrix.identity(s, field).rows)], field, 2 * s)
        RR, _ = aug.rref()
        self.inv = Matrix([row[s:] for row in RR], field, s)

    def __call__(self, v, check=True):
        if not self.basis:
            if check and any(x != 0 for x in v):
                raise ValueError("vector not in the span")
            return []
        c = self.inv.apply([v[r] for r in self.rows])
        if check:
            w = [self.field.zero] * self.length
            for a, b in zip(c, self.basis):
                if a != 0:
                    w = [x + a * y for x, y in zip(w, b)]
            if w != list(v):
                raise ValueError("vector not in the span")
        return c
