"""Artinian algebras Q/Ann(G_1, ..., G_m) presented by dual generators.

For each degree i the catalecticant sends f in Q_i to the tuple of
contractions (f o G_1, ..., f o G_m). Its kernel is Ann_i and its rank is
the Hilbert function value h_i. Classes are stored by coordinates with
respect to the standard monomials (pivot columns of the reduced
catalecticant), which is a canonical normal form.
"""

from __future__ import annotations

from collections import Counter

from .algebra import AlgebraElement, GradedAlgebra, HilbertFunction, InternalConsistencyError
from .exact_linalg import Matrix, kernel_basis, span_basis
from .graded_poly import Grading, Poly, contract, divides, mono_div, mono_mul
from .scalars import QQ


class _Degree:
    __slots__ = ("monomials", "index", "matrix", "rref", "pivots", "columns", "kernel")


class InverseSystem(GradedAlgebra):
    def __init__(self, grading: Grading, duals, field=None):
        duals = list(duals) if isinstance(duals, (list, tuple)) else [duals]
        if not duals:
            raise ValueError("need at least one dual generator")
        if field is None:
            field = duals[0].field
        self.grading = grading
        self.field = field
        gens = []
        for G in duals:
            if G.grading != grading:
                raise ValueError("dual generator lives in a different ring")
            G = Poly(grading, G.terms, field, "R")
            if G.is_zero():
                raise ValueError("dual generator is zero")
            gens.append(G)
        degs = {G.degree() for G in gens}
        if len(degs) != 1:
            raise ValueError(f"dual generators have different degrees {sorted(degs)}")
        self.duals = tuple(gens)
        self.d = degs.pop()
        self.top = self.d
        top_vecs = [G.coords(self.d) for G in gens]
        if len(span_basis(top_vecs, len(grading.monomials(self.d)), field)[0]) != len(gens):
            raise ValueError("dual generators are linearly dependent")
        self._deg = {}
        self._table = {}

    # catalecticant data

    def _data(self, i) -> _Degree:
        if i in self._deg:
            return self._deg[i]
        g = self.grading
        D = _Degree()
        D.monomials = g.monomials(i)
        D.index = g.index(i)
        D.matrix = self.catalecticant(i)
        D.rref = D.matrix.rref()
        R, piv = D.rref
        D.pivots = piv
        D.columns = {}
        for c, m in enumerate(D.monomials):
            D.columns[m] = [row[c] for row in R]
        D.kernel = kernel_basis(D.matrix)
        self._deg[i] = D
        return D

    def catalecticant(self, i: int) -> Matrix:
        """Matrix of Q_i -> (R_{d-i})^m, columns indexed by Q_i monomials."""
        g = self.grading
        cols = g.monomials(i)
        rows_per = g.monomials(self.d - i) if 0 <= i <= self.d else ()
        ridx = g.index(self.d - i) if rows_per else {}
        nrows = len(rows_per) * len(self.duals)
        M = Matrix.zeros(nrows, len(cols), self.field)
        if not rows_per:
            return M
        for gi, G in enumerate(self.duals):
            off = gi * len(rows_per)
            for c, m in enumerate(cols):
                for E, coef in G.terms.items():
                    if divides(m, E):
                        M.rows[off + ridx[mono_div(E, m)]][c] = coef
        return M

    def dim(self, i):
        if i < 0 or i > self.d:
            return 0
        return len(self._data(i).pivots)

    def hilbert(self) -> HilbertFunction:
        return HilbertFunction(self.dim(i) for i in range(self.d + 1))

    def standard_monomials(self, i) -> list:
        if self.dim(i) == 0:
            return []
        D = self._data(i)
        return [D.monomials[c] for c in D.pivots]

    def ann_vectors(self, i) -> list:
        """Coordinate vectors (over Q_i monomials) spanning Ann_i."""
        if i < 0:
            return []
        n = len(self.grading.monomials(i))
        if i > self.d:
            f = self.field
            return [[f.one if k == j else f.zero for k in range(n)] for j in range(n)]
        return self._data(i).kernel

    def ann_component(self, i) -> list:
        return [Poly.from_coords(self.grading, i, v, self.field, "Q") for v in self.ann_vectors(i)]

    # reduction and lifting

    def reduce(self, f: Poly) -> AlgebraElement:
        """Class of a homogeneous operator in A."""
        if f.grading != self.grading:
            raise ValueError("operator lives in a different ring")
        if f.is_zero():
            raise ValueError("the zero polynomial has no degree; use zero(i)")
        i = f.degree()
        return self._reduce_terms(i, f.terms)

    def _reduce_terms(self, i, terms) -> AlgebraElement:
        n = self.dim(i)
        v = [self.field.zero] * n
        if n:
            cols = self._data(i).columns
            for m, c in terms.items():
                col = cols[m]
                for k in range(n):
                    if col[k] != 0:
                        v[k] = v[k] + c * col[k]
        return AlgebraElement(self, i, v)

    def lift(self, a: AlgebraElement) -> Poly:
        """Representative in Q supported on standard monomials."""
        mons = self.standard_monomials(a.degree)
        return Poly(self.grading, {m: c for m, c in zip(mons, a.coords)}, self.field, "Q")

    def normal_form(self, a: AlgebraElement) -> tuple:
        """Tuple of contractions of a representative with the dual generators."""
        f = self.lift(a)
        if f.is_zero():
            return tuple(Poly.zero(self.grading, self.field, "R") for _ in self.duals)
        return tuple(contract(f, G) for G in self.duals)

    def variable(self, i: int) -> AlgebraElement:
        return self.reduce(Poly.variable(self.grading, i, self.field, "Q"))

    def describe(self, a):
        return str(self.lift(a))

    # multiplication

    def _product(self, i, u, j, v):
        key = (i, j)
        if key not in self._table:
            left = self.standard_monomials(i)
            right = self.standard_monomials(j)
            cols = self._data(i + j).columns
            self._table[key] = [[cols[mono_mul(a, b)] for b in right] for a in left]
        tab = self._table[key]
        n = self.dim(i + j)
        out = [self.field.zero] * n
        for a, ua in enumerate(u):
            if ua == 0:
                continue
            row = tab[a]
            for b, vb in enumerate(v):
                if vb == 0:
                    continue
                c = ua * vb
                col = row[b]
                for k in range(n):
                    if col[k] != 0:
                        out[k] = out[k] + c * col[k]
        return out

    def _one_coords(self):
        return [self.field.one]

    def algebra_generators(self):
        out = []
        for i in range(self.grading.n):
            if self.grading.weights[i] <= self.d:
                a = self.variable(i)
                if not a.is_zero():
                    out.append(a)
        return out

    # orientation and pairing

    def orientation(self, a: AlgebraElement) -> tuple:
        """(a o G_1)(0), ..., (a o G_m)(0); nonzero only in degree d."""
        if a.degree != self.d:
            return tuple(self.field.zero for _ in self.duals)
        f = self.lift(a)
        return tuple(sum((c * G.coefficient(m) for m, c in f.terms.items()), self.field.zero) for G in self.duals)

    def integral(self, a: AlgebraElement):
        """Scalar orientation for a single dual generator."""
        if len(self.duals) != 1:
            raise ValueError("scalar integral needs a single dual generator")
        return self.orientation(a)[0]

    def level_pairing_nondegenerate(self) -> bool:
        for i in range(self.d + 1):
            rows = []
            for a in self.basis(i):
                row = []
                for b in self.basis(self.d - i):
                    row.extend(self.orientation(a * b))
                rows.append(row)
            if rows and Matrix(rows, self.field).rank() != len(rows):
                return False
        return True

    @property
    def is_level_type(self) -> int:
        return len(self.duals)

    # generators of the annihilator

    def ideal_sums(self, j) -> list:
        """Vectors spanning (Q_+ Ann)_j."""
        g = self.grading
        idx = g.index(j)
        vecs = []
        for v, w in enumerate(g.weights):
            if j - w < 1:
                continue
            for f in self.ann_component(j - w):
                vec = [self.field.zero] * len(idx)
                for m, c in f.terms.items():
                    m2 = list(m)
                    m2[v] += 1
                    vec[idx[tuple(m2)]] = c
                vecs.append(vec)
        return vecs

    def generator_range(self) -> int:
        """Minimal generators occur in degrees <= d + max weight."""
        return self.d + self.grading.max_weight

    def min_generators(self) -> dict:
        """Degree -> list of minimal generators of Ann, in reduced form."""
        out = {}
        top = self.generator_range()
        for j in range(1, top + 2):
            n = len(self.grading.monomials(j))
            if n == 0:
                continue
            lower, lp = span_basis(self.ideal_sums(j), n, self.field)
            full = self.ann_vectors(j)
            if j == top + 1:
                if len(lower) != n:
                    raise InternalConsistencyError(f"(Q_+ Ann)_{j} is not all of Q_{j}")
                continue
            if len(full) == len(lower):
                continue
            reduced = []
            for v in full:
                w = list(v)
                for row, pc in zip(lower, lp):
                    if w[pc] != 0:
                        f = w[pc]
                        w = [a - f * b for a, b in zip(w, row)]
                reduced.append(w)
            gens, _ = span_basis(reduced, n, self.field)
            if len(gens) != len(full) - len(lower):
                raise InternalConsistencyError(f"generator count mismatch in degree {j}")
            out[j] = [Poly.from_coords(self.grading, j, v, self.field, "Q") for v in gens]
        return out

    def min_generator_degrees(self) -> Counter:
        return Counter({j: len(v) for j, v in self.min_generators().items()})

    def __repr__(self):
        return f"InverseSystem({', '.join(str(G) for G in self.duals)})"


def ann_has_monomial_basis(A: InverseSystem) -> bool:
    """True when every graded piece of Ann is spanned by monomials."""
    for i in range(A.d + 1):
        vecs = A.ann_vectors(i)
        if not vecs:
            continue
        R, _ = span_basis(vecs, len(A.grading.monomials(i)), A.field)
        if any(sum(1 for x in row if x != 0) != 1 for row in R):
            return False
    return True


def from_text(vars_spec, *duals, field=QQ) -> InverseSystem:
    """Convenience constructor: ``from_text("x y z", "X^2*Y")`` or ``{"x": 1, "z": 2}``."""
    from .graded_poly import parse_poly

    if isinstance(vars_spec, str):
        names = vars_spec.replace(",", " ").split()
        grading = Grading((1,) * len(names), tuple(names))
    elif isinstance(vars_spec, dict):
        grading = Grading(tuple(vars_spec.values()), tuple(vars_spec))
    else:
        grading = vars_spec
    return InverseSystem(grading, [parse_poly(t, grading, field, "R") for t in duals], field)
