"""Finite-dimensional graded algebras with explicit bases in each degree.

Every concrete algebra (a quotient Q/Ann, a direct sum, a subquotient of one)
exposes the same small interface: ``dim(i)`` and a bilinear ``_product`` on
coordinate vectors. Everything else is derived here.
"""

from __future__ import annotations

from .exact_linalg import Coordinates, Matrix, kernel_basis, span_basis


class InternalConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagreed."""


class HilbertFunction(tuple):
    """Degreewise dimensions. Trailing zeros are ignored for equality."""

    def __new__(cls, values=()):
        return super().__new__(cls, tuple(int(v) for v in values))

    def trimmed(self) -> "HilbertFunction":
        v = list(self)
        while v and v[-1] == 0:
            v.pop()
        return HilbertFunction(v)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return HilbertFunction(tuple.__getitem__(self, i))
        if i < 0:
            raise IndexError("negative degree")
        return tuple.__getitem__(self, i) if i < len(self) else 0

    def shift(self, n: int) -> "HilbertFunction":
        """Values moved up by n degrees: shift(n)[i] == self[i - n]."""
        return HilbertFunction((0,) * n + tuple(self))

    def _zip(self, other):
        other = HilbertFunction(other)
        n = max(len(self), len(other))
        return [(self[i], other[i]) for i in range(n)]

    def __add__(self, other):
        return HilbertFunction(a + b for a, b in self._zip(other))

    def __sub__(self, other):
        return HilbertFunction(a - b for a, b in self._zip(other))

    def __eq__(self, other):
        try:
            return tuple(self.trimmed()) == tuple(HilbertFunction(other).trimmed())
        except (TypeError, ValueError):
            return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash(tuple(self.trimmed()))

    def is_symmetric(self) -> bool:
        v = tuple(self.trimmed())
        return v == v[::-1]

    def total(self) -> int:
        return sum(self)

    def __str__(self):
        return " ".join(str(v) for v in self.trimmed())

    def __repr__(self):
        return f"HilbertFunction({tuple(self)})"


class AlgebraElement:
    __slots__ = ("algebra", "degree", "coords")

    def __init__(self, algebra, degree, coords):
        self.algebra = algebra
        self.degree = degree
        f = algebra.field
        self.coords = tuple(f(c) for c in coords)
        if len(self.coords) != algebra.dim(degree):
            raise ValueError(f"expected {algebra.dim(degree)} coordinates in degree {degree}")

    def _same(self, other):
        if not isinstance(other, AlgebraElement) or other.algebra is not self.algebra:
            raise ValueError("elements of different algebras")

    def __add__(self, other):
        self._same(other)
        if other.degree != self.degree:
            raise ValueError("only homogeneous elements of equal degree can be added")
        return AlgebraElement(self.algebra, self.degree, [a + b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return AlgebraElement(self.algebra, self.degree, [-a for a in self.coords])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra.multiply(self, other)
        c = self.algebra.field(other)
        return AlgebraElement(self.algebra, self.degree, [c * a for a in self.coords])

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e: int):
        out = self.algebra.one()
        for _ in range(e):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return other.algebra is self.algebra and (
                (self.degree == other.degree and self.coords == other.coords)
                or (self.is_zero() and other.is_zero())
            )
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((id(self.algebra), self.degree, self.coords))

    def __repr__(self):
        return f"<deg {self.degree}: {self.algebra.describe(self)}>"


class GradedAlgebra:
    """Base class. Subclasses set ``field`` and ``top`` and implement ``dim``, ``_product``."""

    field = None
    top = 0

    def dim(self, i: int) -> int:
        raise NotImplementedError

    def _product(self, i, u, j, v) -> list:
        raise NotImplementedError

    def _one_coords(self) -> list:
        raise NotImplementedError

    def describe(self, a: AlgebraElement) -> str:
        return "(" + ", ".join(str(c) for c in a.coords) + ")"

    def hilbert(self) -> HilbertFunction:
        return HilbertFunction(self.dim(i) for i in range(self.top + 1))

    def total_dim(self) -> int:
        return sum(self.dim(i) for i in range(self.top + 1))

    def element(self, degree, coords) -> AlgebraElement:
        return AlgebraElement(self, degree, coords)

    def zero(self, degree) -> AlgebraElement:
        return AlgebraElement(self, degree, [self.field.zero] * self.dim(degree))

    def one(self) -> AlgebraElement:
        return AlgebraElement(self, 0, self._one_coords())

    def basis(self, degree) -> list:
        n = self.dim(degree)
        f = self.field
        return [AlgebraElement(self, degree, [f.one if k == j else f.zero for k in range(n)]) for j in range(n)]

    def multiply(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        a._same(b)
        deg = a.degree + b.degree
        if self.dim(deg) == 0 or a.is_zero() or b.is_zero():
            return self.zero(deg)
        return AlgebraElement(self, deg, self._product(a.degree, a.coords, b.degree, b.coords))

    def mult_matrix(self, a: AlgebraElement, i: int) -> Matrix:
        """Matrix of multiplication by ``a`` from degree i to degree i + deg a."""
        target = i + a.degree
        cols = [self.multiply(a, e).coords for e in self.basis(i)]
        return Matrix.from_columns(cols, self.dim(target), self.field)

    def algebra_generators(self) -> list:
        """A minimal set of homogeneous elements generating the maximal ideal."""
        gens = []
        for i in range(1, self.top + 1):
            n = self.dim(i)
            if n == 0:
                continue
            vecs = [self.multiply(g, b).coords for g in gens if g.degree < i for b in self.basis(i - g.degree)]
            cur = span_basis(vecs, n, self.field)[0] if vecs else []
            for e in self.basis(i):
                trial = span_basis(list(cur) + [e.coords], n, self.field)[0]
                if len(trial) > len(cur):
                    gens.append(e)
                    cur = trial
        return gens

    def socle(self) -> dict:
        """Degree -> basis of {a : g*a = 0 for every generator g}."""
        gens = self.algebra_generators()
        out = {}
        for i in range(self.top + 1):
            n = self.dim(i)
            if n == 0:
                continue
            rows = []
            for g in gens:
                if self.dim(i + g.degree):
                    rows.extend(self.mult_matrix(g, i).rows)
            ker = kernel_basis(Matrix(rows, self.field, n)) if rows else [e.coords for e in self.basis(i)]
            if ker:
                out[i] = [AlgebraElement(self, i, v) for v in ker]
        return out

    def socle_hilbert(self) -> HilbertFunction:
        s = self.socle()
        return HilbertFunction(len(s.get(i, [])) for i in range(self.top + 1))

    def is_gorenstein(self) -> bool:
        s = self.socle()
        return list(s) == [self.top] and len(s[self.top]) == 1

    def is_standard_graded(self) -> bool:
        """True when the algebra is generated by its degree-one part."""
        ones = self.basis(1)
        prev = [self.one()]
        for i in range(1, self.top + 1):
            vecs = [self.multiply(l, p).coords for l in ones for p in prev]
            span, _ = span_basis(vecs, self.dim(i), self.field) if vecs else ([], ())
            if len(span) != self.dim(i):
                return False
            prev = [AlgebraElement(self, i, v) for v in span]
        return True


class DirectSum(GradedAlgebra):
    """A ⊕ B with componentwise multiplication."""

    def __init__(self, A: GradedAlgebra, B: GradedAlgebra):
        if A.field != B.field:
            raise ValueError("summands over different fields")
        self.A, self.B = A, B
        self.field = A.field
        self.top = max(A.top, B.top)

    def dim(self, i):
        return self.A.dim(i) + self.B.dim(i)

    def split(self, i, coords):
        n = self.A.dim(i)
        return AlgebraElement(self.A, i, coords[:n]), AlgebraElement(self.B, i, coords[n:])

    def pair(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        if a.degree != b.degree:
            raise ValueError("components must have equal degree")
        return AlgebraElement(self, a.degree, a.coords + b.coords)

    def _product(self, i, u, j, v):
        a1, b1 = self.split(i, list(u))
        a2, b2 = self.split(j, list(v))
        return list((a1 * a2).coords + (b1 * b2).coords)

    def _one_coords(self):
        return list(self.A.one().coords + self.B.one().coords)

    def describe(self, a):
        x, y = self.split(a.degree, list(a.coords))
        return f"({self.A.describe(x)}, {self.B.describe(y)})"


class Subquotient(GradedAlgebra):
    """S/N inside an ambient algebra, for a graded subalgebra S and an ideal N of S.

    ``sub[i]`` spans S_i and ``ideal[i]`` spans N_i, both as ambient coordinate vectors.
    """

    def __init__(self, ambient: GradedAlgebra, sub: dict, ideal: dict = None):
        self.ambient = ambient
        self.field = ambient.field
        f = self.field
        self._reps = {}
        self._coords = {}
        self._nbasis = {}
        top = 0
        for i in range(ambient.top + 1):
            n = ambient.dim(i)
            S, _ = span_basis(sub.get(i, []), n, f)
            N, _ = span_basis((ideal or {}).get(i, []), n, f)
            reps = []
            cur = list(N)
            for s in S:
                trial, _ = span_basis(cur + [s], n, f)
                if len(trial) > len(cur):
                    reps.append(s)
                    cur = trial
            if len(cur) != len(S):
                raise ValueError(f"ideal is not contained in the subalgebra in degree {i}")
            self._reps[i] = reps
            self._nbasis[i] = list(N)
            self._coords[i] = Coordinates(reps + list(N), n, f)
            if reps:
                top = i
        self.top = top

    def dim(self, i):
        return len(self._reps.get(i, []))

    def lift(self, a: AlgebraElement) -> AlgebraElement:
        """Representative in the ambient algebra."""
        n = self.ambient.dim(a.degree)
        w = [self.field.zero] * n
        for c, r in zip(a.coords, self._reps.get(a.degree, [])):
            if c != 0:
                w = [x + c * y for x, y in zip(w, r)]
        return AlgebraElement(self.ambient, a.degree, w)

    def project(self, x: AlgebraElement) -> AlgebraElement:
        """Class of an ambient element lying in the subalgebra."""
        i = x.degree
        if i not in self._coords:
            if x.is_zero():
                return self.zero(i)
            raise ValueError("element outside the subalgebra")
        c = self._coords[i](list(x.coords))
        return AlgebraElement(self, i, c[: self.dim(i)])

    def _product(self, i, u, j, v):
        a = self.lift(AlgebraElement(self, i, u))
        b = self.lift(AlgebraElement(self, j, v))
        return list(self.project(a * b).coords)

    def _one_coords(self):
        return list(self.project(self.ambient.one()).coords)

    def describe(self, a):
        return self.ambient.describe(self.lift(a))
