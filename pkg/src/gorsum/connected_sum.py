"""Connected sums and fibered products of graded Artinian Gorenstein algebras.

Two independent routes are provided. The dual route works with dual
generators: the fibered product is Q/Ann(F, G) and the connected sum is
Q/Ann(F - G), certified by a Thom class tau with tau o F = tau o G. The
structural route builds the pullback of two oriented surjections inside
A ⊕ B and divides by the principal ideal of the pair of Thom classes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .algebra import (
    AlgebraElement,
    DirectSum,
    GradedAlgebra,
    HilbertFunction,
    InternalConsistencyError,
    Subquotient,
)
from .exact_linalg import Matrix, kernel_basis, same_span, solve, span_basis
from .graded_poly import Grading, Poly, contract, divides, mono_div, support, substitute
from .inverse_system import InverseSystem


class NotAConnectedSum(ValueError):
    pass


class IncompatibleThomClasses(ValueError):
    pass


class IllDefinedMap(ValueError):
    pass


def hffp(hA, hB, hT) -> HilbertFunction:
    """Hilbert function of a fibered product: H(A) + H(B) - H(T)."""
    return HilbertFunction(hA) + HilbertFunction(hB) - HilbertFunction(hT)


def hfcs(hA, hB, hT, d: int, k: int) -> HilbertFunction:
    """Hilbert function of a connected sum: H(A) + H(B) - H(T) - H(T) shifted by d - k."""
    hT = HilbertFunction(hT)
    return hffp(hA, hB, hT) - hT.shift(d - k)


def trivial_algebra(field) -> InverseSystem:
    """The field itself, as Q/Ann(1) in zero variables."""
    g = Grading(())
    return InverseSystem(g, [Poly.constant(g, 1, field, "R")], field)


# maps between algebras


class AlgebraMap:
    """Graded homomorphism between presented algebras, given by images of variables."""

    def __init__(self, source: InverseSystem, target: InverseSystem, images=None, name: str = "pi"):
        self.source, self.target, self.name = source, target, name
        sg, tg = source.grading, target.grading
        if source.field != target.field:
            raise ValueError("source and target over different fields")
        if images is None:
            if sg != tg:
                raise ValueError("identity images need a common ring")
            images = [Poly.variable(tg, i, target.field, "Q") for i in range(sg.n)]
        images = [Poly(tg, p.terms, target.field, "Q") for p in images]
        if len(images) != sg.n:
            raise ValueError(f"{name}: need {sg.n} variable images, got {len(images)}")
        for i, p in enumerate(images):
            if not p.is_zero() and p.degree() != sg.weights[i]:
                raise IllDefinedMap(f"{name}: image of {sg.names[i]} has degree {p.degree()}, expected {sg.weights[i]}")
        self.images = images
        self._mats = {}
        self._check_well_defined()

    def _poly_image(self, f: Poly) -> Poly:
        return substitute(f, self.images, self.target.grading)

    def _check_well_defined(self):
        for j, gens in self.source.min_generators().items():
            if j > self.target.d:
                continue
            for g in gens:
                img = self._poly_image(g)
                if not img.is_zero() and not self.target.reduce(img).is_zero():
                    raise IllDefinedMap(f"{self.name}: relation {g} maps to {img}, which is nonzero in the target")

    def matrix(self, i: int) -> Matrix:
        if i not in self._mats:
            cols = []
            for m in self.source.standard_monomials(i):
                img = self._poly_image(Poly.monomial(self.source.grading, m, 1, self.source.field, "Q"))
                cols.append(list(self.target.reduce(img).coords) if not img.is_zero() else [self.target.field.zero] * self.target.dim(i))
            self._mats[i] = Matrix.from_columns(cols, self.target.dim(i), self.source.field)
        return self._mats[i]

    def __call__(self, a: AlgebraElement) -> AlgebraElement:
        if a.algebra is not self.source:
            raise ValueError("element is not in the source algebra")
        return AlgebraElement(self.target, a.degree, self.matrix(a.degree).apply(list(a.coords)))

    def is_surjective(self) -> bool:
        return all(self.matrix(i).rank() == self.target.dim(i) for i in range(self.target.d + 1))

    def kernel(self, i: int) -> list:
        if self.source.dim(i) == 0:
            return []
        return [AlgebraElement(self.source, i, v) for v in kernel_basis(self.matrix(i))]

    def lift(self, t: AlgebraElement) -> AlgebraElement:
        x = solve(self.matrix(t.degree), list(t.coords))
        if x is None:
            raise ValueError("element is not in the image")
        return AlgebraElement(self.source, t.degree, x)


class OrientedSurjection(AlgebraMap):
    """Surjection A -> T of Gorenstein algebras, each oriented by its dual generator."""

    def __init__(self, source, target, images=None, name="pi"):
        super().__init__(source, target, images, name)
        for X, label in ((source, "source"), (target, "target")):
            if len(X.duals) != 1:
                raise ValueError(f"{name}: {label} must be Gorenstein (one dual generator)")
        if target.d > source.d:
            raise ValueError(f"{name}: target socle degree exceeds source socle degree")
        if not self.is_surjective():
            raise ValueError(f"{name}: map is not surjective")
        self.d, self.k = source.d, target.d
        self._tau = None

    def thom(self) -> AlgebraElement:
        """The unique tau in A_{d-k} with  ∫_A tau*a = ∫_T pi(a)  for all a in A_k."""
        if self._tau is None:
            A, d, k = self.source, self.d, self.k
            rows, rhs = [], []
            for a in A.basis(k):
                rows.append([A.integral(b * a) for b in A.basis(d - k)])
                rhs.append(self.target.integral(self(a)))
            x = solve(Matrix(rows, A.field, A.dim(d - k)), rhs)
            if x is None:
                raise InternalConsistencyError("Thom class equations are inconsistent")
            self._tau = AlgebraElement(A, d - k, x)
        return self._tau

    def gysin(self, t: AlgebraElement) -> AlgebraElement:
        """iota(t) = tau * (any preimage of t); degree goes up by d - k."""
        return self.thom() * self.lift(t)

    def gysin_image(self, i: int) -> list:
        j = i - (self.d - self.k)
        if j < 0:
            return []
        return [self.gysin(t) for t in self.target.basis(j)]

    def kernel_annihilator(self, i: int) -> list:
        """Basis of (0 :_A ker pi) in degree i."""
        A = self.source
        n = A.dim(i)
        if n == 0:
            return []
        rows = []
        for j in range(1, A.d - i + 1):
            for kappa in self.kernel(j):
                rows.extend(A.mult_matrix(kappa, i).rows)
        if not rows:
            return A.basis(i)
        return [AlgebraElement(A, i, v) for v in kernel_basis(Matrix(rows, A.field, n))]


# dual route


@dataclass
class ThomSolution:
    tau: Poly
    k: int
    coset_basis: list


def thom_class(F: Poly, H: Poly):
    """Solve tau o F = H for tau in Q_{d-k}; None when H is not in Q o F."""
    d, k = F.degree(), H.degree()
    if k > d:
        return None
    A = InverseSystem(F.grading, [F], F.field)
    M = A.catalecticant(d - k)
    x = solve(M, H.coords(k))
    if x is None:
        return None
    tau = Poly.from_coords(F.grading, d - k, x, F.field, "Q")
    return ThomSolution(tau, k, A.ann_component(d - k))


def principal_ideal_component(tau: Poly, j: int) -> list:
    """Coordinate vectors spanning (tau)_j."""
    g = tau.grading
    e = j - tau.degree()
    if e < 0:
        return []
    return [(tau * Poly.monomial(g, m, 1, tau.field, "Q")).coords(j) for m in g.monomials(e)]


@dataclass
class CsCertificate:
    condition_a: bool
    condition_b: bool
    failing_degree: int = None
    H: Poly = None
    k: int = None
    predicted_hilbert: HilbertFunction = None
    actual_hilbert: HilbertFunction = None
    message: str = ""

    @property
    def verdict(self) -> bool:
        return self.condition_a and self.condition_b


def _as_dual(p: Poly) -> Poly:
    return p if p.side == "R" else p.dual()


def check_connected_sum(F: Poly, G: Poly, tau: Poly) -> CsCertificate:
    """Certify that Q/Ann(F - G) is a connected sum over Q/Ann(tau o F)."""
    F, G = _as_dual(F), _as_dual(G)
    tau = tau if tau.side == "Q" else tau.dual()
    d = F.degree()
    if G.degree() != d:
        raise ValueError("F and G must have the same degree")
    A = InverseSystem(F.grading, [F], F.field)
    B = InverseSystem(G.grading, [G], G.field)
    C = InverseSystem(F.grading, [F - G], F.field)
    e = tau.degree()
    if not 0 < e <= d:
        raise ValueError(f"tau must have degree between 1 and {d}")
    k = d - e
    HF, HG = contract(tau, F), contract(tau, G)
    cond_a = HF == HG and not HF.is_zero()
    cert = CsCertificate(cond_a, False, H=HF, k=k, actual_hilbert=C.hilbert())
    if HF.is_zero():
        cert.message = "NOT a connected sum: condition (a) fails (tau o F = 0)"
        return cert
    T = InverseSystem(F.grading, [HF], F.field)
    cert.predicted_hilbert = hfcs(A.hilbert(), B.hilbert(), T.hilbert(), d, k)
    n_at = lambda j: len(F.grading.monomials(j))
    for j in range(d + 1):
        if not same_span(A.ann_vectors(j) + B.ann_vectors(j), T.ann_vectors(j), n_at(j), F.field):
            cert.failing_degree = j
            break
    cert.condition_b = cert.failing_degree is None
    if not cond_a:
        cert.message = f"NOT a connected sum: condition (a) fails (tau o F = {HF}, tau o G = {HG})"
    elif not cert.condition_b:
        cert.message = f"NOT a connected sum: condition (b) fails at degree {cert.failing_degree}"
    else:
        L = InverseSystem(F.grading, [F, G], F.field)
        for j in range(d + 1):
            if not same_span(C.ann_vectors(j), L.ann_vectors(j) + principal_ideal_component(tau, j), n_at(j), F.field):
                raise InternalConsistencyError(f"Ann(F-G) differs from Ann(F,G) + (tau) in degree {j}")
        if C.hilbert() != cert.predicted_hilbert:
            raise InternalConsistencyError("connected sum Hilbert function disagrees with the sum formula")
        cert.message = f"connected sum over Q/Ann({HF}), k = {k}"
    return cert


def fibered_product_dual(F: Poly, G: Poly) -> InverseSystem:
    """The level algebra Q/Ann(F, G)."""
    F, G = _as_dual(F), _as_dual(G)
    return InverseSystem(F.grading, [F, G], F.field)


def connected_sum_dual(F: Poly, G: Poly, tau: Poly) -> InverseSystem:
    cert = check_connected_sum(F, G, tau)
    if not cert.verdict:
        raise NotAConnectedSum(cert.message)
    F, G = _as_dual(F), _as_dual(G)
    return InverseSystem(F.grading, [F - G], F.field)


# structural route


class GradedSubquotient(Subquotient):
    """Fibered product or connected sum built inside A ⊕ B."""

    def __init__(self, kind, pi_A, pi_B, sub, ideal=None, tau_pair=None):
        self.kind = kind
        self.pi_A, self.pi_B = pi_A, pi_B
        self.A, self.B, self.T = pi_A.source, pi_B.source, pi_A.target
        self.d, self.k = pi_A.d, pi_A.k
        self.tau_pair = tau_pair
        super().__init__(DirectSum(self.A, self.B), sub, ideal)

    def from_pair(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        if self.pi_A(a) != self.pi_B(b):
            raise ValueError("components have different images in T")
        return self.project(self.ambient.pair(a, b))

    def components(self, x: AlgebraElement):
        return self.ambient.split(x.degree, list(self.lift(x).coords))

    def __repr__(self):
        op = "x" if self.kind == "fibered" else "#"
        return f"GradedSubquotient({self.A!r} {op}_T {self.B!r})"


def _check_pair(pi_A, pi_B):
    if pi_A.target is not pi_B.target:
        T1, T2 = pi_A.target, pi_B.target
        if T1.grading != T2.grading or T1.duals != T2.duals:
            raise ValueError("the two surjections have different targets")
    if pi_A.d != pi_B.d:
        raise ValueError(f"socle degrees differ: {pi_A.d} vs {pi_B.d}")


def _pullback(pi_A, pi_B) -> dict:
    A, B, T = pi_A.source, pi_B.source, pi_A.target
    sub = {}
    for i in range(pi_A.d + 1):
        na, nb, nt = A.dim(i), B.dim(i), T.dim(i)
        if nt == 0:
            f = A.field
            sub[i] = [[f.one if r == c else f.zero for r in range(na + nb)] for c in range(na + nb)]
            continue
        Ma, Mb = pi_A.matrix(i), pi_B.matrix(i)
        M = Matrix([ra + [-x for x in rb] for ra, rb in zip(Ma.rows, Mb.rows)], A.field, na + nb)
        sub[i] = kernel_basis(M)
    return sub


def fibered_product_structural(pi_A: OrientedSurjection, pi_B: OrientedSurjection) -> GradedSubquotient:
    """{(a, b) : pi_A(a) = pi_B(b)} inside A ⊕ B."""
    _check_pair(pi_A, pi_B)
    D = GradedSubquotient("fibered", pi_A, pi_B, _pullback(pi_A, pi_B))
    if D.hilbert() != hffp(D.A.hilbert(), D.B.hilbert(), D.T.hilbert()):
        raise InternalConsistencyError("fibered product dimensions disagree with H(A)+H(B)-H(T)")
    return D


def connected_sum_structural(pi_A: OrientedSurjection, pi_B: OrientedSurjection) -> GradedSubquotient:
    """Fibered product modulo the principal ideal of (tau_A, tau_B)."""
    _check_pair(pi_A, pi_B)
    tA, tB = pi_A.thom(), pi_B.thom()
    iA, iB = pi_A(tA), pi_B(tB)
    if iA != iB:
        T = pi_A.target
        raise IncompatibleThomClasses(
            f"pi_A(tau_A) = {T.describe(iA)} differs from pi_B(tau_B) = {T.describe(iB)}; no total Thom class"
        )
    sub = _pullback(pi_A, pi_B)
    P = DirectSum(pi_A.source, pi_B.source)
    tau = P.pair(tA, tB)
    d, k = pi_A.d, pi_A.k
    ideal = {}
    for i in range(d - k, d + 1):
        ideal[i] = [list((tau * AlgebraElement(P, i - (d - k), s)).coords) for s in sub[i - (d - k)]]
    C = GradedSubquotient("connected", pi_A, pi_B, sub, ideal, tau_pair=(tA, tB))
    expected = hfcs(C.A.hilbert(), C.B.hilbert(), C.T.hilbert(), d, k)
    if C.hilbert() != expected:
        raise InternalConsistencyError(f"connected sum dimensions {C.hilbert()} disagree with the sum formula {expected}")
    return C


# monomial pairs


@dataclass
class MonomialWitness:
    M0: tuple
    MF: tuple
    MG: tuple
    tau: Poly
    k: int


def _as_monomial(p):
    if isinstance(p, Poly):
        if len(p.terms) != 1:
            raise ValueError(f"{p} is not a monomial")
        return next(iter(p.terms))
    return tuple(p)


def monomial_cs_criterion(F, G, grading: Grading = None, field=None):
    """Find M0 with F = MF*M0, G = MG*M0, MF and MG of disjoint support, neither dividing M0.

    Returns the witness with M0 of largest degree, or None.
    """
    if isinstance(F, Poly):
        grading, field = F.grading, F.field
    f, g = _as_monomial(F), _as_monomial(G)
    if grading is None:
        grading = Grading((1,) * len(f))
    if field is None:
        from .scalars import QQ

        field = QQ
    if grading.degree(f) != grading.degree(g):
        raise ValueError("monomials of different degrees")
    if f == g:
        return None
    gcd = tuple(min(a, b) for a, b in zip(f, g))
    divisors = [m for m in itertools.product(*(range(e + 1) for e in gcd))]
    divisors.sort(key=lambda m: (-grading.degree(m), tuple(-e for e in reversed(m))))
    for M0 in divisors:
        MF, MG = mono_div(f, M0), mono_div(g, M0)
        if support(MF) & support(MG):
            continue
        if divides(MF, M0) or divides(MG, M0):
            continue
        tau = Poly(grading, {MF: 1, MG: 1}, field, "Q")
        return MonomialWitness(M0, MF, MG, tau, grading.degree(M0))
    return None


# decomposability probe


@dataclass
class ProbeReport:
    generator_degrees: dict
    candidates: list
    ruled_out: dict = dc_field(default_factory=dict)
    totally_indecomposable: bool = False
    binomial_witness: MonomialWitness = None
    notes: list = dc_field(default_factory=list)


def probe_decomposability(F: Poly) -> ProbeReport:
    """Candidate socle degrees k of a connected-sum decomposition, from generator degrees of Ann(F).

    A decomposition over T with socle degree k forces a minimal generator of degree d - k.
    An empty candidate list therefore shows the algebra is totally indecomposable.
    """
    F = _as_dual(F)
    C = InverseSystem(F.grading, [F], F.field)
    d = C.d
    degs = dict(sorted(C.min_generator_degrees().items()))
    cands = sorted({d - j for j in degs if 0 <= d - j < d})
    rep = ProbeReport(degs, cands)
    if 0 in cands and F.grading.is_standard and C.dim(1) < 2 and d >= 2:
        rep.ruled_out[0] = f"a decomposition over the field needs dim C_1 >= 2, but dim C_1 = {C.dim(1)}"
    live = [k for k in cands if k not in rep.ruled_out]
    rep.totally_indecomposable = not live
    if rep.totally_indecomposable:
        rep.notes.append("totally indecomposable: no admissible generator degree")
    if len(F.terms) == 2:
        (m1, c1), (m2, c2) = sorted(F.terms.items())
        w = monomial_cs_criterion(m1, m2, F.grading, F.field)
        rep.binomial_witness = w
        if w is None:
            rep.notes.append(
                "binomial search found no decomposition in these coordinates; this does not prove indecomposability"
            )
        else:
            rep.notes.append(f"binomial decomposition with M0 of degree {w.k}, tau = {w.tau}")
    return rep


# quadratic forms


@dataclass
class QuadraticDiagonalization:
    forms: list
    diagonal: list
    change_of_basis: list

    @property
    def summands(self) -> int:
        return sum(1 for a in self.diagonal if a != 0)


def quadratic_matrix(F: Poly) -> list:
    """Symmetric matrix (x_i x_j o F) over the degree-one variables."""
    F = _as_dual(F)
    if F.degree() != 2:
        raise ValueError("expected a quadratic form")
    g = F.grading
    lin = g.linear_variables()
    for m in F.terms:
        if any(e and g.weights[i] != 1 for i, e in enumerate(m)):
            raise ValueError("quadratic form involves a variable of weight > 1")
    f = F.field
    M = [[f.zero] * len(lin) for _ in lin]
    for a, i in enumerate(lin):
        for b, j in enumerate(lin):
            m = [0] * g.n
            m[i] += 1
            m[j] += 1
            M[a][b] = F.coefficient(tuple(m))
    return M


def diagonalize_quadratic(F: Poly) -> QuadraticDiagonalization:
    """Congruence diagonalization: linear forms y_a with y_a y_b o F = 0 for a != b."""
    F = _as_dual(F)
    f = F.field
    if f.characteristic == 2:
        raise ValueError("diagonalization of quadratic forms needs characteristic != 2")
    M = quadratic_matrix(F)
    n = len(M)
    P = [[f.one if i == j else f.zero for j in range(n)] for i in range(n)]

    def add(r, s, c):
        # row r += c * row s, applied as a congruence
        P[r] = [x + c * y for x, y in zip(P[r], P[s])]
        M[r] = [x + c * y for x, y in zip(M[r], M[s])]
        for row in M:
            row[r] = row[r] + c * row[s]

    def swap(r, s):
        P[r], P[s] = P[s], P[r]
        M[r], M[s] = M[s], M[r]
        for row in M:
            row[r], row[s] = row[s], row[r]

    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(k, n) if i != j and M[i][j] != 0), None)
            if pair is None:
                break
            add(pair[0], pair[1], f.one)
            piv = pair[0]
        swap(k, piv)
        for r in range(k + 1, n):
            if M[r][k] != 0:
                add(r, k, -M[r][k] / M[k][k])
    lin = F.grading.linear_variables()
    forms = []
    for row in P:
        t = {}
        for c, i in zip(row, lin):
            t[F.grading.unit(i)] = c
        forms.append(Poly(F.grading, t, f, "Q"))
    diag = [M[i][i] for i in range(n)]
    for a in range(n):
        for b in range(n):
            v = contract(forms[a] * forms[b], F)
            want = diag[a] if a == b else f.zero
            if not (v.is_zero() and want == 0) and v != Poly.constant(F.grading, want, f, "R"):
                raise InternalConsistencyError("quadratic diagonalization failed its self-check")
    return QuadraticDiagonalization(forms, diag, P)


# generalized Thom classes


def verify_generalized_thom(L: InverseSystem, K: InverseSystem, psi, tau: Poly) -> bool:
    """Check that the dual generator of K equals sum psi_i (tau o G_i) for the duals G_i of L."""
    if len(K.duals) != 1:
        raise ValueError("K must be Gorenstein")
    if len(psi) != len(L.duals):
        raise ValueError("psi needs one coefficient per dual generator of L")
    tau = tau if tau.side == "Q" else tau.dual()
    if tau.degree() != L.d - K.d:
        raise ValueError(f"tau must have degree {L.d - K.d}")
    f = L.field
    total = Poly.zero(L.grading, f, "R")
    for c, G in zip(psi, L.duals):
        total = total + contract(tau, G).scale(c)
    by_duals = total == K.duals[0]
    # the same statement through integrals over a basis of Q_k
    k = K.d
    by_integrals = True
    for m in L.grading.monomials(k):
        y = Poly.monomial(L.grading, m, 1, f, "Q")
        lhs = contract(y, K.duals[0]).coefficient((0,) * L.grading.n)
        rhs = sum((f(c) * contract(y * tau, G).coefficient((0,) * L.grading.n) for c, G in zip(psi, L.duals)), f.zero)
        if lhs != rhs:
            by_integrals = False
            break
    if by_duals != by_integrals:
        raise InternalConsistencyError("generalized Thom checks disagree")
    return by_duals


# presentations over the field


def ideal_component(grading: Grading, gens, j: int) -> list:
    vecs = []
    for g in gens:
        e = j - g.degree()
        if e < 0:
            continue
        for m in grading.monomials(e):
            vecs.append((g * Poly.monomial(grading, m, 1, g.field, "Q")).coords(j))
    return vecs


def minimal_generators(grading: Grading, gens, max_degree: int, field) -> list:
    """Minimal homogeneous generators, chosen degree by degree from ``gens``."""
    out = []
    for j in range(1, max_degree + 1):
        n = len(grading.monomials(j))
        if n == 0:
            continue
        cur = ideal_component(grading, out, j)
        r = len(span_basis(cur, n, field)[0]) if cur else 0
        for g in gens:
            if g.degree() != j:
                continue
            trial = cur + [g.coords(j)]
            r2 = len(span_basis(trial, n, field)[0])
            if r2 > r:
                out.append(g)
                cur, r = trial, r2
    return out


@dataclass
class ProductPresentation:
    grading: Grading
    fp_generators: list
    cs_generators: list
    fp_hilbert: HilbertFunction
    cs_hilbert: HilbertFunction
    cs_dual: Poly
    standard_graded: bool


def _embed(p: Poly, joint: Grading, offset: int) -> Poly:
    t = {}
    for m, c in p.terms.items():
        e = [0] * joint.n
        e[offset : offset + len(m)] = m
        t[tuple(e)] = c
    return Poly(joint, t, p.field, p.side)


def socle_generator(A: InverseSystem) -> Poly:
    """Representative of the degree-d element with integral 1."""
    e = A.basis(A.d)[0]
    return A.lift(e * (1 / A.integral(e)))


def product_presentation_over_F(A: InverseSystem, B: InverseSystem) -> ProductPresentation:
    """Presentations of A x_F B and A #_F B in the joint polynomial ring, checked degree by degree."""
    if A.d != B.d:
        raise ValueError("socle degrees differ")
    f = A.field
    names_b = [n if n not in A.grading.names else n + "_b" for n in B.grading.names]
    joint = A.grading.extend(B.grading.weights, names_b)
    na = A.grading.n
    ea = lambda p: _embed(p, joint, 0)
    eb = lambda p: _embed(p, joint, na)
    mixed = [
        Poly.variable(joint, i, f, "Q") * Poly.variable(joint, na + j, f, "Q")
        for i in range(na)
        for j in range(B.grading.n)
    ]
    relA = [ea(g) for gs in A.min_generators().values() for g in gs]
    relB = [eb(g) for gs in B.min_generators().values() for g in gs]
    top = A.d + joint.max_weight
    fp_all = mixed + relA + relB
    tau = ea(socle_generator(A)) + eb(socle_generator(B))
    cs_all = fp_all + [tau]
    fp_gens = minimal_generators(joint, fp_all, top + joint.max_weight, f)
    cs_gens = minimal_generators(joint, cs_all, top + joint.max_weight, f)
    Fd = ea(A.duals[0]) - eb(B.duals[0])
    dual_fp = InverseSystem(joint, [ea(A.duals[0]), eb(B.duals[0])], f)
    dual_cs = InverseSystem(joint, [Fd], f)
    fp_h, cs_h = [], []
    for j in range(A.d + 1):
        n = len(joint.monomials(j))
        Ifp = ideal_component(joint, fp_gens, j)
        Ics = ideal_component(joint, cs_gens, j)
        if not same_span(Ifp, dual_fp.ann_vectors(j), n, f):
            raise InternalConsistencyError(f"fibered product presentation disagrees with Ann in degree {j}")
        if not same_span(Ics, dual_cs.ann_vectors(j), n, f):
            raise InternalConsistencyError(f"connected sum presentation disagrees with Ann in degree {j}")
        fp_h.append(n - (len(span_basis(Ifp, n, f)[0]) if Ifp else 0))
        cs_h.append(n - (len(span_basis(Ics, n, f)[0]) if Ics else 0))
    fp_h, cs_h = HilbertFunction(fp_h), HilbertFunction(cs_h)
    T = trivial_algebra(f)
    zeroA = [Poly.zero(T.grading, f, "Q")] * A.grading.n
    zeroB = [Poly.zero(T.grading, f, "Q")] * B.grading.n
    pA = OrientedSurjection(A, T, zeroA, "pi_A")
    pB = OrientedSurjection(B, T, zeroB, "pi_B")
    D = fibered_product_structural(pA, pB)
    C = connected_sum_structural(pA, pB)
    if D.hilbert() != fp_h or C.hilbert() != cs_h:
        raise InternalConsistencyError("presentation dimensions disagree with the structural construction")
    std = A.is_standard_graded() and B.is_standard_graded()
    if std and not (dual_fp.is_standard_graded() and dual_cs.is_standard_graded()):
        raise InternalConsistencyError("standard graded inputs gave a non-standard graded result")
    return ProductPresentation(joint, fp_gens, cs_gens, fp_h, cs_h, Fd, std)
