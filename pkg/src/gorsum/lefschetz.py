"""Weak and strong Lefschetz properties, Jordan types, and families built from connected sums."""

from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .algebra import AlgebraElement, GradedAlgebra, HilbertFunction, InternalConsistencyError
from .connected_sum import (
    GradedSubquotient,
    OrientedSurjection,
    connected_sum_structural,
    fibered_product_structural,
    thom_class,
)
from .exact_linalg import Matrix, span_basis, solve
from .graded_poly import Grading, Poly
from .inverse_system import InverseSystem
from .scalars import QQ


class HypothesisError(ValueError):
    pass


def linear_form(A: GradedAlgebra, coeffs) -> AlgebraElement:
    return AlgebraElement(A, 1, coeffs)


def _as_form(A, ell):
    if isinstance(ell, AlgebraElement):
        if ell.degree != 1:
            raise ValueError("Lefschetz elements have degree 1")
        return ell
    return linear_form(A, ell)


def mult_map(A: GradedAlgebra, ell, e: int, i: int) -> Matrix:
    """Matrix of multiplication by ell^e from A_i to A_{i+e}."""
    ell = _as_form(A, ell)
    M = Matrix.identity(A.dim(i), A.field)
    for s in range(e):
        M = A.mult_matrix(ell, i + s) @ M
    return M


def _ranks(A: GradedAlgebra, ell) -> dict:
    """(i, e) -> rank of ell^e : A_i -> A_{i+e}, for e >= 1 and i + e <= top."""
    top = A.top
    step = {i: A.mult_matrix(ell, i) for i in range(top)}
    out = {}
    for i in range(top):
        M = None
        for e in range(1, top - i + 1):
            M = step[i] if M is None else step[i + e - 1] @ M
            out[(i, e)] = M.rank()
    return out


def conjugate(partition) -> tuple:
    p = sorted((x for x in partition if x > 0), reverse=True)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= s) for s in range(1, p[0] + 1))


def hilbert_conjugate(h) -> tuple:
    return conjugate(list(HilbertFunction(h)))


def dominates(p, q) -> bool:
    """p >= q in dominance order (partitions of the same integer)."""
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sp < sq:
            return False
    return True


def _char_sensitive(A) -> bool:
    p = A.field.characteristic
    if p and p <= A.top:
        warnings.warn(f"characteristic {p} <= socle degree {A.top}: Lefschetz verdicts are char-sensitive")
        return True
    return False


@dataclass
class LefschetzReport:
    wlp: bool
    slp: bool
    ell: AlgebraElement = None
    jordan: tuple = ()
    wlp_failure: int = None
    slp_failure: tuple = None
    narrow_sense: bool = None
    char_sensitive: bool = False
    diagnostic: str = ""


def _report(A, ell, assert_narrow=None) -> LefschetzReport:
    h = A.hilbert()
    top = A.top
    cs = _char_sensitive(A)
    if top > 0 and A.dim(1) == 0:
        # the only linear form is 0: weak Lefschetz exactly when no two adjacent degrees are nonzero
        wfail = next((i for i in range(top) if min(h[i], h[i + 1]) > 0), None)
        return LefschetzReport(wfail is None, False, None, (1,) * A.total_dim(), wfail, (0, top), None, cs, "no linear forms")
    ell = _as_form(A, ell) if top > 0 else None
    ranks = _ranks(A, ell) if top > 0 else {}
    wfail = sfail = None
    for (i, e), r in sorted(ranks.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        if r != min(h[i], h[i + e]):
            if e == 1 and wfail is None:
                wfail = i
            if sfail is None:
                sfail = (i, e)
    total = A.total_dim()
    rs = [total] + [sum(r for (i, e), r in ranks.items() if e == s) for s in range(1, top + 1)] + [0]
    jordan = conjugate([rs[s - 1] - rs[s] for s in range(1, len(rs))])
    rep = LefschetzReport(wfail is None, sfail is None, ell, jordan, wfail, sfail, None, cs)
    if (jordan == hilbert_conjugate(h)) != rep.slp:
        raise InternalConsistencyError("Jordan type test and rank test disagree on strong Lefschetz")
    if h.is_symmetric() and top > 0:
        d = len(h.trimmed()) - 1
        rep.narrow_sense = all(
            ranks.get((i, d - 2 * i), 0) == h[i] == h[d - i] for i in range(d // 2 + (d % 2)) if d - 2 * i >= 1
        )
        if assert_narrow is None:
            assert_narrow = isinstance(A, InverseSystem) and len(A.duals) == 1 or getattr(A, "kind", None) == "connected"
        if assert_narrow and rep.narrow_sense != rep.slp:
            raise InternalConsistencyError("narrow-sense and full strong Lefschetz checks disagree")
    if rep.slp:
        rep.diagnostic = "strong Lefschetz"
    elif rep.wlp:
        rep.diagnostic = f"weak but not strong Lefschetz: ell^{sfail[1]} fails from degree {sfail[0]}"
    else:
        rep.diagnostic = f"not weak Lefschetz: ell fails from degree {wfail}"
    return rep


def wlp_check(A: GradedAlgebra, ell) -> bool:
    h = A.hilbert()
    if A.top > 0 and A.dim(1) == 0:
        return all(min(h[i], h[i + 1]) == 0 for i in range(A.top))
    ell = _as_form(A, ell)
    return all(A.mult_matrix(ell, i).rank() == min(h[i], h[i + 1]) for i in range(A.top))


def slp_check(A: GradedAlgebra, ell) -> LefschetzReport:
    return _report(A, ell)


def jordan_type(A: GradedAlgebra, ell) -> tuple:
    """Jordan type of multiplication by ell, from ranks of its powers."""
    return _report(A, ell).jordan


@dataclass
class GenericReport:
    wlp: bool
    slp: bool
    jordan: tuple
    ell: AlgebraElement
    seed: int
    trials: int
    label: str = "observed-generic"
    char_sensitive: bool = False
    reports: list = dc_field(default_factory=list)

    @property
    def diagnostic(self) -> str:
        return self.reports[0].diagnostic if self.reports else ""


def random_forms(A: GradedAlgebra, trials: int, seed: int) -> list:
    rng = random.Random(seed)
    n = A.dim(1)
    out = []
    for _ in range(trials):
        while True:
            c = [rng.randint(-10, 10) for _ in range(n)]
            if any(c) or n == 0:
                break
        out.append(linear_form(A, c))
    return out


def generic_lefschetz(A: GradedAlgebra, trials: int = 5, seed: int = 0) -> GenericReport:
    """Lefschetz data for seeded random linear forms; keeps the dominance-maximal Jordan type."""
    if A.top > 0 and A.dim(1) == 0:
        r = _report(A, None)
        return GenericReport(r.wlp, r.slp, r.jordan, None, seed, trials, char_sensitive=r.char_sensitive, reports=[r])
    reports = [_report(A, ell) for ell in random_forms(A, trials, seed)]
    best = reports[0]
    for r in reports[1:]:
        if dominates(r.jordan, best.jordan) and r.jordan != best.jordan:
            best = r
    slp_r = next((r for r in reports if r.slp), None)
    wlp_r = next((r for r in reports if r.wlp), None)
    witness = (slp_r or wlp_r or best).ell
    ordered = [slp_r or wlp_r or best] + [r for r in reports if r is not (slp_r or wlp_r or best)]
    return GenericReport(
        wlp_r is not None, slp_r is not None, best.jordan, witness, seed, trials,
        char_sensitive=best.char_sensitive, reports=ordered,
    )


# connected sums and Lefschetz


@dataclass
class MiddleCheck:
    ok: bool
    injective: bool
    surjective: bool
    u: int
    v: int
    full_wlp: bool


def wlp_middle_check(D: GradedSubquotient, ell) -> MiddleCheck:
    """Weak Lefschetz for A x_T B or A #_T B from two middle-degree maps.

    Needs standard graded A and B and a small fiber: k < floor((d - 1) / 2).
    """
    if not isinstance(D, GradedSubquotient):
        raise HypothesisError("expects a fibered product or connected sum")
    d, k = D.d, D.k
    if not (D.A.is_standard_graded() and D.B.is_standard_graded()):
        raise HypothesisError("A and B must be standard graded")
    if not k < (d - 1) // 2:
        raise HypothesisError(f"needs k < floor((d-1)/2); here k = {k}, d = {d}")
    ell = _as_form(D, ell)
    # maps D_{u-1} -> D_u (injective) and D_{v-1} -> D_v (surjective)
    if d % 2 == 0:
        u, v = d // 2, d // 2 + 1
    else:
        u = v = d // 2 + 1
    inj = D.mult_matrix(ell, u - 1).rank() == D.dim(u - 1)
    sur = D.mult_matrix(ell, v - 1).rank() == D.dim(v)
    full = wlp_check(D, ell)
    ok = inj and sur
    if ok != full:
        raise InternalConsistencyError("middle-degree check disagrees with the full weak Lefschetz check")
    return MiddleCheck(ok, inj, sur, u, v, full)


def w_sequence(k: int, d: int) -> HilbertFunction:
    """(0, 1, 2, ..., k, k+1, ..., k+1, k, ..., 1, 0) of length d + 1."""
    return HilbertFunction(min(i, d - i, k + 1) for i in range(d + 1))


def _fresh_name(grading, base="w"):
    name, n = base, 0
    while name in grading.names:
        n += 1
        name = f"{base}{n}"
    return name


@dataclass
class BlowupResult:
    B: InverseSystem
    pi_B: OrientedSurjection
    D: GradedSubquotient
    C: GradedSubquotient
    D_report: GenericReport
    C_report: GenericReport


def blowup_cs(pi_A: OrientedSurjection, trials: int = 5, seed: int = 0, check_inputs: bool = True) -> BlowupResult:
    """Connected sum of A with B = T[w]/(w^(d-k+1)) over T."""
    A, T = pi_A.source, pi_A.target
    d, k = pi_A.d, pi_A.k
    f = A.field
    if not pi_A(pi_A.thom()).is_zero():
        raise HypothesisError("needs pi_A(tau_A) = 0")
    if check_inputs:
        for X, label in ((A, "A"), (T, "T")):
            if not generic_lefschetz(X, trials, seed).slp:
                raise HypothesisError(f"{label} shows no strong Lefschetz element in {trials} trials")
    w = _fresh_name(T.grading)
    gB = T.grading.extend((1,), (w,))
    H = Poly(gB, {m + (0,): c for m, c in T.duals[0].terms.items()}, f, "R")
    B = InverseSystem(gB, [H * Poly.monomial(gB, (0,) * T.grading.n + (d - k,), 1, f, "R")], f)
    images = [Poly.variable(T.grading, i, f, "Q") for i in range(T.grading.n)] + [Poly.zero(T.grading, f, "Q")]
    pi_B = OrientedSurjection(B, T, images, "pi_B")
    D = fibered_product_structural(pi_A, pi_B)
    C = connected_sum_structural(pi_A, pi_B)
    return BlowupResult(B, pi_B, D, C, generic_lefschetz(D, trials, seed), generic_lefschetz(C, trials, seed))


@dataclass
class ClosureResult:
    blowup: BlowupResult
    point: tuple
    hilbert: HilbertFunction
    expected: HilbertFunction

    @property
    def C(self):
        return self.blowup.C


def closure_add(A: InverseSystem, k: int, point=None, trials: int = 5, seed: int = 0) -> ClosureResult:
    """Connected sum of A with F[x,y]/(x^(d-k+1), y^(k+1)) over F[y]/(y^(k+1)).

    The map A -> F[y]/(y^(k+1)) sends each degree-one variable x_i to p_i * y. It is
    well defined exactly when P^k lies in the inverse system of A, where P is the
    dual linear form of the point p. Without an explicit point, coordinate points are tried.
    """
    if len(A.duals) != 1:
        raise ValueError("A must be Gorenstein")
    d, f, g = A.d, A.field, A.grading
    if not 2 * k < d:
        raise HypothesisError(f"needs 2k < d; here k = {k}, d = {d}")
    lin = g.linear_variables()

    def dual_power(p):
        P = Poly(g, {g.unit(i): c for i, c in zip(lin, p)}, f, "R")
        return P ** k if k else Poly.constant(g, 1, f, "R")

    if point is None:
        for i in range(len(lin)):
            p = tuple(1 if j == i else 0 for j in range(len(lin)))
            if thom_class(A.duals[0], dual_power(p)) is not None:
                point = p
                break
        if point is None:
            raise HypothesisError("no coordinate point gives a well-defined map; pass point=")
    point = tuple(f(c) for c in point)
    Tg = Grading((1,), (_fresh_name(g, "y"),))
    T = InverseSystem(Tg, [Poly.monomial(Tg, (k,), 1, f, "R")], f)
    images = []
    it = iter(point)
    for i in range(g.n):
        if g.weights[i] == 1:
            images.append(Poly.monomial(Tg, (1,), next(it), f, "Q"))
        else:
            images.append(Poly.zero(Tg, f, "Q"))
    pi_A = OrientedSurjection(A, T, images, "pi_A")
    res = blowup_cs(pi_A, trials, seed)
    expected = A.hilbert() + w_sequence(k, d)
    if res.C.hilbert() != expected:
        raise InternalConsistencyError(f"closure Hilbert function {res.C.hilbert()} != {expected}")
    return ClosureResult(res, point, res.C.hilbert(), expected)


# families


def nonslp_family(m: int, t: int, field=QQ):
    """(A x_T B, A #_T B) for A = F[x]/(x^m), B = F[y]/(y^m), T = F[z]/(z^t), x, y -> z."""
    if not 1 <= t < m:
        raise ValueError("needs 1 <= t < m")
    gx, gy, gz = Grading((1,), ("x",)), Grading((1,), ("y",)), Grading((1,), ("z",))
    A = InverseSystem(gx, [Poly.monomial(gx, (m - 1,), 1, field, "R")], field)
    B = InverseSystem(gy, [Poly.monomial(gy, (m - 1,), 1, field, "R")], field)
    T = InverseSystem(gz, [Poly.monomial(gz, (t - 1,), 1, field, "R")], field)
    z = Poly.variable(gz, 0, field, "Q")
    pA = OrientedSurjection(A, T, [z], "pi_A")
    pB = OrientedSurjection(B, T, [z], "pi_B")
    return fibered_product_structural(pA, pB), connected_sum_structural(pA, pB)


def nonslp_duals(m: int, t: int, field=QQ):
    """Dual generators Z1^(m-1) and sum_j Z1^(m-1-jt) Z2^j in weights (1, t)."""
    g = Grading((1, t), ("z1", "z2"))
    H1 = Poly.monomial(g, (m - 1, 0), 1, field, "R")
    top = -(-m // t) - 1
    H2 = Poly(g, {(m - 1 - j * t, j): 1 for j in range(1, top + 1)}, field, "R")
    return H1, H2


def nonslp_hilbert(m: int, t: int) -> HilbertFunction:
    if 2 * t < m:
        return HilbertFunction([1] * t + [2] * (m - 2 * t) + [1] * t)
    if 2 * t == m:
        return HilbertFunction([1] * m)
    return HilbertFunction([1] * (m - t) + [0] * (2 * t - m) + [1] * (m - t))


def heightthree_parts(a: int, d: int, k: int, field=QQ):
    """(F, G, tau) in F[s,x,y] with F = S^a Y^b, G = X^(d-k) Y^k, b = d - a."""
    b = d - a
    if not (1 <= a <= b and 0 <= k and 2 * k < d):
        raise ValueError("needs 1 <= a <= d - a and 0 <= 2k < d")
    g = Grading((1, 1, 1), ("s", "x", "y"))
    F = Poly.monomial(g, (a, 0, b), 1, field, "R")
    G = Poly.monomial(g, (0, d - k, k), 1, field, "R")
    tau = Poly(g, {(a, 0, b - k): 1, (0, d - k, 0): 1}, field, "Q")
    return F, G, tau


def heightthree_family(a: int, d: int, k: int, field=QQ) -> InverseSystem:
    """Q/Ann(S^a Y^b - X^(d-k) Y^k)."""
    F, G, _ = heightthree_parts(a, d, k, field)
    return InverseSystem(F.grading, [F - G], field)


def heightthree_structural(a: int, d: int, k: int, field=QQ, trials: int = 5, seed: int = 0) -> BlowupResult:
    b = d - a
    gA, gT = Grading((1, 1), ("s", "y")), Grading((1,), ("y",))
    A = InverseSystem(gA, [Poly.monomial(gA, (a, b), 1, field, "R")], field)
    T = InverseSystem(gT, [Poly.monomial(gT, (k,), 1, field, "R")], field)
    pA = OrientedSurjection(A, T, [Poly.zero(gT, field, "Q"), Poly.variable(gT, 0, field, "Q")], "pi_A")
    return blowup_cs(pA, trials, seed)


# algebras with two Jordan blocks


@dataclass
class TwoBlockResult:
    a: int
    t: int
    kind: str
    alpha: object = None
    beta: object = None
    both_types: bool = False
    slp: bool = False
    standard_graded: bool = False
    message: str = ""


def _sqrt(x, field):
    if field.characteristic == 0:
        x = Fraction(x)
        if x < 0:
            return None
        n, dd = math.isqrt(x.numerator), math.isqrt(x.denominator)
        return Fraction(n, dd) if n * n == x.numerator and dd * dd == x.denominator else None
    for y in field.elements():
        if y * y == x:
            return y
    return None


def two_block_classify(C: GradedAlgebra, trials: int = 5, seed: int = 0) -> TwoBlockResult:
    """Normal form F[u,v]/(u^a, v^2) or F[u,v]/(u^a, v^2 - u^t v) for generic Jordan type (a, a)."""
    gen = generic_lefschetz(C, trials, seed)
    if len(gen.jordan) != 2 or gen.jordan[0] != gen.jordan[1]:
        raise ValueError(f"generic Jordan type {gen.jordan} does not have two equal parts")
    a = gen.jordan[0]
    u = next(r.ell for r in gen.reports if r.jordan == gen.jordan)
    f = C.field
    pw = [C.one()]
    for _ in range(2 * C.top + 2):
        pw.append(pw[-1] * u)
    if any(pw[i].is_zero() for i in range(a)) or not pw[a].is_zero():
        raise InternalConsistencyError("powers of the generic form do not give a string of length a")
    t = next(i for i in range(C.top + 1) if C.dim(i) > (0 if i >= a else 1))
    v = None
    for e in C.basis(t):
        vecs = [e.coords] + ([pw[t].coords] if t < a else [])
        if len(span_basis(vecs, C.dim(t), f)[0]) == len(vecs):
            v = e
            break
    for i in range(a):
        vecs = [x.coords for x in ((pw[i + t] if i + t < a else None), pw[i] * v) if x is not None and not x.is_zero()]
        want = (1 if i + t < a else 0) + 1
        if len(span_basis(vecs, C.dim(i + t), f)[0]) != want:
            raise InternalConsistencyError("u^i, u^i v do not form a basis")
    if not (pw[a] * v).is_zero() or C.total_dim() != 2 * a:
        raise InternalConsistencyError("algebra is not spanned by the two strings")
    res = TwoBlockResult(a, t, "1")
    v2 = v * v
    ut = pw[t]
    if a <= t:
        if not v2.is_zero():
            raise InternalConsistencyError("v^2 should vanish")
        res.message = "v^2 = 0"
    elif a <= 2 * t:
        x = solve(Matrix.from_columns([(ut * v).coords], C.dim(2 * t), f), list(v2.coords))
        alpha = x[0]
        res.alpha = alpha
        res.both_types = True
        if alpha != 0:
            v = v * (1 / alpha)
            if v * v != pw[t] * v:
                raise InternalConsistencyError("rescaled v does not satisfy v^2 = u^t v")
            res.kind = "2"
        res.message = "both normal forms are isomorphic when t < a <= 2t"
    else:
        M = Matrix.from_columns([(ut * v).coords, pw[2 * t].coords], C.dim(2 * t), f)
        x = solve(M, list(v2.coords))
        alpha, beta = -x[0], -x[1]
        res.alpha, res.beta = alpha, beta
        disc = alpha * alpha - 4 * beta
        if disc == 0:
            v1 = v + ut * (alpha / 2)
            if not (v1 * v1).is_zero():
                raise InternalConsistencyError("completed square does not vanish")
        else:
            r = _sqrt(disc, f)
            if r is None:
                res.kind = "extension required"
                res.message = f"v^2 + ({alpha}) u^t v + ({beta}) u^2t has irrational roots; discriminant {disc}"
            else:
                delta, eps = (-alpha + r) / 2, (-alpha - r) / 2
                v1 = v - ut * delta
                v2n = v1 * (1 / (eps - delta))
                if v2n * v2n != ut * v2n:
                    raise InternalConsistencyError("factored relation failed")
                res.kind = "2"
    res.slp = gen.slp
    res.standard_graded = C.is_standard_graded()
    if not (res.slp == res.standard_graded == (t == 1)):
        raise InternalConsistencyError("SLP, standard grading and t = 1 should agree for two-block algebras")
    return res
