"""Shared constructors and brute-force oracles for the test suite."""

import itertools
import random
from fractions import Fraction

from gorsum.connected_sum import OrientedSurjection
from gorsum.exact_linalg import Matrix, same_span
from gorsum.graded_poly import Grading, Poly, parse_poly
from gorsum.inverse_system import InverseSystem, from_text
from gorsum.lefschetz import conjugate
from gorsum.scalars import QQ


def R(text, g, field=QQ):
    return parse_poly(text, g, field, "R")


def Q(text, g, field=QQ):
    return parse_poly(text, g, field, "Q")


def surj(A, T, images, name="pi"):
    return OrientedSurjection(A, T, [Q(t, T.grading, A.field) for t in images], name)


def fpex():
    """A = F[x,y]/(x^2,y^4), B = F[u,v]/(u^3,v^3), T = F[z]/(z^2)."""
    A = from_text("x y", "X*Y^3")
    B = from_text("u v", "U^2*V^2")
    T = from_text("z", "Z")
    return A, B, T, surj(A, T, ["z", "0"], "pi_A"), surj(B, T, ["z", "0"], "pi_B")


FP3_VARS = {"z1": 1, "z2": 1, "z3": 2}


def fp3():
    A = from_text(FP3_VARS, "Z1^3")
    B = from_text(FP3_VARS, "Z1^2*Z2 + Z2*Z3")
    T = from_text(FP3_VARS, "Z1")
    return A, B, T, OrientedSurjection(A, T, None, "pi_A"), OrientedSurjection(B, T, None, "pi_B")


def random_form(rng, g, d, field=QQ, density=0.6):
    mons = g.monomials(d)
    while True:
        t = {m: rng.randint(-3, 3) for m in mons if rng.random() < density}
        p = Poly(g, t, field, "R")
        if not p.is_zero():
            return p


def random_surjection(seed):
    """Q/Ann(F) -> Q/Ann(tau o F) for random F and tau."""
    from gorsum.graded_poly import contract

    rng = random.Random(seed)
    n = rng.choice([2, 3])
    g = Grading((1,) * n, tuple("xyz"[:n]))
    d = rng.randint(2, 5 if n == 2 else 4)
    while True:
        F = random_form(rng, g, d)
        k = rng.randint(0, d - 1)
        tau = random_form(rng, g, d - k).dual()
        H = contract(tau, F)
        if not H.is_zero():
            break
    A = InverseSystem(g, [F])
    T = InverseSystem(g, [H])
    return OrientedSurjection(A, T, None, "pi")


def all_monomial_pairs(max_degree=6, max_vars=3):
    for n in range(1, max_vars + 1):
        g = Grading((1,) * n)
        for d in range(1, max_degree + 1):
            for f, h in itertools.combinations(g.monomials(d), 2):
                yield g, f, h


_ann_cache = {}


def _ann(g, m):
    key = (g, m)
    if key not in _ann_cache:
        _ann_cache[key] = InverseSystem(g, [Poly.monomial(g, m, 1, QQ, "R")])
    return _ann_cache[key]


def _contract_mono(tau_terms, M):
    out = {}
    for m, c in tau_terms:
        if all(a <= b for a, b in zip(m, M)):
            r = tuple(b - a for a, b in zip(m, M))
            out[r] = out.get(r, 0) + c
    return {k: v for k, v in out.items() if v}


def brute_force_two_monomial_tau(g, f, h):
    """Search tau with at most two monomials and coefficients +-1 satisfying both conditions."""
    d = g.degree(f)
    for k in range(d - 1, -1, -1):
        mons = g.monomials(d - k)
        cands = [((m, 1),) for m in mons]
        cands += [((a, 1), (b, s)) for a, b in itertools.combinations(mons, 2) for s in (1, -1)]
        for tau in cands:
            hf = _contract_mono(tau, f)
            if not hf or hf != _contract_mono(tau, h):
                continue
            H = InverseSystem(g, [Poly(g, hf, QQ, "R")])
            A, B = _ann(g, f), _ann(g, h)
            if all(
                same_span(A.ann_vectors(j) + B.ann_vectors(j), H.ann_vectors(j), len(g.monomials(j)), QQ)
                for j in range(d + 1)
            ):
                return tau, k
    return None


def hilbert_by_contraction(A: InverseSystem):
    """dim A_i = dim span{m o G : m in Q_i monomials}, directly from contractions."""
    from gorsum.exact_linalg import span_dim
    from gorsum.graded_poly import contract

    g, out = A.grading, []
    for i in range(A.d + 1):
        rows = []
        for m in g.monomials(i):
            op = Poly.monomial(g, m, 1, A.field, "Q")
            row = []
            for G in A.duals:
                row.extend(contract(op, G).coords(A.d - i))
            rows.append(row)
        out.append(span_dim(rows, len(g.monomials(A.d - i)) * len(A.duals), A.field) if rows else 0)
    return tuple(out)


def total_jordan(A, ell):
    """Jordan type from ranks of powers of the full multiplication matrix (block matrix on all of A)."""
    offs, n = {}, 0
    for i in range(A.top + 1):
        offs[i] = n
        n += A.dim(i)
    rows = [[A.field.zero] * n for _ in range(n)]
    for i in range(A.top):
        M = A.mult_matrix(ell, i)
        for r in range(A.dim(i + 1)):
            for c in range(A.dim(i)):
                rows[offs[i + 1] + r][offs[i] + c] = M.rows[r][c]
    L = Matrix(rows, A.field, n)
    ranks, P = [n], Matrix.identity(n, A.field)
    while ranks[-1]:
        P = L @ P
        ranks.append(P.rank())
    sizes = [ranks[s - 1] - ranks[s] for s in range(1, len(ranks))]
    return conjugate(sizes)
