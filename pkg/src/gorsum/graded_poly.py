"""Weighted-graded polynomials on both sides of the contraction pairing.

``Q`` is the ring of operators (lowercase names) and ``R`` the ring of dual
generators (uppercase names). Monomials are exponent tuples. The action of Q
on R is contraction: ``x^a o X^b = X^(b-a)`` when ``a <= b`` and zero otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .scalars import QQ

Monomial = tuple


@dataclass(frozen=True)
class Grading:
    weights: tuple
    names: tuple = None

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if any(x < 1 for x in w):
            raise ValueError(f"weights must be >= 1, got {w}")
        object.__setattr__(self, "weights", w)
        if self.names is None:
            object.__setattr__(self, "names", tuple(f"x{i + 1}" for i in range(len(w))))
        else:
            names = tuple(str(s).lower() for s in self.names)
            if len(names) != len(w):
                raise ValueError("need one name per weight")
            if len(set(names)) != len(names):
                raise ValueError(f"duplicate variable names in {names}")
            object.__setattr__(self, "names", names)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def is_standard(self) -> bool:
        return all(w == 1 for w in self.weights)

    @property
    def max_weight(self) -> int:
        return max(self.weights, default=1)

    def degree(self, m: Monomial) -> int:
        return sum(e * w for e, w in zip(m, self.weights))

    def monomials(self, d: int) -> tuple:
        return _monomials(self.weights, d)

    def index(self, d: int) -> dict:
        return _index(self.weights, d)

    def linear_variables(self) -> list:
        return [i for i, w in enumerate(self.weights) if w == 1]

    def unit(self, i: int) -> Monomial:
        return tuple(1 if j == i else 0 for j in range(self.n))

    def extend(self, weights, names) -> "Grading":
        return Grading(self.weights + tuple(weights), self.names + tuple(names))


def _revlex_key(m):
    return tuple(-e for e in reversed(m))


@lru_cache(maxsize=None)
def _monomials(weights: tuple, d: int) -> tuple:
    if d < 0:
        return ()
    out = []

    def rec(i, rem, acc):
        if i == len(weights):
            if rem == 0:
                out.append(tuple(acc))
            return
        w = weights[i]
        for e in range(rem // w + 1):
            acc.append(e)
            rec(i + 1, rem - e * w, acc)
            acc.pop()

    rec(0, d, [])
    out.sort(key=_revlex_key, reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def _index(weights: tuple, d: int) -> dict:
    return {m: i for i, m in enumerate(_monomials(weights, d))}


def monomials_of_degree(grading: Grading, d: int) -> tuple:
    """Monomials of weighted degree d in graded reverse-lexicographic order."""
    return grading.monomials(d)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def support(m: Monomial) -> frozenset:
    return frozenset(i for i, e in enumerate(m) if e)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


class Poly:
    """Sparse polynomial over an exact field, tagged with the side it lives on."""

    __slots__ = ("grading", "field", "terms", "side")

    def __init__(self, grading: Grading, terms=None, field=QQ, side: str = "Q"):
        if side not in ("Q", "R"):
            raise ValueError("side must be 'Q' or 'R'")
        self.grading = grading
        self.field = field
        self.side = side
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != grading.n or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m} for {grading.n} variables")
            c = field(c)
            if c != 0:
                clean[m] = clean.get(m, field.zero) + c
                if clean[m] == 0:
                    del clean[m]
        self.terms = clean

    @classmethod
    def monomial(cls, grading, m, coeff=1, field=QQ, side="Q"):
        return cls(grading, {tuple(m): coeff}, field, side)

    @classmethod
    def variable(cls, grading, i, field=QQ, side="Q"):
        return cls(grading, {grading.unit(i): 1}, field, side)

    @classmethod
    def constant(cls, grading, c, field=QQ, side="Q"):
        return cls(grading, {(0,) * grading.n: c}, field, side)

    @classmethod
    def zero(cls, grading, field=QQ, side="Q"):
        return cls(grading, {}, field, side)

    def _like(self, terms, side=None):
        p = Poly.__new__(Poly)
        p.grading, p.field, p.side = self.grading, self.field, side or self.side
        p.terms = {m: c for m, c in terms.items() if c != 0}
        return p

    def on_side(self, side: str) -> "Poly":
        return self._like(self.terms, side)

    def dual(self) -> "Poly":
        """Same exponents, other side of the pairing."""
        return self.on_side("R" if self.side == "Q" else "Q")

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {self.grading.degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        ds = self.degrees()
        if len(ds) != 1:
            if not ds:
                raise ValueError("the zero polynomial has no degree")
            raise ValueError(f"polynomial {self} is not homogeneous (degrees {sorted(ds)})")
        return next(iter(ds))

    def coefficient(self, m):
        return self.terms.get(tuple(m), self.field.zero)

    def _check(self, other):
        if self.grading != other.grading:
            raise ValueError("polynomials live in different rings")
        if self.field != other.field:
            raise ValueError("polynomials live over different fields")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.grading, other, self.field, self.side)
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, self.field.zero) + c
        return self._like(t)

    __radd__ = __add__

    def __neg__(self):
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = self.field(c)
        return self._like({m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        t = {}
        zero = self.field.zero
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                t[m] = t.get(m, zero) + c1 * c2
        return self._like(t)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        out = Poly.constant(self.grading, 1, self.field, self.side)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.grading == other.grading and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.grading, frozenset(self.terms.items())))

    def coords(self, d: int) -> list:
        idx = self.grading.index(d)
        v = [self.field.zero] * len(idx)
        for m, c in self.terms.items():
            if m not in idx:
                raise ValueError(f"term {m} is not of degree {d}")
            v[idx[m]] = c
        return v

    @classmethod
    def from_coords(cls, grading, d, vec, field=QQ, side="Q"):
        mons = grading.monomials(d)
        return cls(grading, {m: c for m, c in zip(mons, vec) if c != 0}, field, side)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: (-self.grading.degree(mc[0]), _revlex_key(mc[0])), reverse=False)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly[{self.side}]({format_poly(self)})"


def contract(f: Poly, F: Poly) -> Poly:
    """Contraction action of ``f`` in Q on ``F`` in R."""
    if f.side != "Q" or F.side != "R":
        raise ValueError("contract expects an operator from Q and a dual form from R")
    f._check(F)
    t = {}
    zero = F.field.zero
    for m, a in f.terms.items():
        for M, b in F.terms.items():
            if divides(m, M):
                r = mono_div(M, m)
                t[r] = t.get(r, zero) + a * b
    return F._like(t)


def eval_at_zero(F: Poly):
    return F.coefficient((0,) * F.grading.n)


def dual_monomial(m: Monomial) -> Monomial:
    """The dual of x^a is X^a: same exponents, other side."""
    return tuple(m)


def substitute(f: Poly, images, target: Grading = None) -> Poly:
    """Ring homomorphism sending variable i of ``f`` to ``images[i]``."""
    if len(images) != f.grading.n:
        raise ValueError("need one image per variable")
    if target is None:
        target = images[0].grading if images else f.grading
    out = Poly.zero(target, f.field, f.side)
    powers = [dict() for _ in images]
    for m, c in f.terms.items():
        term = Poly.constant(target, c, f.field, f.side)
        for i, e in enumerate(m):
            if e:
                if e not in powers[i]:
                    powers[i][e] = images[i].on_side(f.side) ** e
                term = term * powers[i][e]
        out = out + term
    return out


def to_differential(F: Poly) -> Poly:
    """Rewrite a contraction-convention form for the differentiation action (char 0)."""
    return F._like({m: c / math.prod(math.factorial(e) for e in m) for m, c in F.terms.items()})


def from_differential(F: Poly) -> Poly:
    return F._like({m: c * math.prod(math.factorial(e) for e in m) for m, c in F.terms.items()})


def format_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    names = [s.upper() if p.side == "R" else s for s in p.grading.names]
    parts = []
    for m, c in sorted(p.terms.items(), key=lambda mc: (-p.grading.degree(mc[0]),) + tuple(-e for e in mc[0])):
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        cv = c if isinstance(c, Fraction) else Fraction(int(c))
        neg = cv < 0
        a = -cv if neg else cv
        cs = str(a)
        if factors:
            body = "*".join(factors) if a == 1 else cs + "*" + "*".join(factors)
        else:
            body = cs
        parts.append(("- " if neg else "+ ") + body)
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


class PolyParseError(ValueError):
    def __init__(self, message, position=None):
        self.position = position
        where = f" at column {position + 1}" if position is not None else ""
        super().__init__(f"{message}{where}")


def _tokenize(text):
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("num", int(text[i:j]), i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("name", text[i:j], i))
            i = j
        elif ch in "+-*^/()":
            toks.append((ch, ch, i))
            i += 1
        else:
            raise PolyParseError(f"unexpected character '{ch}'", i)
    toks.append(("end", None, len(text)))
    return toks


def parse_poly(text: str, grading: Grading, field=QQ, side: str = "Q") -> Poly:
    """Parse e.g. ``X^2*Y - 3/2*Y^2*Z``. Variable names match case-insensitively."""
    toks = _tokenize(text)
    pos = [0]
    lookup = {name.lower(): i for i, name in enumerate(grading.names)}

    def peek():
        return toks[pos[0]]

    def take(kind=None):
        t = toks[pos[0]]
        if kind and t[0] != kind:
            raise PolyParseError(f"expected {kind}, found {t[1]!r}", t[2])
        pos[0] += 1
        return t

    def expr():
        sign = 1
        if peek()[0] in "+-":
            sign = -1 if take()[0] == "-" else 1
        acc = term().scale(sign)
        while peek()[0] in ("+", "-"):
            op = take()[0]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = factor()
        while peek()[0] == "*":
            take()
            acc = acc * factor()
        return acc

    def factor():
        base = atom()
        if peek()[0] == "^":
            take()
            t = take("num")
            base = base ** t[1]
        return base

    def atom():
        t = peek()
        if t[0] == "num":
            take()
            val = Fraction(t[1])
            if peek()[0] == "/":
                take()
                d = take("num")
                if d[1] == 0:
                    raise PolyParseError("zero denominator", d[2])
                val = Fraction(t[1], d[1])
            return Poly.constant(grading, field(val), field, side)
        if t[0] == "name":
            take()
            key = t[1].lower()
            if key not in lookup:
                raise PolyParseError(f"unknown variable '{t[1]}'", t[2])
            return Poly.variable(grading, lookup[key], field, side)
        if t[0] == "(":
            take()
            e = expr()
            take(")")
            return e
        if t[0] == "-":
            take()
            return -atom()
        raise PolyParseError(f"unexpected {t[1]!r}", t[2])

    if peek()[0] == "end":
        raise PolyParseError("empty polynomial", 0)
    result = expr()
    if peek()[0] != "end":
        t = peek()
        raise PolyParseError(f"unexpected {t[1]!r}", t[2])
    return result
