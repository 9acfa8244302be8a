"""Exact scalar fields.

The rationals are represented by :class:`fractions.Fraction`. A prime field
F_p is represented by :class:`PrimeFieldElement` values carrying their modulus.
Both support the usual arithmetic operators, so the polynomial and linear
algebra layers never need to know which field they are working over.
"""

from __future__ import annotations

import math
from fractions import Fraction


class FieldMismatchError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for q in range(3, math.isqrt(n) + 1, 2):
        if n % q == 0:
            return False
    return True


class PrimeFieldElement:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise FieldMismatchError(f"cannot mix F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, bool):
            return int(other)
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            den = other.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator {other.denominator} vanishes in F_{self.p}")
            return other.numerator * pow(den, -1, self.p) % self.p
        return None

    def _make(self, v):
        return PrimeFieldElement(v, self.p)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._make(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._make(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._make(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self._make(self.value * o)

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError(f"zero has no inverse in F_{self.p}")
        return self._make(pow(self.value, -1, self.p))

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return self._make(self.value * pow(o, -1, self.p))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._make(o) / self

    def __neg__(self):
        return self._make(-self.value)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self._make(pow(self.value, e, self.p))

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.value == o

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"

    def __str__(self):
        return str(self.value)


class RationalField:
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, PrimeFieldElement):
            raise FieldMismatchError("cannot coerce an F_p element to a rational")
        return Fraction(x)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def contains(self, x) -> bool:
        return isinstance(x, Fraction)

    def spec(self) -> str:
        return "rat"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, x):
        if isinstance(x, PrimeFieldElement):
            if x.p != self.p:
                raise FieldMismatchError(f"cannot mix F_{self.p} and F_{x.p}")
            return x
        if isinstance(x, str):
            x = Fraction(x)
        return PrimeFieldElement(PrimeFieldElement(0, self.p)._other(x), self.p)

    @property
    def zero(self):
        return PrimeFieldElement(0, self.p)

    @property
    def one(self):
        return PrimeFieldElement(1, self.p)

    def contains(self, x) -> bool:
        return isinstance(x, PrimeFieldElement) and x.p == self.p

    def elements(self):
        return [PrimeFieldElement(v, self.p) for v in range(self.p)]

    def spec(self) -> str:
        return f"fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()
_prime_fields: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def field_from_spec(text: str):
    """Parse ``rat`` or ``fp:<p>``."""
    text = text.strip().lower()
    if text in ("rat", "qq", "q"):
        return QQ
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ValueError(f"bad field '{text}': expected fp:<prime>") from None
        return GF(p)
    raise ValueError(f"bad field '{text}': expected rat or fp:<prime>")
