from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gorsum.scalars import GF, QQ, FieldMismatchError, PrimeFieldElement, field_from_spec, is_prime

primes = st.sampled_from([2, 3, 5, 7, 11, 101])


@given(primes, st.integers(), st.integers(), st.integers())
def test_prime_field_ring_axioms(p, a, b, c):
    F = GF(p)
    x, y, z = F(a), F(b), F(c)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    assert (x * y).value == (a * b) % p


@given(primes, st.integers())
def test_prime_field_inverse(p, a):
    x = GF(p)(a)
    if a % p == 0:
        with pytest.raises(ZeroDivisionError):
            x.inverse()
    else:
        assert x * x.inverse() == 1
        assert x / x == GF(p).one


@given(st.integers(1, 50), st.integers(1, 50))
def test_fraction_coerces_into_prime_field(n, d):
    F = GF(101)
    assert F(Fraction(n, d)) * d == n


def test_mixing_moduli_is_an_error():
    with pytest.raises(FieldMismatchError):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(FieldMismatchError):
        QQ(GF(5)(2))


def test_fraction_and_fp_interoperate():
    assert Fraction(1, 2) + GF(7)(1) == GF(7)(Fraction(3, 2))
    assert isinstance(2 * GF(7)(3), PrimeFieldElement)


def test_field_specs():
    assert field_from_spec("rat") is QQ
    assert field_from_spec("fp:7") == GF(7)
    for bad in ("fp:8", "fp:x", "real"):
        with pytest.raises(ValueError):
            field_from_spec(bad)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
