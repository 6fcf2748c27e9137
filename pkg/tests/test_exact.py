from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bidisc.errors import InexactDivision, NonzeroRemainder
from bidisc.exact import (
    GaussianRational,
    PiExt,
    RatPoly,
    binom_exact,
    fraction_str,
    piext_arith,
    poly_arith,
    poly_divide_exact,
    sign_pattern,
)

fractions = st.builds(Fraction, st.integers(-99, 99), st.integers(1, 50))
polys = st.lists(fractions, max_size=6).map(RatPoly)
nonzero_polys = st.builds(
    lambda cs, lead: RatPoly(cs + [lead]),
    st.lists(fractions, max_size=4),
    fractions.filter(bool),
)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == RatPoly()
    assert a * 1 == a


@settings(max_examples=60, deadline=None)
@given(polys, polys, fractions)
def test_evaluation_is_a_homomorphism(a, b, r):
    assert (a * b)(r) == a(r) * b(r)
    assert (a + b)(r) == a(r) + b(r)
    assert a.compose(b)(r) == a(b(r))


@settings(max_examples=60, deadline=None)
@given(polys, nonzero_polys)
def test_divmod_reconstructs(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=40, deadline=None)
@given(polys, nonzero_polys)
def test_divide_exact_recovers_factor(a, b):
    assert poly_divide_exact(a * b, b) == a


def test_divide_exact_examples():
    x = RatPoly.x()
    assert poly_divide_exact(x * x - 1, x - 1) == x + 1
    with pytest.raises(NonzeroRemainder) as e:
        poly_divide_exact(x * x + 1, x - 1)
    assert e.value.remainder == RatPoly([2])
    with pytest.raises(ZeroDivisionError):
        poly_divide_exact(x, RatPoly())


def test_degree_and_trim():
    assert RatPoly().degree == -1
    assert RatPoly([1, 2, 0, 0]).degree == 1
    assert RatPoly([0, 0, 3]).leading == 3
    assert RatPoly.monomial(4, Fraction(1, 2))[4] == Fraction(1, 2)


def test_pow_and_poly_arith():
    x = RatPoly.x()
    p = (1 + x) ** 5
    assert [int(c) for c in p.coeffs] == [1, 5, 10, 10, 5, 1]
    assert poly_arith(x, None, "pow", 3) == x * x * x
    assert poly_arith(x, x, "sub") == RatPoly()
    with pytest.raises(ValueError):
        poly_arith(x, x, "frobnicate")
    with pytest.raises(ValueError):
        x ** -1


def test_float_evaluation():
    p = RatPoly([1, Fraction(1, 3)])
    assert p(Fraction(3)) == 2
    assert isinstance(p(0.5), float)
    assert p(0.5) == pytest.approx(1 + 1 / 6)


def test_derivative():
    x = RatPoly.x()
    assert (x ** 3 + 2 * x).derivative() == 3 * x * x + 2


def test_sign_pattern_and_fraction_str():
    assert sign_pattern(RatPoly([0, -1, 2])) == ["0", "-", "+"]
    assert fraction_str(Fraction(5, 768)) == "5/768"
    assert fraction_str(Fraction(4)) == "4"


def test_immutability():
    p = RatPoly([1])
    with pytest.raises(AttributeError):
        p.coeffs = ()


def test_piext_cancellation():
    u = PiExt.inv_pi()
    a = PiExt([1]) + 3 * u
    assert (a * u) / u == a
    assert (a - 3 * u).is_rational()
    assert (a - 3 * u).rational_value() == 1
    assert float(u) == pytest.approx(0.3183098861837907)
    assert piext_arith(a, a, "sub") == PiExt()


def test_piext_inexact_division():
    u = PiExt.inv_pi()
    with pytest.raises(InexactDivision):
        PiExt([1]) / (1 + u)
    with pytest.raises(ZeroDivisionError):
        u / PiExt()
    with pytest.raises(ValueError):
        (1 + u).rational_value()


def test_piext_json():
    assert (PiExt([Fraction(1, 2)]) + PiExt.inv_pi(-4)).to_json() == ["1/2", "-4"]


def test_gaussian_rational():
    z = GaussianRational(1, 2)
    w = GaussianRational(Fraction(1, 2), -1)
    assert z * w == GaussianRational(Fraction(5, 2), 0)
    assert z.conjugate() == GaussianRational(1, -2)
    assert z.abs2() == 5
    assert complex(z) == 1 + 2j
    assert not GaussianRational(0)


def test_binom_exact():
    assert binom_exact(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binom_exact(5, 2) == 10
    assert binom_exact(3, 5) == 0
    assert binom_exact(Fraction(1, 2), 0) == 1
