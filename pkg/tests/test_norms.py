import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.special import ellipe

from bidisc.errors import NoConvergence
from bidisc.norms import (
    LinearForm,
    binom_general,
    binomial_square_sum,
    central_binomial,
    check_strange,
    hp_norm,
    norm_quadrature,
    norm_series,
)


def h1_elliptic(x):
    """||z1 + x z2||_1 = (2/pi)(1+x) E(4x/(1+x)^2), E with parameter m = k^2."""
    return 2 / math.pi * (1 + x) * ellipe(4 * x / (1 + x) ** 2)


def test_binom_general():
    assert binom_general(Fraction(1, 2), 2) == -1 / 8
    assert binom_general(2, 1) == 2
    assert binom_general(0.5, 3) == pytest.approx(1 / 16)


@pytest.mark.parametrize("p,expected", [(1, 4 / math.pi), (2, 2), (4, 6), (6, 20), (3, 32 / (3 * math.pi))])
def test_central_binomial(p, expected):
    assert central_binomial(p) == pytest.approx(expected, rel=1e-14)


def test_series_examples():
    assert norm_series(4, 1.0).value == pytest.approx(6 ** 0.25, rel=1e-15)
    for x in (0.1, 0.5, 0.9):
        assert norm_series(2, x).value == pytest.approx(math.sqrt(1 + x * x), rel=1e-15)
    assert norm_series(6, 1.0).value == pytest.approx(20 ** (1 / 6), rel=1e-15)


def test_series_refuses_slow_region():
    with pytest.raises(ValueError):
        norm_series(3, 0.95)


def test_quadrature_examples():
    assert norm_quadrature(1, 0.5).value == pytest.approx(norm_series(1, 0.5).value, abs=1e-9)
    assert norm_quadrature(1, 1.0).value == pytest.approx(4 / math.pi, abs=1e-15)
    assert norm_quadrature(2, 1.0).value == pytest.approx(math.sqrt(2), abs=1e-13)
    assert norm_quadrature(1, 1.0, closed_form_at_one=False).value == pytest.approx(4 / math.pi, abs=1e-9)


def test_quadrature_node_cap():
    with pytest.raises(NoConvergence):
        norm_quadrature(1, 1.0, closed_form_at_one=False, tol=1e-15, max_nodes=64)


def test_hp_norm_examples():
    assert hp_norm(LinearForm(1, 1), 1).value == pytest.approx(4 / math.pi, abs=1e-12)
    for p in (1, 2.5, 7):
        assert hp_norm(LinearForm(3, 0), p).value == 3
    assert hp_norm(LinearForm(1, 0.75), 4).value == pytest.approx((913 / 256) ** 0.25, rel=1e-15)
    assert hp_norm(LinearForm(1, 1), 6).value == pytest.approx(20 ** (1 / 6), rel=1e-15)
    with pytest.raises(ValueError):
        hp_norm(LinearForm(0, 0), 1)


@pytest.mark.parametrize("x", [0.05, 0.3, 0.5, 0.7, 0.85, 0.9])
@pytest.mark.parametrize("p", [1, 1.5, 3, 4.5])
def test_series_agrees_with_quadrature(p, x):
    assert norm_series(p, x).value == pytest.approx(norm_quadrature(p, x).value, rel=1e-11)


@pytest.mark.parametrize("x", [0.0, 0.2, 0.5, 0.8, 0.9, 0.95, 0.99, 0.999, 1.0])
def test_h1_against_elliptic_integral(x):
    v = hp_norm(LinearForm(1, x), 1).value if x else 1.0
    assert v == pytest.approx(h1_elliptic(x), abs=1e-11)


def test_monotone_in_p():
    for y in (0.3, 0.9, 0.97, 1.0):
        vals = [hp_norm(LinearForm(1, y), p).value for p in (1, 1.5, 2, 3, 4, 6)]
        assert all(a < b for a, b in zip(vals, vals[1:]))


def test_homogeneity_and_rotation_invariance():
    base = hp_norm(LinearForm(1, 0.6), 1.5).value
    lam = 2.5 * cmath.exp(0.7j)
    assert hp_norm(LinearForm(1, 0.6) * lam, 1.5).value == pytest.approx(2.5 * base, rel=1e-13)
    rotated = LinearForm(cmath.exp(1.1j), 0.6 * cmath.exp(-2.3j))
    assert hp_norm(rotated, 1.5).value == pytest.approx(base, rel=1e-13)
    assert hp_norm(LinearForm(0.6, 1), 1.5).value == pytest.approx(base, rel=1e-13)


def test_norm_against_direct_torus_average():
    # ||z1 + y z2||_p^p as a plain average over a fine grid of T^2
    n = 256
    t = 2 * np.pi * np.arange(n) / n
    z1, z2 = np.meshgrid(np.exp(1j * t), np.exp(1j * t))
    for p, y in ((1, 0.5), (3, 0.95)):
        avg = np.mean(np.abs(z1 + y * z2) ** p) ** (1 / p)
        assert hp_norm(LinearForm(1, y), p).value == pytest.approx(avg, rel=1e-9)


@pytest.mark.parametrize("p", [1, 2, 3, 4, 6])
def test_four_expressions_agree(p):
    r = check_strange(p)
    assert r.max_deviation <= 1e-8


def test_strange_integer_cases_exact():
    assert binomial_square_sum(2) == (6.0, 0.0)
    assert binomial_square_sum(1) == (2.0, 0.0)
    v, err = binomial_square_sum(0.5)
    assert abs(v - 4 / math.pi) <= max(err, 1e-12)
