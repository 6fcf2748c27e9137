"""H^p(T^2) norms of linear forms c1*z1 + c2*z2.

Two independent evaluations of ||z1 + x z2||_p^p are provided:

* the binomial series  sum_j C(p/2, j)^2 x^(2j)  (Parseval), and
* the trapezoidal rule on  (1 + 2x cos t + x^2)^(p/2) dt/2pi.

At x = 1 both are replaced by the central binomial C(p, p/2) unless the
raw computation is requested explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.special import gammaln, zeta

from .errors import NoConvergence, SlowConvergence
from .exact import binom_exact

SERIES_CUTOFF = 0.9
SERIES_MAX_TERMS = 100_000
QUAD_MAX_NODES = 2 ** 23
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class NormResult:
    p: float
    value: float
    method: str  # "series" | "quadrature" | "closed_form"
    error_bound: float


@dataclass(frozen=True)
class LinearForm:
    """phi(z) = c1 z1 + c2 z2."""

    c1: complex
    c2: complex

    @classmethod
    def phi_y(cls, y: float) -> "LinearForm":
        return cls(1.0, y)

    def is_zero(self) -> bool:
        return self.c1 == 0 and self.c2 == 0

    def canonical(self) -> tuple[float, float]:
        """(M, y) with phi equivalent to M * (z1 + y z2), 0 <= y <= 1.

        Rotating each variable and swapping them leaves every H^p norm
        unchanged, so only the moduli matter.
        """
        a, b = abs(self.c1), abs(self.c2)
        M = max(a, b)
        if M == 0:
            return 0.0, 0.0
        return M, min(a, b) / M

    def __mul__(self, lam: complex) -> "LinearForm":
        return LinearForm(self.c1 * lam, self.c2 * lam)

    __rmul__ = __mul__


def _is_even_int(p: float) -> bool:
    return float(p).is_integer() and int(p) % 2 == 0


def binom_general(a, j: int) -> float:
    """C(a, j) = a(a-1)...(a-j+1)/j!.

    Computed in exact rational arithmetic (a float is converted exactly)
    and rounded once at the end.
    """
    if not isinstance(a, (int, Fraction)):
        a = Fraction(float(a))
    return float(binom_exact(a, j))


def central_binomial(p: float) -> float:
    """C(p, p/2) = Gamma(p+1) / Gamma(p/2+1)^2."""
    if p < 170:
        return math.gamma(p + 1) / math.gamma(p / 2 + 1) ** 2
    return math.exp(math.lgamma(p + 1) - 2 * math.lgamma(p / 2 + 1))


@lru_cache(maxsize=64)
def _squared_coefficients(a: float, n: int) -> np.ndarray:
    """C(a, j)^2 for j = 0..n-1 by the ratio recurrence."""
    j = np.arange(n - 1, dtype=float)
    ratios = (a - j) / (j + 1)
    c = np.concatenate(([1.0], np.cumprod(ratios)))
    return c * c


def norm_series(p: float, x: float, tol: float = 1e-15) -> NormResult:
    """||z1 + x z2||_p from the binomial series.

    Terms t_j = C(p/2,j)^2 x^(2j) satisfy t_{j+1}/t_j <= x^2 once j > p/2,
    so the tail after t_J is at most t_J x^2/(1-x^2).
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    if not 0 <= x <= 1:
        raise ValueError("x must lie in [0, 1]")
    a = p / 2
    if _is_even_int(p):
        n = int(a)
        s = math.fsum(binom_exact(n, j) ** 2 * x ** (2 * j) for j in range(n + 1))
        v = s ** (1 / p)
        return NormResult(p, v, "series", 4 * _EPS * v)
    if x > SERIES_CUTOFF:
        raise ValueError(f"series is only used for x <= {SERIES_CUTOFF}")
    r = x * x
    terms = [1.0]
    c = 1.0
    xp = 1.0
    tail = math.inf
    for j in range(SERIES_MAX_TERMS):
        c *= (a - j) / (j + 1)
        xp *= r
        t = c * c * xp
        terms.append(t)
        if j + 1 > a:
            tail = t * r / (1 - r) if r < 1 else math.inf
            if tail <= tol:
                break
    else:
        raise SlowConvergence(f"series for p={p}, x={x} did not converge")
    s = math.fsum(terms)
    v = s ** (1 / p)
    err = tail * v / (p * s) + 4 * _EPS * v * len(terms) ** 0.5
    return NormResult(p, v, "series", err)


def _integrand(p: float, x: float, theta: np.ndarray) -> np.ndarray:
    # 1 + 2x cos t + x^2 written without cancellation near t = pi, x = 1
    c = np.cos(theta / 2)
    return ((1 - x) ** 2 + 4 * x * c * c) ** (p / 2)


def norm_quadrature(
    p: float,
    x: float,
    n: int = 16,
    tol: float = 1e-12,
    closed_form_at_one: bool = True,
    max_nodes: int = QUAD_MAX_NODES,
) -> NormResult:
    """||z1 + x z2||_p by the trapezoidal rule with node doubling."""
    if p < 1:
        raise ValueError("p must be >= 1")
    if n < 16:
        raise ValueError("need at least 16 nodes")
    if not 0 <= x <= 1:
        raise ValueError("x must lie in [0, 1]")
    if x == 1 and closed_form_at_one and not _is_even_int(p):
        return NormResult(p, central_binomial(p) ** (1 / p), "closed_form", 0.0)
    N = n + (n % 2)
    theta = 2 * np.pi * np.arange(N) / N
    total = math.fsum(_integrand(p, x, theta))
    T = total / N
    while True:
        # new nodes pi(2k+1)/N come in pairs symmetric about pi
        k = np.arange(N // 2)
        total += 2 * math.fsum(_integrand(p, x, np.pi * (2 * k + 1) / N))
        N *= 2
        T_new = total / N
        diff = abs(T_new - T)
        T = T_new
        if diff <= tol * max(1.0, T):
            break
        if N >= max_nodes:
            raise NoConvergence(f"trapezoid for p={p}, x={x} stalled at {N} nodes")
    v = T ** (1 / p)
    err = (diff + 8 * _EPS * T) * v / (p * T)
    return NormResult(p, v, "quadrature", err)


def hp_norm(form: LinearForm, p: float) -> NormResult:
    """||c1 z1 + c2 z2||_{H^p(T^2)}."""
    if form.is_zero():
        raise ValueError("the zero form has no normalized norm")
    M, y = form.canonical()
    if y == 0:
        return NormResult(p, M, "closed_form", 0.0)
    if p == 4:
        v = (1 + 4 * y * y + y ** 4) ** 0.25
        return NormResult(p, M * v, "closed_form", 2 * _EPS * M * v)
    if _is_even_int(p) or y <= SERIES_CUTOFF:
        r = norm_series(p, y)
    elif y == 1:
        r = NormResult(p, central_binomial(p) ** (1 / p), "closed_form", 0.0)
    else:
        r = norm_quadrature(p, y)
    return NormResult(p, M * r.value, r.method, M * r.error_bound)


def binomial_square_sum(a: float, weighted: bool = False, J: int = 20_000) -> tuple[float, float]:
    """(sum_j C(a,j)^2 w_j, error estimate) with w_j = 1 or j.

    For non-integer a the terms decay algebraically,
    C(a,j)^2 = j^(-2a-2) (1 + a(a+1)/j + O(j^-2)) / Gamma(-a)^2,
    so the tail beyond J is replaced by the two leading Hurwitz zeta terms.
    """
    if float(a).is_integer() and a >= 0:
        n = int(a)
        terms = [binom_exact(n, j) ** 2 * (j if weighted else 1) for j in range(n + 1)]
        return float(sum(terms)), 0.0
    c2 = _squared_coefficients(float(a), J + 1)
    j = np.arange(J + 1, dtype=float)
    w = j if weighted else np.ones_like(j)
    head = math.fsum(c2 * w)
    K = math.exp(-2 * gammaln(-a))
    s = 2 * a + 2 - (1 if weighted else 0)
    lead = a * (a + 1)
    tail = K * (zeta(s, J + 1) + lead * zeta(s + 1, J + 1))
    err = K * (1 + lead * lead) * zeta(s + 2, J + 1) + 4 * _EPS * head
    return float(head + tail), float(err)


@dataclass(frozen=True)
class StrangeReport:
    p: float
    central_binomial: float
    quadrature: float
    series: float
    weighted_series: float
    max_deviation: float


def check_strange(p: float) -> StrangeReport:
    """Evaluate the four expressions for ||z1+z2||_p^p and compare them."""
    a = p / 2
    cb = central_binomial(p)
    quad = norm_quadrature(p, 1.0, closed_form_at_one=False).value ** p
    ser, _ = binomial_square_sum(a)
    wser, _ = binomial_square_sum(a, weighted=True)
    wser *= 4 / p
    vals = [cb, quad, ser, wser]
    dev = max(abs(u - v) for u in vals for v in vals)
    return StrangeReport(p, cb, quad, ser, wser, dev)
