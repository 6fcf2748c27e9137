"""Admissible Wirtinger derivative pairs of harmonic self-maps of the disc.

A pair (alpha, beta) = (df(0), dbar f(0)) of a harmonic f: D -> D with
f(0) = 0 exists if and only if ||alpha z1 + beta z2||_{(H^1(T^2))*} <= 1.
Two closed-form tests bracket that condition:

    necessary:   (|alpha| + |beta|) / 2 <= 2/pi
    sufficient:  ((|alpha|^4 + 4|alpha beta|^2 + |beta|^4) / 6)^(1/4) <= 2/pi
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .dual import hq_dual_norm
from .errors import ExactBorderline, NotFound
from .norms import LinearForm, hp_norm
from .trigpoly import TrigPoly, riesz_project

TWO_OVER_PI = 2 / math.pi
BORDERLINE_TOL = 1e-7
_MARGIN_SNAP = 1e-14


class Verdict(str, Enum):
    NOT_ADMISSIBLE = "NOT_ADMISSIBLE"
    ADMISSIBLE_BY_SUFFICIENT = "ADMISSIBLE_BY_SUFFICIENT"
    ADMISSIBLE_BY_EXACT = "ADMISSIBLE_BY_EXACT"
    NOT_ADMISSIBLE_BY_EXACT = "NOT_ADMISSIBLE_BY_EXACT"
    INDETERMINATE = "INDETERMINATE"

    @property
    def admissible(self) -> bool | None:
        if self in (Verdict.ADMISSIBLE_BY_SUFFICIENT, Verdict.ADMISSIBLE_BY_EXACT):
            return True
        if self is Verdict.INDETERMINATE:
            return None
        return False


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    necessary_margin: float
    sufficient_margin: float
    dual_norm: float | None = None

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "necessary_margin": self.necessary_margin,
            "sufficient_margin": self.sufficient_margin,
            "dual_norm": self.dual_norm,
        }


def _snap(m: float) -> float:
    # rounding noise on the boundary curve, e.g. alpha = beta = 2/pi
    return 0.0 if abs(m) <= _MARGIN_SNAP else m


def necessary_margin(alpha: complex, beta: complex) -> float:
    return _snap((abs(alpha) + abs(beta)) / 2 - TWO_OVER_PI)


def sufficient_margin(alpha: complex, beta: complex) -> float:
    a, b = abs(alpha), abs(beta)
    return _snap(((a ** 4 + 4 * (a * b) ** 2 + b ** 4) / 6) ** 0.25 - TWO_OVER_PI)


def exact_dual_norm(alpha: complex, beta: complex) -> float:
    """||alpha z1 + beta z2||_{(H^1)*} = M * ||phi_y||_{(H^1)*}."""
    M, y = LinearForm(alpha, beta).canonical()
    if M == 0:
        return 0.0
    return M * hq_dual_norm(1.0, y).value


def classify(
    alpha: complex,
    beta: complex,
    resolve_exact: bool = False,
    tolerance: float = BORDERLINE_TOL,
) -> Classification:
    nec = necessary_margin(alpha, beta)
    suf = sufficient_margin(alpha, beta)
    if nec > 0:
        return Classification(Verdict.NOT_ADMISSIBLE, nec, suf)
    if suf <= 0:
        return Classification(Verdict.ADMISSIBLE_BY_SUFFICIENT, nec, suf)
    if not resolve_exact:
        return Classification(Verdict.INDETERMINATE, nec, suf)
    d = exact_dual_norm(alpha, beta)
    if abs(d - 1) < tolerance:
        raise ExactBorderline(Classification(Verdict.INDETERMINATE, nec, suf, d))
    verdict = Verdict.ADMISSIBLE_BY_EXACT if d <= 1 else Verdict.NOT_ADMISSIBLE_BY_EXACT
    return Classification(verdict, nec, suf, d)


def extremal_map(c: complex, z: complex) -> complex:
    """f(z) = c Arg((i - z)/(i + z)); harmonic, f(0) = 0, df(0) = dbar f(0) = c."""
    if abs(z) >= 1:
        raise ValueError("z must lie in the open unit disc")
    return c * cmath.phase((1j - z) / (1j + z))


def extremal_map_derivatives(c: complex) -> tuple[complex, complex]:
    """(df(0), dbar f(0)) of the extremal map, in closed form."""
    return c, c


def disc_sample(n: int = 100_000, radius: float = 0.999) -> np.ndarray:
    """Deterministic sunflower (golden-angle) points filling |z| <= radius."""
    k = np.arange(n)
    r = radius * np.sqrt((k + 0.5) / n)
    theta = k * math.pi * (3 - math.sqrt(5))
    return r * np.exp(1j * theta)


def extremal_sup(c: complex, n: int = 100_000, radius: float = 0.999) -> float:
    """max |f| of the extremal map over disc_sample(n, radius)."""
    z = disc_sample(n, radius)
    return float(np.max(np.abs(c * np.angle((1j - z) / (1j + z)))))


@dataclass(frozen=True)
class CounterexampleFamily:
    """psi = z2 (1 - eps z1 conj(z2))^2 / |1 - eps z1 conj(z2)|^2 and its projection."""

    epsilon: float
    p: float
    phi: LinearForm
    psi_sup_norm: float = 1.0

    @classmethod
    def build(cls, epsilon: float, p: float) -> "CounterexampleFamily":
        if not 0 < epsilon < 1:
            raise ValueError("epsilon must lie in (0, 1)")
        return cls(epsilon, p, LinearForm(-epsilon, 1 - epsilon ** 2))

    def expansion_valid(self) -> bool:
        return self.epsilon <= 1 - self.epsilon ** 2


def psi_value(eps: float, z1: complex, z2: complex) -> complex:
    w = 1 - eps * z1 * z2.conjugate()
    return z2 * w * w / abs(w) ** 2


def psi_expansion(eps, terms: int) -> TrigPoly:
    """Truncation of z2(-eps z1 conj(z2) + (1-eps^2) sum_j eps^j (conj(z1) z2)^j)."""
    eps = Fraction(eps)
    coeffs = {(1, 0): -eps}
    for j in range(terms):
        coeffs[(-j, j + 1)] = (1 - eps * eps) * eps ** j
    return TrigPoly(coeffs)


def psi_projection(eps, terms: int = 20) -> TrigPoly:
    return riesz_project(psi_expansion(eps, terms))


def counterexample_norm(p: float, eps: float) -> float:
    """||-eps z1 + (1-eps^2) z2||_{H^p}."""
    if not 0 < eps < 1 or eps / (1 - eps ** 2) >= 1:
        raise ValueError("need 0 < eps and eps/(1-eps^2) < 1")
    return hp_norm(LinearForm(-eps, 1 - eps ** 2), p).value


def sharpness_search(
    p: float, eps_max: float = 0.5, n: int = 500, margin: float = 1e-6
) -> tuple[float, float]:
    """Find eps in (0, eps_max] with counterexample_norm(p, eps) > 1 + margin.

    Since the projected psi has sup norm 1, such an eps gives a form whose
    H^p norm exceeds its (H^1)* norm.  Returns the best eps on the scan.
    """
    eps_grid = eps_max * np.arange(1, n + 1) / n
    norms = np.array([counterexample_norm(p, float(e)) for e in eps_grid])
    k = int(np.argmax(norms))
    if norms[k] <= 1 + margin:
        raise NotFound(f"no eps in (0, {eps_max}] gives norm > 1 for p={p}")
    return float(eps_grid[k]), float(norms[k])


@dataclass(frozen=True)
class RegionPoint:
    alpha_abs: float
    beta_abs: float
    classification: Classification
    dual_norm: float
    borderline: bool = False


def region_grid(n: int = 50, amax: float = 0.8, tolerance: float = BORDERLINE_TOL) -> list[RegionPoint]:
    """Classify an n x n grid of (|alpha|, |beta|) in [0, amax]^2, exactly resolved.

    The dual norm is computed at every point, including those already
    decided by the closed-form tests, so the criteria can be compared.
    """
    vals = np.linspace(0.0, amax, n)
    out = []
    for a in vals:
        for b in vals:
            a, b = float(a), float(b)
            d = exact_dual_norm(a, b)
            try:
                cl = classify(a, b, resolve_exact=True, tolerance=tolerance)
                out.append(RegionPoint(a, b, cl, d))
            except ExactBorderline as e:
                out.append(RegionPoint(a, b, e.classification, d, borderline=True))
    return out


def region_violations(points: list[RegionPoint], tol: float = 1e-7) -> list[str]:
    """Points breaking sufficient => exact-admissible or exact => necessary."""
    bad = []
    for pt in points:
        c = pt.classification
        if c.sufficient_margin <= 0 and pt.dual_norm > 1 + tol:
            bad.append(f"sufficient but dual norm {pt.dual_norm} at ({pt.alpha_abs}, {pt.beta_abs})")
        if pt.dual_norm <= 1 and c.necessary_margin > tol:
            bad.append(f"dual norm <= 1 but necessary fails at ({pt.alpha_abs}, {pt.beta_abs})")
    return bad


def diagonal_threshold() -> float:
    """The t at which t * ||z1 + z2||_{(H^1)*} crosses 1."""
    return 1 / hq_dual_norm(1.0, 1.0).value
