"""Dual norms ||phi_y||_{(H^q)*} of phi_y = z1 + y z2, 0 <= y <= 1.

For linear forms the supremum defining the dual norm may be taken over
g = z1 + t z2 with t >= 0, so

    ||phi_y||_{(H^q)*} = sup_{t >= 0} (1 + y t) / ||z1 + t z2||_q.

For q = 4 the maximizer is explicit: t = sqrt(x) where
y = sqrt(x)(2+x)/(1+2x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import numpy as np

from .certificates import F_TOP, build_F
from .errors import NoConvergence
from .exact import RatPoly
from .norms import LinearForm, central_binomial, hp_norm

SCAN_T_MAX = 4.0
SCAN_POINTS = 4097
GOLDEN = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class DualWitness:
    y: float
    value: float
    error_bound: float
    g_coeffs: tuple[float, float]
    x: float | None = None
    t_star: float | None = None
    q: float = 4.0


def witness_y_of_x(x: float) -> float:
    s = math.sqrt(x)
    return s * (2 + x) / (1 + 2 * x)


def x_from_y(y: float, tol: float = 1e-15) -> float:
    """The x in [0, 1] with sqrt(x)(2+x)/(1+2x) = y, by bisection in sqrt(x)."""
    if not 0 <= y <= 1:
        raise ValueError("y must lie in [0, 1]")
    if y in (0, 1):
        return float(y)
    lo, hi = 0.0, 1.0
    for _ in range(200):
        s = 0.5 * (lo + hi)
        ys = s * (2 + s * s) / (1 + 2 * s * s)
        if abs(ys - y) < tol or s in (lo, hi):
            return s * s
        if ys < y:
            lo = s
        else:
            hi = s
    return s * s


def h4_dual_norm(y: float) -> DualWitness:
    """Closed form for the (H^4)* norm of phi_y.

    (1 + sqrt(x) y) / (1+4x+x^2)^(1/4) is <g, phi_y>/||g||_4 for the witness
    g = z1 + sqrt(x) z2; it equals (1+4x+x^2)^(3/4)/(1+2x) when y = y(x).
    """
    x = x_from_y(y)
    s = math.sqrt(x)
    w = 1 + 4 * x + x * x
    v_witness = (1 + s * y) / w ** 0.25
    v_closed = w ** 0.75 / (1 + 2 * x)
    gap = abs(v_witness - v_closed)
    if gap > 1e-12:
        raise NoConvergence(f"closed forms disagree by {gap:.3g} at y={y}")
    return DualWitness(y, v_witness, gap, (1.0, s), x=x, t_star=s, q=4.0)


def golden_max(f: Callable[[float], float], a: float, b: float, tol: float = 1e-7):
    """Golden-section search for a maximum of f on [a, b]; returns (t, f(t))."""
    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN * (b - a)
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


@lru_cache(maxsize=32)
def _scan_table(q: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    ts = np.linspace(0.0, SCAN_T_MAX, SCAN_POINTS)
    res = [hp_norm(LinearForm(1.0, float(t)), q) for t in ts]
    return ts, np.array([r.value for r in res]), np.array([r.error_bound for r in res])


@lru_cache(maxsize=4096)
def hq_dual_norm(q: float, y: float, tol: float = 1e-8) -> DualWitness:
    """(H^q)* norm of phi_y for 1 <= q <= 2, by scan plus golden refinement.

    The objective tends to y <= 1 as t -> infinity while its value at t = 0
    is 1, and its value at t exceeds the one at 1/t for t <= 1, so the
    maximum lies in [0, 1] and the scan range [0, 4] is ample.
    """
    if not 1 <= q <= 2:
        raise ValueError("q must lie in [1, 2]")
    if not 0 <= y <= 1:
        raise ValueError("y must lie in [0, 1]")
    ts, norms, errs = _scan_table(float(q))
    obj = (1 + y * ts) / norms
    k = int(np.argmax(obj))
    best_t, best_v = float(ts[k]), float(obj[k])
    best_err = float(errs[k] / norms[k]) * best_v

    def f(t: float) -> float:
        return (1 + y * t) / hp_norm(LinearForm(1.0, t), q).value

    lo, hi = float(ts[max(k - 1, 0)]), float(ts[min(k + 1, len(ts) - 1)])
    t_ref, v_ref = golden_max(f, lo, hi, tol=min(1e-6, math.sqrt(tol) / 10))
    if v_ref > best_v:
        r = hp_norm(LinearForm(1.0, t_ref), q)
        best_t, best_v = t_ref, v_ref
        best_err = r.error_bound / r.value * best_v
    # a flat maximum: the gap to the bracket ends bounds the refinement error
    h = min(1e-6, math.sqrt(tol) / 10)
    edge = max(abs(best_v - f(min(best_t + h, hi))), abs(best_v - f(max(best_t - h, lo))))
    err = best_err + edge
    if err > tol:
        raise NoConvergence(f"dual norm for q={q}, y={y} has error {err:.3g}")
    return DualWitness(y, best_v, err, (1.0, best_t), t_star=best_t, q=float(q))


def ratio_curve(y: float) -> float:
    """||phi_y||_{(H^1)*} / ||phi_y||_{H^4}."""
    return hq_dual_norm(1.0, y).value / hp_norm(LinearForm.phi_y(y), 4).value


def flipped_ratio(y: float) -> float:
    """||phi_y||_{(H^4)*} / ||phi_y||_{H^1}, which has the same extreme values."""
    return h4_dual_norm(y).value / hp_norm(LinearForm.phi_y(y), 1).value


def factorized_ratio(y: float, F: RatPoly | None = None) -> tuple[float, float]:
    """The two factors (H^4)*-norm / F(y) and F(y) / ||phi_y||_{H^1}."""
    F = build_F() if F is None else F
    Fy = F(float(y))
    return h4_dual_norm(y).value / Fy, Fy / hp_norm(LinearForm.phi_y(y), 1).value


def upper_ratio_bound() -> float:
    """pi / (2 * 6^(1/4))."""
    return math.pi / (2 * 6 ** 0.25)


def question_bound(q: float) -> float:
    """2 C(q,q/2)^(-1/q) C(4/q,2/q)^(-q/4), the ratio's value at y = 1."""
    return 2 * central_binomial(q) ** (-1 / q) * central_binomial(4 / q) ** (-q / 4)


def question_ratio(q: float, y: float) -> float:
    return hq_dual_norm(q, y).value / hp_norm(LinearForm.phi_y(y), 4 / q).value


@dataclass(frozen=True)
class MonotoneReport:
    increasing: bool
    min_difference: float
    argmin_y: float
    grid: int
    spacing: str


def monotone_F_check(
    c: Fraction | None = F_TOP,
    grid: int = 1000,
    *,
    numerator: RatPoly | None = None,
    spacing: str = "xi",
    tolerance: float = 1e-12,
) -> MonotoneReport:
    """Check that numerator(y) / ||phi_y||_{H^1} increases on [0, 1].

    The numerator defaults to 1 + y^2/4 + y^4/64 + y^6/256 + c y^8.  With
    spacing="xi" the grid is uniform in xi = y^2; "y" makes it uniform in y.
    """
    if grid < 100:
        raise ValueError("grid must have at least 100 points")
    if numerator is None:
        numerator = build_F(Fraction(c))
    u = np.linspace(0.0, 1.0, grid)
    if spacing == "xi":
        ys = np.sqrt(u)
    elif spacing == "y":
        ys = u
    else:
        raise ValueError("spacing must be 'xi' or 'y'")
    vals = np.array(
        [
            numerator(float(y)) / (hp_norm(LinearForm.phi_y(float(y)), 1).value if y else 1.0)
            for y in ys
        ]
    )
    d = np.diff(vals)
    k = int(np.argmin(d))
    return MonotoneReport(bool(d[k] >= -tolerance), float(d[k]), float(ys[k + 1]), grid, spacing)
