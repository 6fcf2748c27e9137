"""The full check suite behind ``bidisc verify-all``."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import certificates as cert
from .dual import (
    h4_dual_norm,
    hq_dual_norm,
    monotone_F_check,
    ratio_curve,
    upper_ratio_bound,
)
from .errors import BidiscError, NotFound
from .exact import RatPoly
from .norms import LinearForm, central_binomial, check_strange, hp_norm
from .schwarz import (
    counterexample_norm,
    diagonal_threshold,
    region_grid,
    region_violations,
    sharpness_search,
)
from .trigpoly import verify_witness_projection

SCHEMA = "bidisc.verify/1"


@dataclass
class CheckResult:
    name: str
    claim: str
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "claim": self.claim, "passed": self.passed, "details": self.details}


def _from_certificate(report: cert.CertificateReport, claim: str) -> CheckResult:
    details = {k: v for k, v in report.details.items() if k != "coefficients"}
    return CheckResult(report.name, claim, report.passed, details)


def check_sigma_identity(F=None) -> CheckResult:
    return _from_certificate(
        cert.verify_sigma_identity(),
        "S1''S1 - (S1')^2 equals the 7-term Laurent polynomial in 1/xi",
    )


def check_threshold(F=None) -> CheckResult:
    return _from_certificate(
        cert.verify_c_threshold(), "monotonicity threshold is exactly 5/768 in Q[1/pi]"
    )


def check_R1(F=None) -> CheckResult:
    return _from_certificate(
        cert.verify_R1(F), "R1 = (P(1)Q-Q(1)P)/(1-x)^2 has degree 46, all coefficients > 0"
    )


def check_R2(F=None) -> CheckResult:
    return _from_certificate(
        cert.verify_R2(F), "R2 = P-Q has degree 48, one sign change at x^28, R2(1) > 0"
    )


def check_central_binomial(F=None) -> CheckResult:
    worst = 0.0
    per_p = {}
    for p in (1, 2, 3, 4, 6):
        r = check_strange(p)
        n = hp_norm(LinearForm(1, 1), p).value ** p
        dev = max(r.max_deviation, abs(n - central_binomial(p)))
        per_p[str(p)] = dev
        worst = max(worst, dev)
    h1 = abs(hp_norm(LinearForm(1, 1), 1).value - 4 / math.pi)
    return CheckResult(
        "central_binomial_identities",
        "||z1+z2||_p^p = C(p,p/2) = sum C(p/2,j)^2 = (4/p) sum j C(p/2,j)^2",
        worst <= 1e-8 and h1 <= 1e-9,
        {"max_deviation_by_p": per_p, "h1_error": h1},
    )


def check_witness_projection(F=None, n: int = 50, seed: int = 20201) -> CheckResult:
    rng = random.Random(seed)
    samples = [Fraction(rng.randint(0, 997), 997) for _ in range(n)]
    failures = [str(s) for s in samples if not verify_witness_projection(s)]
    return CheckResult(
        "witness_projection",
        "P(|g|^2 g) = (1+2x) phi_y exactly for g = z1 + sqrt(x) z2",
        not failures,
        {"samples": n, "failures": failures},
    )


def check_dual_endpoints(F=None) -> CheckResult:
    e4 = abs(h4_dual_norm(1.0).value - 6 ** 0.75 / 3)
    e1 = abs(hq_dual_norm(1.0, 1.0).value - math.pi / 2)
    return CheckResult(
        "dual_endpoints",
        "||z1+z2||_(H^4)* = 6^(3/4)/3 and ||z1+z2||_(H^1)* = pi/2",
        e4 <= 1e-12 and e1 <= 1e-7,
        {"h4_error": e4, "h1_error": e1},
    )


def check_ratio_bounds(F=None, n: int = 201) -> CheckResult:
    bound = upper_ratio_bound()
    vals = [ratio_curve(k / (n - 1)) for k in range(n)]
    lo, hi = min(vals), max(vals)
    return CheckResult(
        "ratio_bounds",
        "1 <= ||phi||_(H^1)* / ||phi||_H^4 <= pi/(2*6^(1/4))",
        lo >= 1 - 1e-9 and hi <= bound + 1e-9,
        {"grid": n, "min": lo, "max": hi, "bound": bound},
    )


def check_upper_sharpness(F=None) -> CheckResult:
    r = ratio_curve(1.0)
    return CheckResult(
        "upper_bound_sharpness",
        "the ratio attains pi/(2*6^(1/4)) at phi = z1 + z2",
        abs(r - upper_ratio_bound()) <= 1e-6,
        {"ratio_at_1": r, "bound": upper_ratio_bound()},
    )


def check_monotonicity(F=None, grid: int = 1000) -> CheckResult:
    ok = monotone_F_check(cert.F_TOP, grid)
    below = monotone_F_check(cert.F_TOP - Fraction(1, 10000), grid)
    tilde = monotone_F_check(None, grid, numerator=cert.build_Ftilde())
    return CheckResult(
        "F_monotonicity",
        "F(y)/||phi_y||_H^1 increases iff the y^8 coefficient is >= 5/768",
        ok.increasing and not below.increasing and not tilde.increasing,
        {
            "c=5/768": ok.min_difference,
            "c=5/768-1e-4": below.min_difference,
            "Ftilde": tilde.min_difference,
            "grid": grid,
            "spacing": ok.spacing,
        },
    )


def check_counterexample(F=None) -> CheckResult:
    found = {}
    ok = True
    for p in (4.25, 4.5, 5, 8):
        try:
            found[str(p)] = sharpness_search(p)
        except NotFound:
            ok = False
    try:
        sharpness_search(4)
        ok = False
        p4 = "found"
    except NotFound:
        p4 = "NotFound"
    slopes = {}
    for p in (4.25, 4.5, 5, 8):
        s = (counterexample_norm(p, 0.01) - 1) / 1e-4
        slopes[str(p)] = s
        ok = ok and abs(s - (p / 4 - 1)) <= 0.05 * abs(p / 4 - 1)
    return CheckResult(
        "p_above_4_counterexample",
        "||phi||_H^p <= ||phi||_(H^1)* fails for every p > 4 and holds at p = 4",
        ok,
        {"found": {k: list(v) for k, v in found.items()}, "p=4": p4, "slopes": slopes},
    )


def check_region(F=None, n: int = 50) -> CheckResult:
    pts = region_grid(n)
    bad = region_violations(pts)
    diag = abs(diagonal_threshold() - 2 / math.pi)
    return CheckResult(
        "region_consistency",
        "sufficient => exact-admissible => necessary; diagonal threshold 2/pi",
        not bad and diag <= 1e-7,
        {"grid": n, "violations": bad[:5], "diagonal_error": diag},
    )


CHECKS: list[Callable[..., CheckResult]] = [
    check_sigma_identity,
    check_threshold,
    check_R1,
    check_R2,
    check_central_binomial,
    check_witness_projection,
    check_dual_endpoints,
    check_ratio_bounds,
    check_upper_sharpness,
    check_monotonicity,
    check_counterexample,
    check_region,
]


def run_all(F: RatPoly | None = None) -> list[CheckResult]:
    out = []
    for check in CHECKS:
        try:
            out.append(check(F))
        except BidiscError as e:
            name = check.__name__.replace("check_", "")
            if check in (check_R1, check_R2):
                name = "verify_" + name
            out.append(CheckResult(name, "raised an error", False, {"error": f"{type(e).__name__}: {e}"}))
    return out
