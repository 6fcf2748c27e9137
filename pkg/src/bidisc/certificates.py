"""Exact reconstruction of the polynomial certificates behind the H^4 bound.

The ratio (dual H^4 norm / F)^4, written as a function of the witness
parameter x, is the rational function P/Q with

    P(x) = (1+2x)^28 (1+4x+x^2)^3,    Q(x) = G(x)^4,
    G(x) = (1+2x)^8 F(y(x)),          y(x)^2 = x (2+x)^2 / (1+2x)^2.

Its extremal values at x = 0 and x = 1 are certified by two polynomials:
R1 = (P(1)Q - Q(1)P)/(1-x)^2 must have positive coefficients, and
R2 = P - Q must have a sign pattern with a single change and R2(1) > 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exact import (
    PiExt,
    RatPoly,
    binom_exact,
    fraction_str,
    poly_divide_exact,
    sign_pattern,
)

F_TOP = Fraction(5, 768)

# coefficients of xi^-10 .. xi^-4 in S1'' S1 - (S1')^2
SIGMA_IDENTITY_TARGET = (
    Fraction(4),
    Fraction(2),
    Fraction(11, 32),
    Fraction(5, 64),
    Fraction(17, 2048),
    Fraction(1, 4096),
    Fraction(1, 65536),
)


@dataclass(frozen=True)
class CertificateReport:
    name: str
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "details": self.details}


def build_F(top: Fraction = F_TOP) -> RatPoly:
    """1 + y^2/4 + y^4/64 + y^6/256 + top*y^8."""
    h = Fraction(1, 2)
    head = [binom_exact(h, j) ** 2 for j in range(4)]  # 1, 1/4, 1/64, 1/256
    return RatPoly([head[0], 0, head[1], 0, head[2], 0, head[3], 0, top])


def build_Ftilde() -> RatPoly:
    """The comparison polynomial 1 + y^2/4 + y^4/64 + y^6/128."""
    return RatPoly([1, 0, Fraction(1, 4), 0, Fraction(1, 64), 0, Fraction(1, 128)])


def witness_y(s: Fraction) -> Fraction:
    """y as a function of s = sqrt(x): s(2+s^2)/(1+2s^2)."""
    return s * (2 + s * s) / (1 + 2 * s * s)


def build_G(F: RatPoly | None = None) -> RatPoly:
    """(1+2x)^(2m) F(y(x)) for an even polynomial F of degree 2m.

    With y^2 = x(2+x)^2/(1+2x)^2 each term y^(2k) becomes
    x^k (2+x)^(2k) (1+2x)^(2m-2k), so the result is a polynomial in x.
    """
    F = build_F() if F is None else F
    if any(F[k] for k in range(1, len(F), 2)):
        raise ValueError("F must be an even polynomial")
    m = max(F.degree, 0) // 2
    x = RatPoly.x()
    two_plus_x = RatPoly((2, 1))
    one_plus_2x = RatPoly((1, 2))
    G = RatPoly()
    for k in range(m + 1):
        c = F[2 * k]
        if c:
            G = G + c * x ** k * two_plus_x ** (2 * k) * one_plus_2x ** (2 * m - 2 * k)
    return G


def build_PQ(F: RatPoly | None = None) -> tuple[RatPoly, RatPoly]:
    F = build_F() if F is None else F
    G = build_G(F)
    m = max(F.degree, 0) // 2
    P = RatPoly((1, 2)) ** (4 * (2 * m) - 4) * RatPoly((1, 4, 1)) ** 3
    Q = G ** 4
    return P, Q


def _exact_values(p: RatPoly) -> list[str]:
    return [fraction_str(c) for c in p.coeffs]


def build_R1(F: RatPoly | None = None) -> RatPoly:
    P, Q = build_PQ(F)
    num = P(Fraction(1)) * Q - Q(Fraction(1)) * P
    return poly_divide_exact(num, RatPoly((1, -1)) ** 2)


def build_R2(F: RatPoly | None = None) -> RatPoly:
    P, Q = build_PQ(F)
    return P - Q


def verify_R1(F: RatPoly | None = None) -> CertificateReport:
    R1 = build_R1(F)
    signs = sign_pattern(R1)
    passed = R1.degree == 46 and len(signs) == 47 and all(s == "+" for s in signs)
    return CertificateReport(
        "verify_R1",
        passed,
        {
            "degree": R1.degree,
            "sign_pattern": "".join(signs),
            "R1(0)": fraction_str(R1(Fraction(0))),
            "min_coefficient": fraction_str(min(R1.coeffs)) if R1.coeffs else "0",
            "coefficients": _exact_values(R1),
        },
    )


def verify_R2(F: RatPoly | None = None) -> CertificateReport:
    """Certify R2 = P - Q >= 0 on [0, 1].

    R2(0) = P(0) - Q(0) = 0, so the low-order coefficients cannot all be
    strictly positive.  The certificate needs coefficients 0..27 to be
    non-negative, 28..48 to be negative and R2(1) > 0; then
    R2(x) >= x^28 R2(1) on [0, 1].
    """
    R2 = build_R2(F)
    signs = sign_pattern(R2)
    r2_at_1 = R2(Fraction(1))
    head, tail = signs[:28], signs[28:]
    passed = (
        R2.degree == 48
        and all(s in "+0" for s in head)
        and "+" in head
        and tail == ["-"] * 21
        and r2_at_1 > 0
    )
    return CertificateReport(
        "verify_R2",
        passed,
        {
            "degree": R2.degree,
            "sign_pattern": "".join(signs),
            "zero_indices": [i for i, s in enumerate(signs) if s == "0"],
            "positive_indices": [i for i, s in enumerate(signs) if s == "+"],
            "negative_indices": [i for i, s in enumerate(signs) if s == "-"],
            "R2(1)": fraction_str(r2_at_1),
            "coefficients": _exact_values(R2),
        },
    )


def sigma1_laurent() -> tuple[RatPoly, int]:
    """S1(xi) = sum_{j<4} C(1/2,j)^2 xi^(j-4) as (A, s) meaning xi^-s A(xi)."""
    h = Fraction(1, 2)
    return RatPoly([binom_exact(h, j) ** 2 for j in range(4)]), 4


def laurent_derivative(A: RatPoly, s: int) -> tuple[RatPoly, int]:
    """d/dxi of xi^-s A(xi), returned in the same (A, s) form."""
    return RatPoly.x() * A.derivative() - s * A, s + 1


def verify_sigma_identity() -> CertificateReport:
    A0, s0 = sigma1_laurent()
    A1, s1 = laurent_derivative(A0, s0)
    A2, s2 = laurent_derivative(A1, s1)
    # S1'' S1 = xi^-(s2+s0) A2 A0 and (S1')^2 = xi^-(2 s1) A1^2; both shifts are 10
    assert s2 + s0 == 2 * s1 == 10
    lhs = A2 * A0 - A1 * A1
    target = RatPoly(SIGMA_IDENTITY_TARGET)
    residual = lhs - target
    s1_at_1 = A0(Fraction(1))
    passed = residual.is_zero() and s1_at_1 == Fraction(325, 256)
    return CertificateReport(
        "verify_sigma_identity",
        passed,
        {
            "shift": 10,
            "coefficients": _exact_values(lhs),
            "residual_zero": residual.is_zero(),
            "sigma1(1)": fraction_str(s1_at_1),
            "sigma1'(1)": fraction_str(A1(Fraction(1))),
        },
    )


def threshold_parts() -> dict[str, PiExt]:
    """Exact values at xi=1 of the truncated head S1, tail S2 and derivatives.

    Only the full sums enter the tail: sum_j C(1/2,j)^2 = 4/pi and
    sum_j C(1/2,j)^2 j = (1/4)(4/pi) = 1/pi.
    """
    h = Fraction(1, 2)
    b = [binom_exact(h, j) ** 2 for j in range(4)]
    full = PiExt.inv_pi(4)
    full_weighted = PiExt.inv_pi(1)
    s1 = PiExt((sum(b),))
    ds1 = PiExt((sum(bj * (j - 4) for j, bj in enumerate(b)),))
    s2 = full - s1
    ds2 = (full_weighted - 4 * full) - ds1
    return {"S1": s1, "dS1": ds1, "S2": s2, "dS2": ds2}


def compute_c_threshold() -> PiExt:
    v = threshold_parts()
    num = v["dS1"] * v["S2"] - v["S1"] * v["dS2"]
    den = v["dS1"] + v["dS2"]
    return num / den


def verify_c_threshold() -> CertificateReport:
    v = threshold_parts()
    num = v["dS1"] * v["S2"] - v["S1"] * v["dS2"]
    den = v["dS1"] + v["dS2"]
    c = num / den
    passed = c.is_rational() and c.rational_value() == F_TOP
    return CertificateReport(
        "verify_c_threshold",
        passed,
        {
            "numerator": num.to_json(),
            "denominator": den.to_json(),
            "threshold": c.to_json(),
            **{k: val.to_json() for k, val in v.items()},
        },
    )


def all_certificates(F: RatPoly | None = None) -> list[CertificateReport]:
    return [verify_sigma_identity(), verify_c_threshold(), verify_R1(F), verify_R2(F)]
