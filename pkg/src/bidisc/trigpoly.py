"""Finitely supported Fourier series on T^2 with exact coefficients."""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Iterator, Mapping

from .exact import GaussianRational

Index = tuple[int, int]


class TrigPoly:
    """sum over alpha of c_alpha z1^alpha1 z2^alpha2, alpha in Z^2."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[Index, object] | None = None):
        c = {}
        for k, v in (coeffs or {}).items():
            g = GaussianRational.coerce(v)
            if g:
                c[(int(k[0]), int(k[1]))] = g
        object.__setattr__(self, "_c", c)

    def __setattr__(self, name, value):
        raise AttributeError("TrigPoly is immutable")

    @classmethod
    def monomial(cls, a1: int, a2: int, c=1) -> "TrigPoly":
        return cls({(a1, a2): c})

    @classmethod
    def linear(cls, c1, c2) -> "TrigPoly":
        """c1 z1 + c2 z2."""
        return cls({(1, 0): c1, (0, 1): c2})

    def __getitem__(self, k: Index) -> GaussianRational:
        return self._c.get(k, GaussianRational(0))

    def support(self) -> set[Index]:
        return set(self._c)

    def items(self) -> Iterator[tuple[Index, GaussianRational]]:
        return iter(sorted(self._c.items()))

    def __len__(self) -> int:
        return len(self._c)

    def __add__(self, other: "TrigPoly") -> "TrigPoly":
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, GaussianRational(0)) + v
        return TrigPoly(out)

    def __neg__(self) -> "TrigPoly":
        return TrigPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other: "TrigPoly") -> "TrigPoly":
        return self + (-other)

    def __mul__(self, other) -> "TrigPoly":
        if not isinstance(other, TrigPoly):
            g = GaussianRational.coerce(other)
            return TrigPoly({k: v * g for k, v in self._c.items()})
        out: dict[Index, GaussianRational] = {}
        for (a1, a2), u in self._c.items():
            for (b1, b2), v in other._c.items():
                k = (a1 + b1, a2 + b2)
                out[k] = out.get(k, GaussianRational(0)) + u * v
        return TrigPoly(out)

    __rmul__ = __mul__

    def conjugate(self) -> "TrigPoly":
        """Pointwise complex conjugate on T^2: conj(z^alpha) = z^(-alpha)."""
        return TrigPoly({(-a1, -a2): v.conjugate() for (a1, a2), v in self._c.items()})

    def abs2(self) -> "TrigPoly":
        return self * self.conjugate()

    def inner(self, other: "TrigPoly") -> GaussianRational:
        """L^2(T^2) inner product <self, other>."""
        acc = GaussianRational(0)
        for k, v in self._c.items():
            if k in other._c:
                acc = acc + v * other._c[k].conjugate()
        return acc

    def l2_norm_sq(self) -> Fraction:
        return sum((v.abs2() for v in self._c.values()), Fraction(0))

    def __call__(self, z1: complex, z2: complex) -> complex:
        return sum(complex(v) * z1 ** a1 * z2 ** a2 for (a1, a2), v in self._c.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        if not self._c:
            return "TrigPoly(0)"
        return "TrigPoly(" + " + ".join(f"{v}*z^{k}" for k, v in self.items()) + ")"


def riesz_project(t: TrigPoly) -> TrigPoly:
    """Keep the coefficients with alpha1 >= 0 and alpha2 >= 0."""
    return TrigPoly({k: v for k, v in t.items() if k[0] >= 0 and k[1] >= 0})


def p1_project(t: TrigPoly) -> TrigPoly:
    """Keep the coefficients on the line alpha1 + alpha2 = 1."""
    return TrigPoly({k: v for k, v in t.items() if k[0] + k[1] == 1})


def p1_project_numeric(f, z1: complex, z2: complex, n: int = 64) -> complex:
    """P1 f(z) as the mean of f(e^{it} z1, e^{it} z2) e^{-it} over t.

    Exact (up to rounding) for trigonometric polynomials whose total degree
    a1 + a2 stays below n - 1 in absolute value.
    """
    acc = 0j
    for k in range(n):
        w = cmath.exp(2j * cmath.pi * k / n)
        acc += f(w * z1, w * z2) / w
    return acc / n


def verify_witness_projection(s) -> bool:
    """With g = z1 + s z2 and x = s^2, check P(|g|^2 g) = (1+2x) z1 + s(2+x) z2.

    The right-hand side is (1+2x)(z1 + y z2) with y = s(2+x)/(1+2x).
    """
    s = Fraction(s)
    x = s * s
    g = TrigPoly.linear(1, s)
    lhs = riesz_project(g.abs2() * g)
    rhs = TrigPoly.linear(1 + 2 * x, s * (2 + x))
    return lhs == rhs and p1_project(lhs) == lhs


verify_lemma_xy = verify_witness_projection
