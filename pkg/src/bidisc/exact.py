"""Exact arithmetic: dense rational polynomials, Q[1/pi], Gaussian rationals.

Rationals are :class:`fractions.Fraction` throughout.  Every type here is
immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

from .errors import InexactDivision, NonzeroRemainder

Rational = Fraction
Scalar = Union[int, Fraction]


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, _RationalABC)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"expected an exact rational, got {type(v).__name__}")


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [_frac(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class RatPoly:
    """Dense univariate polynomial with Fraction coefficients.

    ``coeffs[k]`` is the coefficient of x**k.  The zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    @classmethod
    def x(cls) -> "RatPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: Scalar) -> "RatPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "RatPoly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    @staticmethod
    def _coerce(other) -> "RatPoly":
        if isinstance(other, RatPoly):
            return other
        return RatPoly((_frac(other),))

    def __add__(self, other):
        try:
            b = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = max(len(self.coeffs), len(b.coeffs))
        return RatPoly(self[k] + b[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        try:
            b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatPoly):
            try:
                c = _frac(other)
            except TypeError:
                return NotImplemented
            return RatPoly(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = RatPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other: "RatPoly"):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lead = other.leading
        quo = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] / lead
            if c:
                quo[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return RatPoly(quo), RatPoly(rem[:dd] if dd > 0 else ())

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == RatPoly._coerce(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(("RatPoly", self.coeffs))

    def __call__(self, x):
        """Horner evaluation; exact for Fraction/int input, float otherwise."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            if isinstance(x, (int, Fraction)):
                acc = acc * x + c
            else:
                acc = acc * x + float(c)
        return acc

    def derivative(self) -> "RatPoly":
        return RatPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def compose(self, inner: "RatPoly") -> "RatPoly":
        acc = RatPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __repr__(self):
        if self.is_zero():
            return "RatPoly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            terms.append(f"{c}{'*' + mono if mono else ''}")
        return "RatPoly(" + " + ".join(terms) + ")"


def poly_arith(a: RatPoly, b: RatPoly | None, op: str, k: int | None = None) -> RatPoly:
    """Dispatch ``op`` in {"add", "sub", "mul", "pow"}; ``pow`` uses ``k``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "pow":
        if k is None or k < 0:
            raise ValueError("pow requires k >= 0")
        return a ** k
    raise ValueError(f"unknown op {op!r}")


def poly_divide_exact(num: RatPoly, div: RatPoly) -> RatPoly:
    """Return q with num == q * div, or raise NonzeroRemainder."""
    if div.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    q, r = divmod(num, div)
    if not r.is_zero():
        raise NonzeroRemainder(r)
    return q


def sign_pattern(p: RatPoly) -> list[str]:
    """List of '+', '-', '0' for the coefficients of p, index 0..deg(p)."""
    return ["+" if c > 0 else "-" if c < 0 else "0" for c in p.coeffs]


def fraction_str(v: Fraction) -> str:
    """num/den (or just num for integers), the JSON encoding of exact values."""
    v = _frac(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


class PiExt:
    """Element sum_k coeffs[k] * pi**(-k) of Q[1/pi].

    Arithmetic is that of polynomials in u = 1/pi.  Division is only
    defined when the quotient is again a polynomial in u.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("PiExt is immutable")

    @classmethod
    def inv_pi(cls, c: Scalar = 1) -> "PiExt":
        """c / pi."""
        return cls((0, c))

    def _poly(self) -> RatPoly:
        return RatPoly(self.coeffs)

    @classmethod
    def _coerce(cls, other) -> "PiExt":
        if isinstance(other, PiExt):
            return other
        return cls((_frac(other),))

    def __add__(self, other):
        try:
            b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return PiExt((self._poly() + b._poly()).coeffs)

    __radd__ = __add__

    def __neg__(self):
        return PiExt(-c for c in self.coeffs)

    def __sub__(self, other):
        try:
            b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return PiExt((self._poly() * b._poly()).coeffs)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            b = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not b.coeffs:
            raise ZeroDivisionError("division by zero in Q[1/pi]")
        q, r = divmod(self._poly(), b._poly())
        if not r.is_zero():
            raise InexactDivision(f"{self!r} / {b!r} is not in Q[1/pi]")
        return PiExt(q.coeffs)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other):
        try:
            return self.coeffs == self._coerce(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(("PiExt", self.coeffs))

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} has a nonzero 1/pi part")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __float__(self):
        import math

        u = 1.0 / math.pi
        return sum(float(c) * u ** k for k, c in enumerate(self.coeffs))

    def to_json(self) -> list[str]:
        return [fraction_str(c) for c in self.coeffs]

    def __repr__(self):
        if not self.coeffs:
            return "PiExt(0)"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            parts.append(str(c) if k == 0 else f"{c}/pi" if k == 1 else f"{c}/pi^{k}")
        return "PiExt(" + " + ".join(parts) + ")"


def piext_arith(a: PiExt, b: PiExt, op: str) -> PiExt:
    """Dispatch ``op`` in {"add", "sub", "mul", "div"}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


class GaussianRational:
    """Exact complex number re + i*im with Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Scalar = 0, im: Scalar = 0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, v) -> "GaussianRational":
        if isinstance(v, GaussianRational):
            return v
        if isinstance(v, Sequence) and len(v) == 2:
            return cls(v[0], v[1])
        return cls(v, 0)

    def __add__(self, other):
        o = self.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-self.coerce(other))

    def __rsub__(self, other):
        return self.coerce(other) - self

    def __mul__(self, other):
        o = self.coerce(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            o = self.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if not self.im:
            return f"{self.re}"
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


def binom_exact(a: Scalar, j: int) -> Fraction:
    """Generalized binomial coefficient a(a-1)...(a-j+1)/j! for rational a."""
    if j < 0:
        return Fraction(0)
    a = _frac(a)
    out = Fraction(1)
    for i in range(j):
        out = out * (a - i) / (i + 1)
    return out
