"""Exact coefficient rings.

Two rings are supported: big rationals (``fractions.Fraction``) and dense
univariate polynomials in the marking variable ``rho`` with rational
coefficients (:class:`Poly`).  Every series in the package carries one of
the tags :data:`RATIONAL` or :data:`POLY_RHO` and never mixes them.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

RATIONAL = "rational"
POLY_RHO = "poly_rho"
RINGS = (RATIONAL, POLY_RHO)

Scalar = Union[int, Fraction]


class RingError(ValueError):
    """Raised on mixed-ring operations or unknown ring tags."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class Poly:
    """Dense polynomial in ``rho`` over the rationals.

    Coefficients are stored in ascending degree with trailing zeros trimmed,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def rho(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __pos__(self) -> "Poly":
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # scalar division only; the ring contract has no polynomial division
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            inv = 1 / Fraction(other)
            return Poly(c * inv for c in self.coeffs)
        return NotImplemented

    def __pow__(self, e: int) -> "Poly":
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = Poly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash(self.coeffs)

    def __call__(self, x: Scalar) -> Fraction:
        return poly_eval(self, x)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        return format_poly(self)

    def to_json(self) -> dict:
        return {"var": "rho", "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Poly":
        if data.get("var") != "rho":
            raise ValueError(f"unsupported polynomial variable {data.get('var')!r}")
        return cls(parse_rational(c) for c in data["coeffs"])


def poly_mul(a: Poly, b: Poly) -> Poly:
    """Exact convolution product."""
    if not a.coeffs or not b.coeffs:
        return Poly()
    out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return Poly(out)


def poly_eval(a: Poly, x: Scalar) -> Fraction:
    """Horner evaluation at an exact rational point."""
    x = _frac(x)
    acc = Fraction(0)
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def double_factorial(n: int) -> int:
    """``n!! = n (n-2) (n-4) ...`` with ``0!! = (-1)!! = 1``."""
    if n < -1:
        raise ValueError(f"double factorial undefined for n={n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def falling_factorial(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


# -- ring helpers -----------------------------------------------------------


def check_ring(tag: str) -> str:
    if tag not in RINGS:
        raise RingError(f"unknown ring tag {tag!r}")
    return tag


def zero(ring: str):
    return Poly() if check_ring(ring) == POLY_RHO else Fraction(0)


def one(ring: str):
    return Poly((1,)) if check_ring(ring) == POLY_RHO else Fraction(1)


def coerce(value, ring: str):
    """Bring an int/Fraction/Poly into ``ring``; polynomials never demote."""
    check_ring(ring)
    if ring == POLY_RHO:
        if isinstance(value, Poly):
            return value
        return Poly((_frac(value),))
    if isinstance(value, Poly):
        raise RingError("polynomial value in a rational-ring context")
    return _frac(value)


def ring_of(value) -> str:
    return POLY_RHO if isinstance(value, Poly) else RATIONAL


def is_zero(value) -> bool:
    return value == 0


def specialize(value, rho: Scalar) -> Fraction:
    """Substitute a numeric ``rho`` into a ring element."""
    if isinstance(value, Poly):
        return poly_eval(value, rho)
    return _frac(value)


# -- text / JSON forms ------------------------------------------------------


def format_rational(x: Scalar) -> str:
    x = _frac(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or a terminating decimal exactly."""
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    return Fraction(text)


def format_poly(p: Poly) -> str:
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for deg in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[deg]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if deg == 0:
            body = format_rational(mag)
        else:
            mono = "rho" if deg == 1 else f"rho^{deg}"
            if mag == 1:
                body = mono
            elif mag.denominator == 1:
                body = f"{mag.numerator}{mono}"
            else:
                body = f"({format_rational(mag)}){mono}"
        parts.append((sign if parts or sign == "-" else "") + body)
    return "".join(parts)


def format_value(value) -> str:
    return format_poly(value) if isinstance(value, Poly) else format_rational(value)


def to_json_value(value):
    """JSON form of a ring element: a ``"p/q"`` string or a polynomial object."""
    return value.to_json() if isinstance(value, Poly) else format_rational(value)


def from_json_value(data):
    if isinstance(data, dict):
        return Poly.from_json(data)
    return parse_rational(str(data))


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)
