"""Truncated exponential generating series over an exact ring.

An :class:`Egf` stores normalized coefficients ``c_n = a_n / n!`` so that
species products and substitution become plain power-series operations.
Total weights ``a_n`` are recovered with :meth:`Egf.weights`.

A series may be *compressed* with stride ``p`` (see :func:`egf_compress`):
slot ``k`` then holds ``a_{pk} / (pk)!`` and represents the coefficient of
``z^{pk}`` of the original series.  All algebra is stride-agnostic because
the substitution ``z -> z^(1/p)`` commutes with products, composition,
``exp`` and ``log``; mixing strides is rejected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import algebra
from .algebra import RATIONAL, RingError


class SeriesError(ValueError):
    """Precondition violation in a series operation."""


@dataclass(frozen=True)
class Egf:
    coeffs: tuple
    ring: str = RATIONAL
    stride: int = 1

    def __post_init__(self):
        algebra.check_ring(self.ring)
        if self.stride < 1:
            raise SeriesError("stride must be a positive integer")
        if not self.coeffs:
            raise SeriesError("a series needs at least the constant coefficient")
        object.__setattr__(
            self, "coeffs", tuple(algebra.coerce(c, self.ring) for c in self.coeffs)
        )

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    @classmethod
    def from_weights(cls, weights: Sequence, ring: str = RATIONAL, stride: int = 1) -> "Egf":
        """Build from total weights ``a_{stride*k}`` (slot ``k``)."""
        return cls(
            tuple(algebra.coerce(w, ring) / math.factorial(stride * k) for k, w in enumerate(weights)),
            ring,
            stride,
        )

    def weight(self, k: int):
        """Total weight in slot ``k``, i.e. ``c_k * (stride*k)!``."""
        return self.coeffs[k] * math.factorial(self.stride * k)

    def weights(self) -> list:
        return [self.weight(k) for k in range(len(self.coeffs))]

    def truncate(self, order: int) -> "Egf":
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return Egf(self.coeffs[: order + 1], self.ring, self.stride)

    def map(self, fn: Callable) -> "Egf":
        return Egf(tuple(fn(c) for c in self.coeffs), self.ring, self.stride)

    def specialize(self, rho) -> "Egf":
        """Substitute a numeric ``rho``; the result lives in the rational ring."""
        return Egf(tuple(algebra.specialize(c, rho) for c in self.coeffs), RATIONAL, self.stride)

    def __add__(self, other: "Egf") -> "Egf":
        _check_pair(self, other)
        n = min(self.order, other.order)
        return Egf(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)), self.ring, self.stride)

    def __sub__(self, other: "Egf") -> "Egf":
        _check_pair(self, other)
        n = min(self.order, other.order)
        return Egf(tuple(self.coeffs[i] - other.coeffs[i] for i in range(n + 1)), self.ring, self.stride)

    def __neg__(self) -> "Egf":
        return self.map(lambda c: -c)

    def __mul__(self, other):
        if isinstance(other, Egf):
            return egf_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.map(lambda c: c * other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Egf":
        return egf_pow(self, e)

    def to_json(self) -> dict:
        return {
            "ring": self.ring,
            "order": self.order,
            "stride": self.stride,
            "coeffs": [algebra.to_json_value(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Egf":
        coeffs = [algebra.from_json_value(c) for c in data["coeffs"]]
        if len(coeffs) != data["order"] + 1:
            raise SeriesError("coefficient count does not match the declared order")
        return cls(tuple(coeffs), data["ring"], data.get("stride", 1))


def _check_pair(a: Egf, b: Egf) -> None:
    if a.ring != b.ring:
        raise RingError(f"ring mismatch: {a.ring} vs {b.ring}")
    if a.stride != b.stride:
        raise SeriesError(f"stride mismatch: {a.stride} vs {b.stride}")


def _zero(s: Egf):
    return algebra.zero(s.ring)


def _one(s: Egf):
    return algebra.one(s.ring)


# -- standard series --------------------------------------------------------

STD_NAMES = ("E", "E_plus", "L", "L_plus", "C", "Z", "One", "Zero")


def std_series(name: str, order: int, ring: str = RATIONAL) -> Egf:
    """Exact generator for the elementary species series.

    ``E`` sets, ``L`` linear orders, ``C`` cyclic permutations, ``Z`` the
    singleton, ``One`` the empty set; ``*_plus`` drop the constant term.
    """
    if order < 0:
        raise SeriesError("order must be nonnegative")
    gen: Callable[[int], Fraction]
    if name in ("E", "E_plus"):
        gen = lambda n: Fraction(1, math.factorial(n))  # noqa: E731
    elif name in ("L", "L_plus"):
        gen = lambda n: Fraction(1)  # noqa: E731
    elif name == "C":
        gen = lambda n: Fraction(1, n) if n else Fraction(0)  # noqa: E731
    elif name == "Z":
        gen = lambda n: Fraction(int(n == 1))  # noqa: E731
    elif name == "One":
        gen = lambda n: Fraction(int(n == 0))  # noqa: E731
    elif name == "Zero":
        gen = lambda n: Fraction(0)  # noqa: E731
    else:
        raise KeyError(f"unknown standard series {name!r}")
    cs = [gen(n) for n in range(order + 1)]
    if name.endswith("_plus"):
        cs[0] = Fraction(0)
    return Egf(tuple(cs), ring)


def one_series(order: int, ring: str = RATIONAL, stride: int = 1) -> Egf:
    return Egf((algebra.one(ring),) + (algebra.zero(ring),) * order, ring, stride)


def monomial(k: int, order: int, ring: str = RATIONAL, coeff=1) -> Egf:
    cs = [algebra.zero(ring)] * (order + 1)
    if k <= order:
        cs[k] = algebra.coerce(coeff, ring)
    return Egf(tuple(cs), ring)


# -- core operations --------------------------------------------------------


def egf_mul(a: Egf, b: Egf) -> Egf:
    """Cauchy product, truncated to the smaller order."""
    _check_pair(a, b)
    n = min(a.order, b.order)
    zero = _zero(a)
    out = []
    ac, bc = a.coeffs, b.coeffs
    for k in range(n + 1):
        acc = zero
        for i in range(k + 1):
            x = ac[i]
            if x == 0:
                continue
            y = bc[k - i]
            if y == 0:
                continue
            acc = acc + x * y
        out.append(acc)
    return Egf(tuple(out), a.ring, a.stride)


def egf_pow(a: Egf, e: int) -> Egf:
    if e < 0:
        raise SeriesError("negative powers need egf_mult_inverse")
    result = one_series(a.order, a.ring, a.stride)
    base = a
    while e:
        if e & 1:
            result = egf_mul(result, base)
        e >>= 1
        if e:
            base = egf_mul(base, base)
    return result


def egf_compose(outer: Egf, inner: Egf) -> Egf:
    """Truncated substitution ``outer(inner(z))``.

    The result keeps the stride of ``inner``; ``outer`` is read as a plain
    series in its argument.
    """
    if outer.ring != inner.ring:
        raise RingError(f"ring mismatch: {outer.ring} vs {inner.ring}")
    if outer.stride != 1:
        raise SeriesError("the outer series of a composition must be uncompressed")
    if inner.coeffs[0] != 0:
        raise SeriesError("composition requires zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    # Horner in the series ring; higher powers of inner vanish past order n
    acc = Egf((outer.coeffs[n],) + (_zero(inner),) * n, inner.ring, inner.stride)
    for i in range(n - 1, -1, -1):
        acc = egf_mul(acc, inner)
        acc = Egf((acc.coeffs[0] + outer.coeffs[i],) + acc.coeffs[1:], acc.ring, acc.stride)
    return acc


def egf_mult_inverse(a: Egf) -> Egf:
    if a.coeffs[0] != 1:
        raise SeriesError("multiplicative inverse requires constant term 1")
    zero = _zero(a)
    b = [_one(a)]
    for n in range(1, a.order + 1):
        acc = zero
        for k in range(1, n + 1):
            if a.coeffs[k] != 0:
                acc = acc + a.coeffs[k] * b[n - k]
        b.append(-acc)
    return Egf(tuple(b), a.ring, a.stride)


def egf_comp_inverse(a: Egf) -> Egf:
    """Compositional inverse by term-by-term correction.

    With ``a_0 = 0`` and ``a_1 = 1`` the coefficient of ``z^n`` in
    ``a(b(z))`` equals ``b_n`` plus terms in ``b_1..b_{n-1}``, so each
    coefficient is fixed by subtracting the current defect.
    """
    if a.stride != 1:
        raise SeriesError("compositional inverse is defined on uncompressed series")
    if a.coeffs[0] != 0 or (a.order >= 1 and a.coeffs[1] != 1):
        raise SeriesError("compositional inverse requires a_0 = 0 and a_1 = 1")
    zero = _zero(a)
    n = a.order
    b = [zero] * (n + 1)
    if n >= 1:
        b[1] = _one(a)
    for k in range(2, n + 1):
        trial = egf_compose(a.truncate(k), Egf(tuple(b[: k + 1]), a.ring))
        b[k] = b[k] - trial.coeffs[k]
    return Egf(tuple(b), a.ring)


def egf_derivative(a: Egf) -> Egf:
    if a.stride != 1:
        raise SeriesError("derivative is defined on uncompressed series")
    if a.order < 1:
        raise SeriesError("derivative needs order >= 1")
    return Egf(tuple(a.coeffs[n + 1] * (n + 1) for n in range(a.order)), a.ring)


def egf_log(a: Egf) -> Egf:
    """``log a`` for ``a_0 = 1`` via ``n f_n = n a_n - sum_{k<n} k f_k a_{n-k}``."""
    if a.coeffs[0] != 1:
        raise SeriesError("log requires constant term 1")
    zero = _zero(a)
    f = [zero]
    for n in range(1, a.order + 1):
        acc = a.coeffs[n] * n
        for k in range(1, n):
            if f[k] != 0 and a.coeffs[n - k] != 0:
                acc = acc - f[k] * a.coeffs[n - k] * k
        f.append(acc / n)
    return Egf(tuple(f), a.ring, a.stride)


def egf_exp(a: Egf) -> Egf:
    """``exp a`` for ``a_0 = 0`` via ``n g_n = sum_{k=1..n} k a_k g_{n-k}``."""
    if a.coeffs[0] != 0:
        raise SeriesError("exp requires constant term 0")
    zero = _zero(a)
    g = [_one(a)]
    for n in range(1, a.order + 1):
        acc = zero
        for k in range(1, n + 1):
            if a.coeffs[k] != 0:
                acc = acc + a.coeffs[k] * g[n - k] * k
        g.append(acc / n)
    return Egf(tuple(g), a.ring, a.stride)


def egf_compress(a: Egf, p: int) -> Egf:
    """Keep every ``p``-th slot, recording the stride for weight scaling."""
    if p < 1:
        raise SeriesError("stride must be positive")
    if p == 1:
        return a
    for n, c in enumerate(a.coeffs):
        if n % p and c != 0:
            raise SeriesError(f"sequence is not {p}-periodic (nonzero at n={n * a.stride})")
    return Egf(a.coeffs[::p], a.ring, a.stride * p)


def infer_stride(weights: Sequence, max_stride: int = 8) -> int:
    """Smallest ``p`` such that the weights vanish off multiples of ``p``.

    The compressed sequence must also be eventually nonzero: every multiple
    of ``p`` in the upper half of the window carries a nonzero weight.
    Other zero patterns are rejected.
    """
    support = [n for n, w in enumerate(weights) if n and w != 0]
    if not support:
        return 1
    p = math.gcd(*support)
    if p > max_stride:
        raise SeriesError(f"stride {p} exceeds the trial limit {max_stride}")
    top = len(weights) - 1
    for n in range(p, top + 1, p):
        if 2 * n > top and weights[n] == 0:
            raise SeriesError(f"weights are neither eventually nonzero nor {p}-periodic (zero at n={n})")
    return p


def plus(a: Egf) -> Egf:
    """Drop the constant term (the ``F_+`` restriction)."""
    return Egf((_zero(a),) + a.coeffs[1:], a.ring, a.stride)
