"""From a weight sequence to building-block series and the d-coefficients.

For a decomposition ``A = F o B`` with ``F`` one of the constructions below,
the asymptotic coefficients of ``P(s in F_m o B)`` are the total
weights of a derived virtual species ``D(m)``:

=====  ==========================  ================================
kind   B from A                    D(m)
=====  ==========================  ================================
SET    log A                       B^(m-1)/(m-1)! * exp(-B)
SEQ    1 - 1/A                     m * B^(m-1) * (1 - B)^2
CYC    1 - exp(-A)                 B^(m-1) * (1 - B)
=====  ==========================  ================================

Coefficients are reported raw (no sign flip); presentation layers decide
how to print the ``1 - sum`` form of the connectivity expansion.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import algebra
from .series import (
    Egf,
    SeriesError,
    egf_comp_inverse,
    egf_compose,
    egf_exp,
    egf_log,
    egf_mult_inverse,
    egf_pow,
    one_series,
    plus,
    std_series,
)


class Decomp(str, enum.Enum):
    SET = "SET"
    SEQ = "SEQ"
    CYC = "CYC"

    @classmethod
    def parse(cls, value) -> "Decomp":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ValueError(f"unknown decomposition kind {value!r}") from None


class DecompositionError(SeriesError):
    """The series does not satisfy the constant-term condition of its kind."""


def _check_constant(A: Egf, kind: Decomp) -> None:
    c0 = A.coeffs[0]
    if kind is Decomp.CYC:
        if c0 != 0:
            raise DecompositionError("a CYC decomposition needs A_0 = 0")
    elif c0 != 1:
        raise DecompositionError(f"a {kind.value} decomposition needs A_0 = 1")


def connected_series(A: Egf, kind) -> Egf:
    """Series of the building blocks ``B`` with ``A = F o B``."""
    kind = Decomp.parse(kind)
    _check_constant(A, kind)
    if kind is Decomp.SET:
        return egf_log(A)
    if kind is Decomp.SEQ:
        return one_series(A.order, A.ring, A.stride) - egf_mult_inverse(A)
    return one_series(A.order, A.ring, A.stride) - egf_exp(-A)


def derived_series(A: Egf, kind, m: int) -> Egf:
    """Series of ``D(m)``, whose total weights are the coefficients ``d_{k,m}``."""
    kind = Decomp.parse(kind)
    if m < 1:
        raise ValueError("m must be at least 1")
    B = connected_series(A, kind)
    one = one_series(A.order, A.ring, A.stride)
    if kind is Decomp.SET:
        return egf_pow(B, m - 1) * egf_exp(-B) * Fraction(1, math.factorial(m - 1))
    if kind is Decomp.SEQ:
        return egf_pow(B, m - 1) * egf_pow(one - B, 2) * m
    return egf_pow(B, m - 1) * (one - B)


def component_series(A: Egf, kind, m: int) -> Egf:
    """Exact series of ``F_m o B``: structures with exactly ``m`` components."""
    kind = Decomp.parse(kind)
    if m < 0:
        raise ValueError("m must be nonnegative")
    B = connected_series(A, kind)
    if kind is Decomp.CYC:
        if m == 0:
            return B * 0
        return egf_pow(B, m) * Fraction(1, m)
    if m == 0:
        return one_series(A.order, A.ring, A.stride)
    power = egf_pow(B, m)
    if kind is Decomp.SET:
        return power * Fraction(1, math.factorial(m))
    return power


def derived_one_anti_seq(A: Egf) -> Egf:
    """``One - L_+^(-1) o A_+``: the anti-SEQ route to ``D(1)`` for SET models."""
    _check_constant(A, Decomp.SET)
    anti = egf_comp_inverse(std_series("L_plus", A.order, A.ring))
    return one_series(A.order, A.ring, A.stride) - egf_compose(anti, plus(A))


@dataclass
class ExpansionTable:
    """Coefficients ``d[k] = d_{stride*k, m}`` of one expansion."""

    model: str
    m: int
    stride: int
    d: list
    ring: str = algebra.RATIONAL
    kind: Decomp = Decomp.SET
    params: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.d)

    def __getitem__(self, k: int):
        return self.d[k]

    def first_nonzero(self) -> int | None:
        for k, v in enumerate(self.d):
            if v != 0:
                return k
        return None

    def specialize(self, rho) -> "ExpansionTable":
        return ExpansionTable(
            self.model,
            self.m,
            self.stride,
            [algebra.specialize(v, rho) for v in self.d],
            algebra.RATIONAL,
            self.kind,
            dict(self.params, rho=algebra.format_rational(rho)),
        )

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "m": self.m,
            "stride": self.stride,
            "d": [algebra.to_json_value(v) for v in self.d],
        }


def d_coefficients(model, m: int, k_max: int) -> ExpansionTable:
    """Asymptotic coefficients ``d_{pk,m}`` for ``k = 0..k_max``.

    ``model`` is anything exposing ``id``, ``kind``, ``stride``, ``ring``,
    ``params`` and ``series(order)`` returning the stride-compressed series,
    normally a :class:`antiseq.models.ModelSpec`.
    """
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    A = model.series(model.stride * k_max)
    D = derived_series(A, model.kind, m)
    return ExpansionTable(
        model.id, m, model.stride, D.weights(), model.ring, Decomp.parse(model.kind), dict(model.params)
    )


def leading_coefficient(kind, m: int, a_p, p: int = 1):
    """Closed form of the first nonzero ``d`` entry, at ``k = m - 1``.

    ``c(F) * a_p^(m-1) * (p(m-1))! / (p!)^(m-1)`` with ``c(SET) = 1/(m-1)!``,
    ``c(SEQ) = m`` and ``c(CYC) = 1``.
    """
    kind = Decomp.parse(kind)
    c = {
        Decomp.SET: Fraction(1, math.factorial(m - 1)),
        Decomp.SEQ: Fraction(m),
        Decomp.CYC: Fraction(1),
    }[kind]
    scale = Fraction(math.factorial(p * (m - 1)), math.factorial(p) ** (m - 1))
    return a_p ** (m - 1) * (c * scale)


def equipotence_check(order: int) -> bool:
    """Compare ``E^-1 o E_+^(-1)`` with ``One - L_+^(-1)`` through ``order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    e_inv = egf_mult_inverse(std_series("E", order))
    lhs = egf_compose(e_inv, egf_comp_inverse(std_series("E_plus", order)))
    rhs = one_series(order) - egf_comp_inverse(std_series("L_plus", order))
    return lhs.coeffs == rhs.coeffs
