"""Evaluate expansions at concrete sizes, exactly.

For a family with total weights ``a_n`` and stride ``p`` the expansion of
``P(s has m components)`` at size ``n`` has terms

    d_{pk,m} * binom(n, pk) * a_{n-pk} / a_n,     k = 0, 1, 2, ...

Sizes are raw structure sizes, such as vertex or polygon counts;
for stride-2 families they must be even.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Optional

from .algebra import binomial, falling_factorial, format_rational
from .engine import Decomp, component_series, d_coefficients, leading_coefficient
from .models import ModelError, ModelSpec


class EvaluationError(ValueError):
    pass


def _numeric(model: ModelSpec, rho) -> ModelSpec:
    if rho is not None:
        return model.specialize(rho)
    if model.symbolic:
        raise EvaluationError(f"model {model.id!r} is symbolic in rho; pass a numeric rho")
    return model


def _check_size(model: ModelSpec, n: int) -> Fraction:
    if n < 0:
        raise EvaluationError("size must be nonnegative")
    if not model.on_stride(n):
        raise EvaluationError(f"a_{n} = 0 for {model.id!r}: size must be a multiple of {model.stride}")
    a_n = model.weight(n)
    if a_n == 0:
        raise EvaluationError(f"a_{n} = 0 for {model.id!r}")
    return a_n


def exact_probability(model: ModelSpec, m: int, n: int, rho=None) -> Fraction:
    """Exact ``P(s has m components)`` at size ``n`` from the component series."""
    model = _numeric(model, rho)
    a_n = _check_size(model, n)
    if m < 0:
        raise EvaluationError("m must be nonnegative")
    A = model.series(n)
    return component_series(A, model.kind, m).weight(n // model.stride) / a_n


def exact_distribution(model: ModelSpec, n: int, rho=None) -> dict[int, Fraction]:
    """``{m: P(m components)}`` for ``m = 0..n``, sharing one building-block series."""
    model = _numeric(model, rho)
    a_n = _check_size(model, n)
    A = model.series(n)
    slot = n // model.stride
    return {m: component_series(A, model.kind, m).weight(slot) / a_n for m in range(n + 1)}


@dataclass
class ExpansionEvaluation:
    model: str
    m: int
    n: int
    order: int
    stride: int
    rho: Optional[Fraction]
    coefficients: list
    terms: list
    partial_sums: list
    exact_probability: Optional[Fraction] = None
    residuals: list = field(default_factory=list)

    @property
    def connectivity_coefficients(self) -> list:
        """Coefficients ``c_k = -d_k`` (``k >= 1``) of the form ``1 - sum c_k ...``.

        Only meaningful for ``m = 1``, where ``d_0 = 1``.
        """
        return [-d for d in self.coefficients[1:]]

    def to_json(self, digits: Optional[int] = None) -> dict:
        fmt = format_rational if digits is None else (lambda x: render_decimal(x, digits))
        out = {
            "model": self.model,
            "m": self.m,
            "n": self.n,
            "order": self.order,
            "stride": self.stride,
            "rho": None if self.rho is None else format_rational(self.rho),
            "coefficients": [format_rational(d) for d in self.coefficients],
            "terms": [fmt(t) for t in self.terms],
            "partial_sums": [fmt(s) for s in self.partial_sums],
            "exact": None if self.exact_probability is None else fmt(self.exact_probability),
            "residuals": [fmt(r) for r in self.residuals],
        }
        if self.m == 1:
            out["connectivity_coefficients"] = [format_rational(c) for c in self.connectivity_coefficients]
        return out

    def rows(self) -> list[dict]:
        return [
            {
                "n": self.n,
                "order": k,
                "coefficient": format_rational(self.coefficients[k]),
                "term": format_rational(self.terms[k]),
                "partial_sum": format_rational(self.partial_sums[k]),
                "residual": format_rational(self.residuals[k]) if self.residuals else "",
            }
            for k in range(len(self.terms))
        ]


def expansion_terms(model: ModelSpec, m: int, n: int, order: int, rho=None, exact: bool = True) -> ExpansionEvaluation:
    """Terms ``k = 0..order`` of the expansion at size ``n``, with partial sums."""
    model = _numeric(model, rho)
    a_n = _check_size(model, n)
    p = model.stride
    if order < 0:
        raise EvaluationError("order must be nonnegative")
    if n < p * order:
        raise EvaluationError(f"size {n} too small for order {order} (needs n >= {p * order})")
    table = d_coefficients(model, m, order)
    terms = []
    for k, d in enumerate(table.d):
        terms.append(d * binomial(n, p * k) * model.weight(n - p * k) / a_n)
    partial, acc = [], Fraction(0)
    for t in terms:
        acc += t
        partial.append(acc)
    ev = ExpansionEvaluation(
        model.id, m, n, order, p,
        Fraction(model.params["rho"]) if "rho" in model.params else None,
        list(table.d), terms, partial,
    )
    if exact:
        ev.exact_probability = exact_probability(model, m, n)
        ev.residuals = [ev.exact_probability - s for s in partial]
    return ev


@dataclass
class LeadingTerm:
    model: str
    m: int
    n: int
    k: int
    coefficient: Fraction
    value: Fraction
    form: str
    form_value: Fraction

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "coefficient": format_rational(self.coefficient),
            "value": format_rational(self.value),
            "form": self.form,
            "form_value": format_rational(self.form_value),
        }


def leading_term(model: ModelSpec, m: int, n: int, rho=None) -> LeadingTerm:
    """Dominant term of the expansion at size ``n`` and its simplified form.

    ``value`` is the exact first nonzero term; ``form_value`` evaluates the
    family's closed asymptotic form (for stride-2 families written in terms
    of half the size), or the general leading-term formula otherwise.
    """
    model = _numeric(model, rho)
    if m < 1:
        raise EvaluationError("m must be at least 1")
    p = model.stride
    a_n = _check_size(model, n)
    a_p = model.weight(p)
    if a_p == 0:
        raise EvaluationError(f"leading-term law needs a_{p} != 0")
    k = m - 1
    if n < p * k:
        raise EvaluationError(f"size {n} too small for m={m}")
    table = d_coefficients(model, m, k)
    if table.first_nonzero() != k:
        raise EvaluationError("first nonzero coefficient is not at k = m - 1")
    coefficient = table.d[k]
    expected = leading_coefficient(model.kind, m, a_p, p)
    if coefficient != expected:
        raise EvaluationError(f"leading coefficient {coefficient} disagrees with closed form {expected}")
    value = coefficient * binomial(n, p * k) * model.weight(n - p * k) / a_n
    if model.leading_form is not None:
        form, form_value = model.leading_form(m, n)
    else:
        c = {Decomp.SET: Fraction(1, math.factorial(m - 1)), Decomp.SEQ: Fraction(m), Decomp.CYC: Fraction(1)}[
            Decomp.parse(model.kind)
        ]
        form = "c(F) (n)_{p(m-1)} a_p^(m-1) a_(n-p(m-1)) / ((p!)^(m-1) a_n)"
        form_value = (
            c * falling_factorial(n, p * k) * a_p ** k * model.weight(n - p * k)
            / (Fraction(math.factorial(p)) ** k * a_n)
        )
    return LeadingTerm(model.id, m, n, k, coefficient, value, form, Fraction(form_value))


@dataclass
class ConvergenceRow:
    n: int
    partial_sum: Fraction
    exact: Fraction
    residual: Fraction
    next_k: Optional[int]
    next_term: Optional[Fraction]
    ratio: Optional[Fraction]


@dataclass
class ConvergenceReport:
    model: str
    m: int
    order: int
    bound: Fraction
    rows: list
    verdict: str
    note: str = "in-window evidence only; decay of later terms is not certified"

    @property
    def max_ratio(self) -> Optional[Fraction]:
        ratios = [r.ratio for r in self.rows if r.ratio is not None]
        return max(ratios) if ratios else None

    def to_json(self, digits: int = 12) -> dict:
        def dec(x):
            return None if x is None else render_decimal(x, digits)

        return {
            "model": self.model,
            "m": self.m,
            "order": self.order,
            "bound": format_rational(self.bound),
            "verdict": self.verdict,
            "note": self.note,
            "rows": [
                {
                    "n": r.n,
                    "partial_sum": dec(r.partial_sum),
                    "exact": dec(r.exact),
                    "residual": dec(r.residual),
                    "next_k": r.next_k,
                    "next_term": dec(r.next_term),
                    "ratio": dec(r.ratio),
                }
                for r in self.rows
            ],
        }


def convergence_report(
    model: ModelSpec, m: int, n_range: Iterable[int], order: int, rho=None, bound=10, lookahead: int = 4
) -> ConvergenceReport:
    """Residual after ``order`` versus the next nonzero term, for each ``n``.

    The verdict is ``bounded`` when every ``|residual| / |next term|`` is at
    most ``bound``; the bound is an engineering threshold.
    """
    model = _numeric(model, rho)
    bound = Fraction(bound)
    rows = []
    for n in sorted(n_range):
        if not model.on_stride(n):
            continue
        ev = expansion_terms(model, m, n, min(order + lookahead, n // model.stride))
        partial = ev.partial_sums[order]
        residual = ev.exact_probability - partial
        next_k = next((k for k in range(order + 1, len(ev.terms)) if ev.terms[k] != 0), None)
        next_term = None if next_k is None else ev.terms[next_k]
        ratio = None if next_term is None else abs(residual) / abs(next_term)
        rows.append(ConvergenceRow(n, partial, ev.exact_probability, residual, next_k, next_term, ratio))
    ratios = [r.ratio for r in rows if r.ratio is not None]
    if not ratios:
        verdict = "inconclusive"
    elif max(ratios) <= bound:
        verdict = "bounded"
    else:
        verdict = "exceeds-bound"
    return ConvergenceReport(model.id, m, order, bound, rows, verdict)


def render_decimal(x: Fraction, digits: int = 12) -> str:
    """Decimal rendering with ``digits`` significant digits (output only)."""
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = max(1, digits)
        value = Decimal(x.numerator) / Decimal(x.denominator)
    return format(value, "g") if value != 0 else "0"


__all__ = [
    "ConvergenceReport",
    "EvaluationError",
    "ExpansionEvaluation",
    "LeadingTerm",
    "ModelError",
    "convergence_report",
    "exact_distribution",
    "exact_probability",
    "expansion_terms",
    "leading_term",
    "render_decimal",
]
