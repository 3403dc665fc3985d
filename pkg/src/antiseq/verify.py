"""Golden-value and cross-check suites behind ``antiseq verify``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import golden
from .algebra import Poly, format_value
from .engine import d_coefficients, derived_one_anti_seq, derived_series, equipotence_check
from .expansion import expansion_terms
from .models import get_model
from .oracle import (
    GRAPH_CAP,
    TOURNAMENT_CAP,
    enumerate_graph_components,
    p_polynomial,
    parse_poly,
    q_polynomial,
)

SUITES = ("tables", "oracle", "identities", "sequences")


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    expected: str
    got: str

    def to_json(self) -> dict:
        out = {"suite": self.suite, "name": self.name, "passed": self.passed}
        if not self.passed:
            out["expected"] = self.expected
            out["got"] = self.got
        return out


def _compare(suite: str, name: str, expected, got) -> CheckResult:
    return CheckResult(suite, name, expected == got, _show(expected), _show(got))


def _show(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_show(v) for v in value) + "]"
    return format_value(value) if isinstance(value, (Poly, Fraction, int)) else str(value)


def suite_tables() -> list[CheckResult]:
    out = []
    for model_id, table, letter in (("er", golden.ER_TABLE, "P"), ("tournaments_ties", golden.TIES_TABLE, "Q")):
        model = get_model(model_id)
        for m, row in table.items():
            got = d_coefficients(model, m, len(row) - 1).d
            for k, text in enumerate(row):
                out.append(_compare("tables", f"{letter}[k={k},m={m}]", parse_poly(text), got[k]))
    return out


def suite_oracle(kmax: int = 4, mmax: int = 5, workers: int = 1) -> list[CheckResult]:
    if kmax > TOURNAMENT_CAP:
        raise ValueError(f"kmax must be at most {TOURNAMENT_CAP}")
    er, ties = get_model("er"), get_model("tournaments_ties")
    out = []
    for m in range(1, mmax + 1):
        p_row = d_coefficients(er, m, kmax).d
        q_row = d_coefficients(ties, m, kmax).d
        for k in range(kmax + 1):
            out.append(_compare("oracle", f"P[k={k},m={m}] enumeration", p_polynomial(k, m, workers=workers), p_row[k]))
            out.append(_compare("oracle", f"Q[k={k},m={m}] enumeration", q_polynomial(k, m, workers=workers), q_row[k]))
            out.append(
                _compare(
                    "oracle", f"Q[k={k},m={m}] convolution",
                    q_polynomial(k, m, method="convolution", workers=workers), q_row[k],
                )
            )
    for k in range(GRAPH_CAP + 1):
        mass = enumerate_graph_components(k, workers=workers).total()
        out.append(_compare("oracle", f"graph mass k={k}", Poly((1, 1)) ** (k * (k - 1) // 2), mass))
    return out


def suite_identities(order: int = 30) -> list[CheckResult]:
    out = [_compare("identities", f"equipotence to order {order}", True, equipotence_check(order))]
    for model_id in ("simple_graphs", "er"):
        A = get_model(model_id).series(min(order, 10))
        out.append(
            _compare(
                "identities", f"anti-SEQ route, {model_id}",
                derived_series(A, "SET", 1).coeffs, derived_one_anti_seq(A).coeffs,
            )
        )
    for model_id, table in (("er", golden.ER_TABLE), ("tournaments_ties", golden.TIES_TABLE)):
        model = get_model(model_id)
        k_max = len(table[1]) - 1
        cols = [Poly()] * (k_max + 1)
        # m beyond k contributes nothing at size k
        for m in range(1, k_max + 2):
            cols = [c + d for c, d in zip(cols, d_coefficients(model, m, k_max).d)]
        expected = [Poly((1,))] + [Poly()] * k_max
        out.append(_compare("identities", f"column sums, {model_id}", expected, cols))
    return out


def suite_sequences() -> list[CheckResult]:
    graphs = d_coefficients(get_model("simple_graphs"), 1, 4).d
    tri = d_coefficients(get_model("triangulations"), 1, 4).d
    quarter = d_coefficients(get_model("er", rho=golden.QUARTER_RHO), 1, 4).d
    ev = expansion_terms(get_model("simple_graphs"), 1, 10, 1)
    return [
        _compare("sequences", "simple graphs -d_k", golden.GRAPH_CONNECTIVITY, [-d for d in graphs[1:]]),
        _compare("sequences", "triangulations -d_2k", golden.TRIANGULATION_CONNECTIVITY, [-d for d in tri[1:]]),
        _compare("sequences", "G(n,1/4) d_k", golden.QUARTER_COEFFICIENTS, quarter[1:]),
        _compare("sequences", "simple graphs n=10 order 1", 1 - Fraction(10, 2**9), ev.partial_sums[1]),
    ]


def run_suites(names, kmax: int = 4, order: int = 30, workers: int = 1) -> list[CheckResult]:
    results = []
    for name in names:
        if name == "tables":
            results += suite_tables()
        elif name == "oracle":
            results += suite_oracle(kmax, workers=workers)
        elif name == "identities":
            results += suite_identities(order)
        elif name == "sequences":
            results += suite_sequences()
        else:
            raise ValueError(f"unknown suite {name!r}")
    return results
