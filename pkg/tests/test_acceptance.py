"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` (the lines appear in
the terminal summary) or directly with ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

from antiseq import golden
from antiseq.algebra import Poly
from antiseq.engine import Decomp, d_coefficients, equipotence_check
from antiseq.expansion import convergence_report, exact_probability, leading_term
from antiseq.models import get_model, list_models
from antiseq.oracle import enumerate_graph_components, p_polynomial, parse_poly, q_polynomial
from antiseq.series import (
    Egf,
    egf_comp_inverse,
    egf_compose,
    egf_derivative,
    egf_exp,
    egf_log,
    egf_mul,
    egf_mult_inverse,
    monomial,
    one_series,
)

RESULTS: list[str] = []
rho = Poly.rho()


@contextmanager
def criterion(number: int, title: str, limit: float):
    start = time.perf_counter()
    detail = {"note": ""}
    try:
        yield detail
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        RESULTS.append(f"FAIL  criterion {number:2d}  {title}  ({elapsed:.2f}s)  {exc}")
        raise
    note = f"  {detail['note']}" if detail["note"] else ""
    RESULTS.append(f"PASS  criterion {number:2d}  {title}  ({elapsed:.2f}s < {limit}s){note}")


def _table_check(model_id, table):
    model = get_model(model_id)
    count = 0
    for m, row in table.items():
        got = d_coefficients(model, m, 4).d
        for k, text in enumerate(row):
            assert got[k] == parse_poly(text), f"m={m} k={k}: {got[k]} != {text}"
            count += 1
    return count


def test_criterion_01_er_table():
    with criterion(1, "ER d_{k,m} table, k<=4, m<=5", 1.0) as info:
        assert _table_check("er", golden.ER_TABLE) == 25
        info["note"] = "25/25 polynomial identities"


def test_criterion_02_ties_table():
    with criterion(2, "tournaments-with-ties d_{k,m} table, k<=4, m<=5", 1.0) as info:
        assert _table_check("tournaments_ties", golden.TIES_TABLE) == 25
        info["note"] = "25/25 polynomial identities"


def test_criterion_03_graph_connectivity_coefficients():
    with criterion(3, "simple graphs -d_{k,1} = [1, 0, 2, 24]", 1.0):
        d = d_coefficients(get_model("simple_graphs"), 1, 4).d
        assert [-x for x in d[1:]] == [1, 0, 2, 24]


def test_criterion_04_triangulation_sequence():
    with criterion(4, "triangulations -d_{2k,1} = [15, 9045, 30085425, 282543711975]", 1.0):
        d = d_coefficients(get_model("triangulations"), 1, 4).d
        assert [-x for x in d[1:]] == [15, 9045, 30085425, 282543711975]


def test_criterion_05_quarter_probability():
    with criterion(5, "G(n,1/4) signed coefficients [-1, 2/3, -10/27, 8/729]", 1.0):
        p = Fraction(1, 4)
        d = d_coefficients(get_model("er", rho=p / (1 - p)), 1, 4).d
        assert d[1:] == [Fraction(-1), Fraction(2, 3), Fraction(-10, 27), Fraction(8, 729)]


def test_criterion_06_oracle_equivalence():
    with criterion(6, "enumeration oracle equals engine (k<=4, m<=5); graph mass to k=6", 60.0) as info:
        er, ties = get_model("er"), get_model("tournaments_ties")
        checks = 0
        for m in range(1, 6):
            p_row, q_row = d_coefficients(er, m, 4).d, d_coefficients(ties, m, 4).d
            for k in range(5):
                assert p_polynomial(k, m) == p_row[k], f"P k={k} m={m}"
                assert q_polynomial(k, m) == q_row[k], f"Q k={k} m={m}"
                checks += 2
        for k in range(7):
            assert enumerate_graph_components(k).total() == (rho + 1) ** (k * (k - 1) // 2)
        info["note"] = f"{checks} polynomial equalities, 7 mass checks"


def _random_series(rng, order, c0=None, c1=None):
    cs = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(order + 1)]
    if c0 is not None:
        cs[0] = Fraction(c0)
    if c1 is not None:
        cs[1] = Fraction(c1)
    return Egf(tuple(cs))


def test_criterion_07_identities():
    with criterion(7, "equipotence to order 30, round trips to 20, Leibniz to 19", 5.0) as info:
        assert equipotence_check(30)
        rng = random.Random(20240611)
        N = 20
        trials = 3
        for _ in range(trials):
            a = _random_series(rng, N, c0=1)
            assert egf_mul(a, egf_mult_inverse(a)) == one_series(N)
            assert egf_exp(egf_log(a)) == a
            b = _random_series(rng, N, c0=0)
            assert egf_log(egf_exp(b)) == b
            c = _random_series(rng, N, c0=0, c1=1)
            assert egf_compose(c, egf_comp_inverse(c)) == monomial(1, N)
            x, y = _random_series(rng, N), _random_series(rng, N)
            lhs = egf_derivative(egf_mul(x, y))
            rhs = egf_mul(egf_derivative(x), y.truncate(N - 1)) + egf_mul(x.truncate(N - 1), egf_derivative(y))
            assert lhs.order == N - 1 and lhs == rhs
        info["note"] = f"{trials} random inputs per identity"


def _catalog_instances():
    extra = {"multigraphs": [{"d": 1}, {"d": 2}, {"d": 3}], "p_angulations": [{"P": 3}, {"P": 4}, {"P": 5}],
             "gem": [{"D": 2}, {"D": 3}]}
    for entry in list_models():
        for params in extra.get(entry["id"], [{}]):
            yield get_model(entry["id"], **params)


def test_criterion_08_probability_completeness():
    with criterion(8, "sum over m of exact probabilities is 1, n<=8, all catalog models", 10.0) as info:
        sums = 0
        for model in _catalog_instances():
            weights = [Fraction(1, 3), Fraction(1), Fraction(3)] if model.rebuild is not None else [None]
            for r in weights:
                inst = model.specialize(r) if r is not None else model
                for n in range(9):
                    if not inst.on_stride(n) or inst.weight(n) == 0:
                        continue
                    ms = [0] if n == 0 else range(1, n + 1)
                    assert sum(exact_probability(inst, m, n) for m in ms) == 1, (inst.id, inst.params, n)
                    sums += 1
        info["note"] = f"{sums} exact sums"


def test_criterion_09_convergence():
    with criterion(9, "graph residual ratio <= 10 (n=10..25); qss P(2 components) ~ 1/(4n)", 30.0) as info:
        report = convergence_report(get_model("simple_graphs"), 1, range(10, 26), 3)
        assert len(report.rows) == 16 and all(row.next_k == 4 for row in report.rows)
        assert report.max_ratio <= 10, float(report.max_ratio)
        qss = get_model("qss")
        scaled = {n: exact_probability(qss, 2, n) * 4 * n for n in range(10, 41)}
        to_leading = {n: exact_probability(qss, 2, n) / leading_term(qss, 2, n).value for n in range(10, 41)}
        assert all(abs(v - 1) <= Fraction(1, 5) for v in to_leading.values())
        assert all(abs(scaled[n] - 1) <= Fraction(1, 5) for n in range(13, 41))
        outside = [n for n in range(10, 41) if abs(scaled[n] - 1) > Fraction(1, 5)]
        assert outside == [10, 11, 12]
        info["note"] = (
            f"max graph ratio {float(report.max_ratio):.3f}; qss exact/leading within 20% on n=10..40; "
            f"exact*4n within 20% on n=13..40, measured {', '.join(f'{float(scaled[n]):.3f}' for n in outside)} "
            f"at n={outside[0]}..{outside[-1]} (documented deviation)"
        )


def test_criterion_10_column_sums():
    with criterion(10, "column sums of both tables: 1 at k=0, 0 for k=1..4", 1.0):
        for model_id in ("er", "tournaments_ties"):
            model = get_model(model_id)
            cols = [Poly()] * 5
            for m in range(1, 6):
                cols = [c + d for c, d in zip(cols, d_coefficients(model, m, 4).d)]
            assert cols == [Poly((1,))] + [Poly()] * 4, model_id
        assert Decomp.SEQ is get_model("tournaments_ties").kind


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except Exception:
                failed += 1
    print("\n".join(RESULTS))
    sys.exit(1 if failed else 0)
