"""Catalog of labeled structure families and the gargantuan diagnostic."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from . import algebra
from .algebra import POLY_RHO, RATIONAL, Poly, double_factorial
from .engine import Decomp
from .series import Egf, egf_compress, egf_log


class ModelError(ValueError):
    pass


@dataclass(frozen=True)
class ModelSpec:
    """A named family: exact total weights plus its decomposition kind."""

    id: str
    kind: Decomp
    ring: str
    stride: int
    params: dict
    weight_fn: Callable[[int], object] = field(repr=False, compare=False)
    description: str = ""
    # (tag, value) of the simplified dominant term, for families that have one
    leading_form: Optional[Callable[[int, int], tuple]] = field(default=None, repr=False, compare=False)
    # rebuilds the model at a numeric rho; None for unweighted families
    rebuild: Optional[Callable[[Fraction], "ModelSpec"]] = field(default=None, repr=False, compare=False)

    def weight(self, n: int):
        if n < 0:
            raise ModelError("size must be nonnegative")
        return algebra.coerce(self.weight_fn(n), self.ring)

    def raw_series(self, order: int) -> Egf:
        return Egf.from_weights([self.weight(n) for n in range(order + 1)], self.ring)

    def series(self, order: int) -> Egf:
        """Series to raw order ``order``, compressed by the model's stride."""
        return egf_compress(self.raw_series(order), self.stride)

    @property
    def symbolic(self) -> bool:
        return self.ring == POLY_RHO

    def specialize(self, rho) -> "ModelSpec":
        """The same family at a numeric ``rho`` (rational ring)."""
        if rho is None:
            if self.symbolic:
                raise ModelError(f"model {self.id!r} is symbolic in rho; a numeric rho is required")
            return self
        rho = Fraction(rho)
        if self.rebuild is None:
            raise ModelError(f"model {self.id!r} has no rho parameter")
        return self.rebuild(rho)

    def on_stride(self, n: int) -> bool:
        return n % self.stride == 0


def weight_sequence(model: ModelSpec, n: int):
    return model.weight(n)


# -- families ---------------------------------------------------------------


def _pairs(n: int) -> int:
    return n * (n - 1) // 2


def _check_rho(rho) -> Optional[Fraction]:
    if rho is None:
        return None
    rho = Fraction(rho)
    if rho <= 0:
        raise ModelError("rho must be positive")
    return rho


def _graph_total(rho: Optional[Fraction]) -> Callable[[int], object]:
    base = Poly((1, 1)) if rho is None else rho + 1
    return lambda n: base ** _pairs(n)


def _er_form(rho: Optional[Fraction]):
    if rho is None:
        return None
    q = 1 / (rho + 1)

    def form(m: int, n: int):
        value = algebra.binomial(n, m - 1) * q ** (n * (m - 1)) / q ** (m * (m - 1) // 2)
        return "binom(n,m-1) q^(n(m-1)) / q^(m(m-1)/2)", value

    return form


def simple_graphs() -> ModelSpec:
    return ModelSpec(
        "simple_graphs", Decomp.SET, RATIONAL, 1, {},
        lambda n: 2 ** _pairs(n),
        "labeled simple graphs, 2^C(n,2); SET of connected graphs",
        _er_form(Fraction(1)),
    )


def multigraphs(d: int) -> ModelSpec:
    d = int(d)
    if d < 1:
        raise ModelError("multigraphs need d >= 1")
    return ModelSpec(
        "multigraphs", Decomp.SET, RATIONAL, 1, {"d": d},
        lambda n: (d + 1) ** _pairs(n),
        "labeled d-multigraphs, (d+1)^C(n,2)",
        _er_form(Fraction(d)),
    )


def er(rho=None) -> ModelSpec:
    rho = _check_rho(rho)
    return ModelSpec(
        "er", Decomp.SET, POLY_RHO if rho is None else RATIONAL, 1,
        {"rho": "symbolic" if rho is None else algebra.format_rational(rho)},
        _graph_total(rho),
        "Erdos-Renyi graphs weighted rho^edges, (rho+1)^C(n,2)",
        _er_form(rho),
        er,
    )


def tournaments() -> ModelSpec:
    return ModelSpec(
        "tournaments", Decomp.SEQ, RATIONAL, 1, {},
        lambda n: 2 ** _pairs(n),
        "labeled tournaments, 2^C(n,2); SEQ of irreducible tournaments",
    )


def tournaments_ties(rho=None) -> ModelSpec:
    rho = _check_rho(rho)
    return ModelSpec(
        "tournaments_ties", Decomp.SEQ, POLY_RHO if rho is None else RATIONAL, 1,
        {"rho": "symbolic" if rho is None else algebra.format_rational(rho)},
        _graph_total(rho),
        "tournaments with ties weighted (rho-1)^ties, (rho+1)^C(n,2); SEQ of irreducible ones",
        None,
        tournaments_ties,
    )


def qss() -> ModelSpec:
    def form(m: int, n: int):
        return "1/(4n)^(m-1)", Fraction(1, (4 * n) ** (m - 1))

    return ModelSpec(
        "qss", Decomp.SET, RATIONAL, 1, {},
        lambda n: double_factorial(2 * n - 1) ** 2,
        "quadratic square-tiled surfaces, ((2n-1)!!)^2",
        form,
    )


def p_angulations(P: int) -> ModelSpec:
    P = int(P)
    if P < 3:
        raise ModelError("p_angulations need P >= 3")
    stride = 1 if P % 2 == 0 else 2

    def weight(n: int) -> int:
        return 0 if (P * n) % 2 else double_factorial(P * n - 1)

    def form(m: int, n: int):
        mf = math.factorial(m - 1)
        if P % 2 == 0:
            base = Fraction(double_factorial(P - 1), P ** (P // 2) * n ** (P // 2 - 1))
            return "1/(m-1)! ((P-1)!!/P^(P/2) / n^(P/2-1))^(m-1)", base ** (m - 1) / mf
        half = n // 2
        base = Fraction(double_factorial(2 * P - 1), P ** P * 2 ** (P - 1) * half ** (P - 2))
        return "1/(m-1)! ((2P-1)!!/(P^P 2^(P-1)) / n^(P-2))^(m-1), size 2n", base ** (m - 1) / mf

    return ModelSpec(
        "p_angulations", Decomp.SET, RATIONAL, stride, {"P": P},
        weight,
        "surfaces glued from n labeled P-gons, (Pn-1)!!",
        form,
    )


def triangulations() -> ModelSpec:
    return replace(p_angulations(3), id="triangulations", description="surfaces glued from n labeled triangles")


def gem(D: int) -> ModelSpec:
    D = int(D)
    if D < 2:
        raise ModelError("gem needs D >= 2")

    def weight(n: int) -> int:
        return 0 if n % 2 else double_factorial(n - 1) ** (D + 1)

    def form(m: int, n: int):
        half = n // 2
        value = Fraction(1, 2 ** D * half ** (D - 1)) ** (m - 1) / math.factorial(m - 1)
        return "1/(m-1)! (1/(2^D n^(D-1)))^(m-1), size 2n", value

    return ModelSpec(
        "gem", Decomp.SET, RATIONAL, 2, {"D": D},
        weight,
        "graph encoded manifolds of dimension D, ((2n-1)!!)^(D+1) on 2n simplices",
        form,
    )


@lru_cache(maxsize=64)
def _connected_graph_weights(order: int, rho: Optional[Fraction]) -> tuple:
    ring = POLY_RHO if rho is None else RATIONAL
    total = _graph_total(rho)
    G = Egf.from_weights([total(n) for n in range(order + 1)], ring)
    return tuple(egf_log(G).weights())


def connected_graphs(rho=None) -> ModelSpec:
    rho = _check_rho(rho)

    def weight(n: int):
        # round the cache key up so that consecutive sizes share one log
        top = max(16, 1 << max(0, n).bit_length())
        return _connected_graph_weights(top, rho)[n]

    return ModelSpec(
        "connected_graphs", Decomp.CYC, POLY_RHO if rho is None else RATIONAL, 1,
        {"rho": "symbolic" if rho is None else algebra.format_rational(rho)},
        weight,
        "connected graphs as CYC of irreducible tournaments with ties",
        None,
        connected_graphs,
    )


def constant_test() -> ModelSpec:
    return ModelSpec(
        "constant_test", Decomp.SET, RATIONAL, 1, {},
        math.factorial,
        "permutations, n!: normalized sequence a_n = 1 (not gargantuan)",
    )


@dataclass(frozen=True)
class _Entry:
    factory: Callable[..., ModelSpec]
    kind: Decomp
    params: dict
    description: str


_CATALOG: dict[str, _Entry] = {
    "simple_graphs": _Entry(simple_graphs, Decomp.SET, {}, "labeled simple graphs"),
    "multigraphs": _Entry(multigraphs, Decomp.SET, {"d": {"type": "int", "min": 1, "required": True}},
                          "labeled d-multigraphs"),
    "er": _Entry(er, Decomp.SET, {"rho": {"type": "rational", "min_exclusive": 0, "required": False}},
                 "Erdos-Renyi G(n,p) graphs, rho = p/(1-p); symbolic when rho is omitted"),
    "tournaments": _Entry(tournaments, Decomp.SEQ, {}, "labeled tournaments"),
    "tournaments_ties": _Entry(tournaments_ties, Decomp.SEQ,
                               {"rho": {"type": "rational", "min_exclusive": 0, "required": False}},
                               "tournaments with ties, weight (rho-1) per tie"),
    "qss": _Entry(qss, Decomp.SET, {}, "quadratic square-tiled surfaces"),
    "p_angulations": _Entry(p_angulations, Decomp.SET, {"P": {"type": "int", "min": 3, "required": True}},
                            "P-angulated surfaces; stride 2 for odd P"),
    "triangulations": _Entry(triangulations, Decomp.SET, {}, "triangulated surfaces (P = 3), stride 2"),
    "gem": _Entry(gem, Decomp.SET, {"D": {"type": "int", "min": 2, "required": True}},
                  "graph encoded manifolds of dimension D, stride 2"),
    "connected_graphs": _Entry(connected_graphs, Decomp.CYC,
                               {"rho": {"type": "rational", "min_exclusive": 0, "required": False}},
                               "connected graphs decomposed as cycles of irreducible tournaments with ties"),
    "constant_test": _Entry(constant_test, Decomp.SET, {}, "permutations (normalized a_n = 1), probe failure case"),
}


def list_models() -> list[dict]:
    return [
        {"id": mid, "kind": e.kind.value, "params": e.params, "description": e.description}
        for mid, e in sorted(_CATALOG.items())
    ]


def model_ids() -> list[str]:
    return sorted(_CATALOG)


def get_model(model_id: str, **params) -> ModelSpec:
    """Instantiate a catalog family; unknown or missing parameters raise."""
    try:
        entry = _CATALOG[model_id]
    except KeyError:
        raise ModelError(f"unknown model {model_id!r}; known: {', '.join(model_ids())}") from None
    params = {k: v for k, v in params.items() if v is not None}
    unknown = set(params) - set(entry.params)
    if unknown:
        raise ModelError(f"model {model_id!r} does not take {', '.join(sorted(unknown))}")
    for name, schema in entry.params.items():
        if schema.get("required") and name not in params:
            raise ModelError(f"model {model_id!r} requires parameter {name}")
    return entry.factory(**params)


# -- gargantuan diagnostic ---------------------------------------------------


@dataclass
class GargantuanReport:
    """Finite-window evidence for the gargantuan property.

    ``cond_i_ratios`` lists ``(n, n*a_{n-1}/a_n)``; ``cond_ii_violations``
    lists ``(n, k)`` where ``|a_{k+1} a_{n-k-1}| > |a_k a_{n-k}|`` although
    ``2k+1 <= n``.  Indices are in stride units.  A pass is never a proof.
    """

    model: str
    n_max: int
    stride: int
    rho: Optional[Fraction]
    cond_i_ratios: list
    cond_i_flagged: bool
    cond_ii_violations: list
    verdict: str
    note: str = "finite-window only; heuristic check of the sufficient conditions"

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "n_max": self.n_max,
            "stride": self.stride,
            "rho": None if self.rho is None else algebra.format_rational(self.rho),
            "cond_i_ratios": [[n, algebra.format_rational(r)] for n, r in self.cond_i_ratios],
            "cond_i_flagged": self.cond_i_flagged,
            "cond_ii_violations": [list(v) for v in self.cond_ii_violations],
            "verdict": self.verdict,
            "note": self.note,
        }


def gargantuan_probe(model: ModelSpec, n_max: int, rho=None) -> GargantuanReport:
    """Check the ratio and convolution-tail conditions inside a finite window.

    The ratio ``n a_{n-1}/a_n`` must not increase over the last quarter of
    the window; ``|a_k a_{n-k}|`` must be non-increasing in ``k < n/2`` for
    every ``n`` in the upper half.  ``a_n`` is the normalized sequence of
    the stride-compressed series.
    """
    if model.rebuild is not None:
        rho = Fraction(1) if rho is None else Fraction(rho)
        if rho <= 0:
            raise ModelError("rho must be positive for weighted models")
        if model.symbolic:
            model = model.specialize(rho)
        else:
            rho = Fraction(model.params["rho"])
    else:
        rho = None
    a = list(model.series(n_max).coeffs)
    K = len(a) - 1

    ratios = []
    undefined = False
    for n in range(1, K + 1):
        if a[n] == 0:
            undefined = True
            continue
        ratios.append((n, n * a[n - 1] / a[n]))

    flagged = False
    tail_start = K - K // 4
    tail = [r for n, r in ratios if n >= tail_start]
    for prev, cur in zip(tail, tail[1:]):
        if cur > prev:
            flagged = True
            break

    # CYC families have a_0 = 0; the tail condition starts at the first nonzero slot
    k0 = next((k for k, v in enumerate(a) if v != 0), 0)
    violations = []
    for n in range(K // 2 + 1, K + 1):
        x = [abs(a[k] * a[n - k]) for k in range(n + 1)]
        for k in range(k0, n):
            if 2 * k + 1 > n:
                break
            if x[k + 1] > x[k]:
                violations.append((n, k))

    if flagged or violations:
        verdict = "fail"
    elif undefined or K < 4:
        verdict = "inconclusive"
    else:
        verdict = "pass"
    return GargantuanReport(model.id, n_max, model.stride, rho, ratios, flagged, violations, verdict)
