"""Exhaustive enumeration of small labeled graphs and tournaments with ties.

These routines never touch the series code.  They walk every structure
and count its components directly, which makes them the ground truth the
species engine is checked against.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .algebra import Poly, binomial, format_poly

GRAPH_CAP = 6
TOURNAMENT_CAP = 5


class OracleError(ValueError):
    pass


@dataclass
class ComponentHistogram:
    """Total weight of the structures on ``[k]`` by number of components."""

    k: int
    by_components: dict

    def total(self) -> Poly:
        return sum(self.by_components.values(), Poly())

    def at(self, rho) -> dict:
        return {c: w(rho) for c, w in self.by_components.items()}

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "buckets": {str(c): format_poly(w) for c, w in sorted(self.by_components.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "ComponentHistogram":
        return cls(data["k"], {int(c): parse_poly(w) for c, w in data["buckets"].items()})


_TERM = re.compile(r"([+-]?)(?:\((\d+(?:/\d+)?)\)|(\d+(?:/\d+)?))?(rho(?:\^(\d+))?)?")


def parse_poly(text: str) -> Poly:
    """Inverse of :func:`antiseq.algebra.format_poly`."""
    text = text.replace(" ", "")
    if text == "0":
        return Poly()
    coeffs: dict[int, Fraction] = {}
    pos = 0
    while pos < len(text):
        match = _TERM.match(text, pos)
        if not match or match.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        sign, paren, plain, mono, exp = match.groups()
        if paren is None and plain is None and mono is None:
            raise ValueError(f"cannot parse polynomial {text!r}")
        c = Fraction(paren or plain or 1)
        if sign == "-":
            c = -c
        deg = 0 if mono is None else int(exp or 1)
        coeffs[deg] = coeffs.get(deg, Fraction(0)) + c
        pos = match.end()
    top = max(coeffs)
    return Poly(coeffs.get(i, 0) for i in range(top + 1))


def _chunks(total: int, workers: int) -> list[tuple[int, int]]:
    step = -(-total // workers)
    return [(lo, min(total, lo + step)) for lo in range(0, total, step)]


def _run(task, k: int, total: int, workers: int) -> Counter:
    """Apply ``task(k, lo, hi)`` over index ranges and merge the counters."""
    if workers <= 1:
        return _run_serial(task, k, total)
    merged: Counter = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(task, *zip(*[(k, lo, hi) for lo, hi in _chunks(total, workers)])):
            merged.update(part)
    return merged


@lru_cache(maxsize=None)
def _run_serial(task, k: int, total: int) -> Counter:
    # callers only read the counter; sharing the cached object is safe
    return task(k, 0, total)


# -- graphs -------------------------------------------------------------------


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _graph_task(k: int, lo: int, hi: int) -> Counter:
    edges = list(itertools.combinations(range(k), 2))
    counts: Counter = Counter()
    for mask in range(lo, hi):
        parent = list(range(k))
        comps = k
        for bit, (u, v) in enumerate(edges):
            if mask >> bit & 1:
                ru, rv = _find(parent, u), _find(parent, v)
                if ru != rv:
                    parent[ru] = rv
                    comps -= 1
        counts[comps, mask.bit_count()] += 1
    return counts


def enumerate_graph_components(k: int, cap: int = GRAPH_CAP, workers: int = 1) -> ComponentHistogram:
    """Weights ``rho^edges`` of all graphs on ``[k]``, bucketed by component count."""
    if k < 0:
        raise OracleError("k must be nonnegative")
    if k > cap:
        raise OracleError(f"k={k} exceeds the graph enumeration cap {cap}")
    if k == 0:
        return ComponentHistogram(0, {0: Poly((1,))})
    n_edges = k * (k - 1) // 2
    counts = _run(_graph_task, k, 1 << n_edges, workers)
    buckets: dict[int, list[int]] = {}
    for (comps, e), c in counts.items():
        buckets.setdefault(comps, [0] * (n_edges + 1))[e] += c
    return ComponentHistogram(k, {c: Poly(v) for c, v in sorted(buckets.items())})


# -- tournaments with ties ------------------------------------------------------


def count_scc(out: list[int]) -> int:
    """Number of strongly connected components (Tarjan) of a digraph on bitmasks."""
    n = len(out)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    found = 0

    def visit(v: int) -> None:
        nonlocal counter, found
        index[v] = low[v] = counter
        counter += 1
        stack.append(v)
        on_stack[v] = True
        succ = out[v]
        while succ:
            w = (succ & -succ).bit_length() - 1
            succ &= succ - 1
            if index[w] < 0:
                visit(w)
                low[v] = min(low[v], low[w])
            elif on_stack[w]:
                low[v] = min(low[v], index[w])
        if low[v] == index[v]:
            found += 1
            while True:
                w = stack.pop()
                on_stack[w] = False
                if w == v:
                    break

    for v in range(n):
        if index[v] < 0:
            visit(v)
    return found


def _tournament_task(k: int, lo: int, hi: int) -> Counter:
    pairs = list(itertools.combinations(range(k), 2))
    counts: Counter = Counter()
    for idx in range(lo, hi):
        out = [0] * k
        ties = 0
        code = idx
        # most significant digit first, so idx order is lexicographic in pair states
        for i, j in reversed(pairs):
            state = code % 3
            code //= 3
            if state == 0:
                out[i] |= 1 << j
            elif state == 1:
                out[j] |= 1 << i
            else:
                out[i] |= 1 << j
                out[j] |= 1 << i
                ties += 1
        counts[count_scc(out), ties] += 1
    return counts


def _shifted_power(t: int) -> Poly:
    # (rho - 1)^t expanded
    return Poly(binomial(t, i) * (-1) ** (t - i) for i in range(t + 1))


def enumerate_tournament_components(k: int, cap: int = TOURNAMENT_CAP, workers: int = 1) -> ComponentHistogram:
    """Weights ``(rho-1)^ties`` of all tournaments with ties on ``[k]`` by SCC count."""
    if k < 0:
        raise OracleError("k must be nonnegative")
    if k > cap:
        raise OracleError(f"k={k} exceeds the tournament enumeration cap {cap}")
    if k == 0:
        return ComponentHistogram(0, {0: Poly((1,))})
    n_pairs = k * (k - 1) // 2
    counts = _run(_tournament_task, k, 3 ** n_pairs, workers)
    buckets: dict[int, Poly] = {}
    for (comps, ties), c in sorted(counts.items()):
        buckets[comps] = buckets.get(comps, Poly()) + _shifted_power(ties) * c
    return ComponentHistogram(k, dict(sorted(buckets.items())))


# -- closed-form coefficient formulas ------------------------------------------


def p_polynomial(k: int, m: int, cap: int = GRAPH_CAP, workers: int = 1) -> Poly:
    """Alternating-binomial sum of graph weights over component counts."""
    if m < 1:
        raise OracleError("m must be at least 1")
    hist = enumerate_graph_components(k, cap, workers)
    total = Poly()
    for comps, w in hist.by_components.items():
        c = binomial(comps, m - 1)
        if c:
            total = total + w * ((-1) ** (comps - (m - 1)) * c)
    return total


def irreducible_sequence_weights(irreducible: list, j: int, k: int) -> Poly:
    """Weight of ordered sequences of ``j`` irreducible blocks covering ``[k]``.

    ``irreducible[s]`` is the total weight of irreducible structures on
    ``[s]``; block label sets are counted with multinomial coefficients.
    """
    if j == 0:
        return Poly((1,)) if k == 0 else Poly()
    total = Poly()
    for first in range(1, k - j + 2):
        rest = irreducible_sequence_weights(irreducible, j - 1, k - first)
        if rest:
            total = total + irreducible[first] * rest * math.comb(k, first)
    return total


def it_weights(k: int, j: int, method: str = "direct", cap: int = TOURNAMENT_CAP, workers: int = 1) -> Poly:
    """``it_k^{(j)}``: total weight of tournaments with ties on ``[k]`` with ``j`` SCCs.

    ``method="direct"`` reads the enumeration bucket; ``"convolution"``
    rebuilds it from the irreducible buckets of sizes ``1..k``.
    """
    if j < 0:
        return Poly()
    if method == "direct":
        if k == 0:
            return Poly((1,)) if j == 0 else Poly()
        return enumerate_tournament_components(k, cap, workers).by_components.get(j, Poly())
    if method == "convolution":
        irreducible = [Poly()] + [
            enumerate_tournament_components(s, cap, workers).by_components.get(1, Poly()) for s in range(1, k + 1)
        ]
        return irreducible_sequence_weights(irreducible, j, k)
    raise OracleError(f"unknown method {method!r}")


def q_polynomial(k: int, m: int, method: str = "direct", cap: int = TOURNAMENT_CAP, workers: int = 1) -> Poly:
    """``m (it_k^{(m-1)} - 2 it_k^{(m)} + it_k^{(m+1)})``."""
    if m < 1:
        raise OracleError("m must be at least 1")
    it = [it_weights(k, j, method, cap, workers) for j in (m - 1, m, m + 1)]
    return (it[0] - it[1] * 2 + it[2]) * m


def parity_difference(k: int, model: Union[str, object] = "simple_graphs") -> Fraction:
    """``#{odd component count} - #{even component count}`` on ``[k]``.

    Simple graphs are enumerated; any other unweighted SET model falls back
    to its exact component series.
    """
    if model == "simple_graphs":
        hist = enumerate_graph_components(k)
        return sum((w(1) * (1 if c % 2 else -1) for c, w in hist.by_components.items()), Fraction(0))
    from .engine import Decomp, component_series

    if isinstance(model, str) or model.kind is not Decomp.SET or model.symbolic:
        raise OracleError(f"parity difference unsupported for model {getattr(model, 'id', model)!r}")
    if not model.on_stride(k):
        return Fraction(0)
    A = model.series(k)
    slot = k // model.stride
    return sum(
        (component_series(A, Decomp.SET, c).weight(slot) * (1 if c % 2 else -1) for c in range(k + 1)),
        Fraction(0),
    )
