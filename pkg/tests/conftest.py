import sys
from fractions import Fraction

from hypothesis import settings, strategies as st

from antiseq.algebra import Poly
from antiseq.series import Egf

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def polys(max_degree: int = 4):
    return st.lists(small_fractions, max_size=max_degree + 1).map(Poly)


def egfs(order: int, c0=None, c1=None, ring="rational"):
    """Random rational series of the given order, optionally pinning c0/c1."""

    def build(cs):
        cs = list(cs)
        if c0 is not None:
            cs[0] = Fraction(c0)
        if c1 is not None and order >= 1:
            cs[1] = Fraction(c1)
        return Egf(tuple(cs), ring)

    return st.lists(small_fractions, min_size=order + 1, max_size=order + 1).map(build)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
