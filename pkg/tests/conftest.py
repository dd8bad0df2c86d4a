import pytest
from hypothesis import settings, strategies as st

from sigbasis.order import DEGLEX, DEGREVLEX, LEX
from sigbasis.poly import Ring

settings.register_profile("default", deadline=None)
settings.load_profile("default")

MONOMIAL_ORDERS = [LEX, DEGLEX, DEGREVLEX]
NVARS = 3


def power_products(nvars=NVARS, max_exp=4):
    return st.tuples(*[st.integers(0, max_exp)] * nvars)


def terms(nvars=NVARS, max_comp=2):
    return st.tuples(power_products(nvars), st.integers(0, max_comp))


def rationals(bound=5):
    return st.fractions(min_value=-bound, max_value=bound, max_denominator=4)


@st.composite
def polynomials(draw, ring, max_terms=4, max_exp=3, min_terms=0):
    items = draw(st.lists(st.tuples(power_products(ring.nvars, max_exp), rationals()),
                          min_size=min_terms, max_size=max_terms))
    d = {}
    for pp, c in items:
        d[pp] = d.get(pp, 0) + c
    return ring.from_dict(d)


@pytest.fixture
def xyz():
    return Ring("x,y,z", "degrevlex")


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    summary = getattr(module, "SUMMARY", None)
    if summary:
        terminalreporter.section("acceptance criteria")
        for criterion in sorted(summary):
            terminalreporter.write_line(summary[criterion])
