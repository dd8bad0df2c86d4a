import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import polynomials
from sigbasis.bench import random_system
from sigbasis.coeff import rat
from sigbasis.order import DEGREVLEX, POT, TOP
from sigbasis.poly import Ring, autoreduce
from sigbasis.sigcore import SigPoly, rb
from sigbasis.verify import (
    check_containment,
    cross_check,
    is_groebner_basis,
    is_groebner_basis_exhaustive,
    is_min_sig_gb,
)

ONE = (0, 0, 0)


@pytest.fixture
def xy():
    return Ring("x,y,z", "degrevlex")


def test_is_groebner_basis_examples(xy):
    x, y, _ = xy.gens
    assert is_groebner_basis([x, y])
    assert not is_groebner_basis([x * y - 1, x])
    assert is_groebner_basis([])
    assert is_groebner_basis([x, xy.zero, y])


def test_check_containment_examples(xy):
    x, _, _ = xy.gens
    assert check_containment([x**2], [x])
    assert not check_containment([x + 1], [x])
    assert check_containment([], [x])


def test_is_min_sig_gb_examples(xy):
    x, _, _ = xy.gens
    to = POT(DEGREVLEX)
    assert is_min_sig_gb([], to)
    assert not is_min_sig_gb([SigPoly((ONE, 0), x), SigPoly(((1, 0, 0), 1), x**2)], to)
    Z, Y, X = Ring("Z,Y,X", "degrevlex").gens
    basis, _ = rb([X**2 * Z**3 + 3 * X**2 * Y, X * Y * Z + 2 * Y**2], "degrevlex", "pot", "rat")
    assert is_min_sig_gb(basis, to)


def test_cross_check_examples(xy):
    x, _, _ = xy.gens
    report = cross_check([x])
    assert report.passed and report.reduced_basis == ["x"]
    Z, Y, X = Ring("Z,Y,X", "degrevlex").gens
    report = cross_check([X**2 * Z**3 + 3 * X**2 * Y, X * Y * Z + 2 * Y**2])
    assert report.passed
    assert report.sig_basis_size == 4 and report.sig_zero_reductions == 0
    listed = [rat(3, 4) * X**3 * Y**2 - 2 * Y**4, -4 * Y**3 * Z - 3 * X**2 * Y**2,
              X * Y * Z + 2 * Y**2, X**2 * Z**3 + 3 * X**2 * Y]
    assert report.reduced_basis == [str(p) for p in autoreduce(listed)]
    d = report.to_dict()
    assert d["passed"] is True and set(d["checks"]) == set(report.checks)
    assert "PASS" in str(report)


@pytest.mark.parametrize("order, position, rewrite",
                         list(itertools.product(["lex", "deglex", "degrevlex"], ["pot", "top"], ["rat", "add"])))
def test_cross_check_random_systems(order, position, rewrite):
    # the acceptance suite runs 50 seeds; this is the quick version
    for seed in range(100, 110):
        _, fs = random_system(seed, order=order)
        report = cross_check(fs, order, position, rewrite)
        assert report.passed, (seed, report.checks)


@settings(max_examples=300)
@given(st.data())
def test_fast_and_exhaustive_groebner_checks_agree(data):
    ring = Ring("x,y,z", data.draw(st.sampled_from(["lex", "deglex", "degrevlex"])))
    G = data.draw(st.lists(polynomials(ring, max_terms=3, max_exp=2), max_size=5))
    assert is_groebner_basis(G) == is_groebner_basis_exhaustive(G)
    basis, _ = rb([g for g in G], ring.order, TOP(ring.order), "rat")
    polys = [b.poly for b in basis]
    assert is_groebner_basis(polys) and is_groebner_basis_exhaustive(polys)
