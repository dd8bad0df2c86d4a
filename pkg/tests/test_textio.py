import pytest
from hypothesis import given, settings, strategies as st

from conftest import MONOMIAL_ORDERS, polynomials
from sigbasis.coeff import rat
from sigbasis.poly import Ring
from sigbasis.textio import ParseError, format_poly, format_system, parse_system


def test_parse_worked_example_line():
    sf = parse_system("X^2*Z^3 + 3*X^2*Y")
    assert sf.variables == ["X", "Z", "Y"]
    (p,) = sf.polynomials
    x, z, y = sf.ring.gens
    assert p == x**2 * z**3 + 3 * x**2 * y


def test_parse_zero_and_products():
    sf = parse_system("vars: x\n0\n(x+1)*(x-1)\n")
    zero, diff = sf.polynomials
    x = sf.ring.gens[0]
    assert zero.is_zero()
    assert diff == x**2 - 1


def test_parse_header_comments_and_rationals():
    text = "# a comment\nvars: X, Y, Z\n\n3/4*X^3*Y^2 - 2*Y^4\n-4*Y^3*Z - 3*X^2*Y^2\n"
    sf = parse_system(text)
    X, Y, Z = sf.ring.gens
    assert sf.variables == ["X", "Y", "Z"]
    assert sf.polynomials == [rat(3, 4) * X**3 * Y**2 - 2 * Y**4, -4 * Y**3 * Z - 3 * X**2 * Y**2]


def test_precedence():
    sf = parse_system("vars: x, y\n-x^2\n2*x - y*3 - -x\n(x-y)^2\n")
    x, y = sf.ring.gens
    a, b, c = sf.polynomials
    assert a == -(x**2)
    assert b == 3 * x - 3 * y
    assert c == x**2 - 2 * x * y + y**2


def test_explicit_variables_argument():
    sf = parse_system("X*Y*Z + 2*Y^2", variables=["Z", "Y", "X"])
    assert sf.ring.names == ("Z", "Y", "X") or list(sf.ring.names) == ["Z", "Y", "X"]


@pytest.mark.parametrize("text, line, col", [
    ("x +* y", 1, 4),
    ("x y", 1, 3),
    ("2x", 1, 2),
    ("x^-1", 1, 3),
    ("x^1.5", 1, 4),
    ("x^y", 1, 3),
    ("x^2^3", 1, 4),
    ("(x + 1", 1, 7),
    ("x + 1)", 1, 6),
    ("x $ y", 1, 3),
    ("1/0*x", 1, 3),
    ("1/x", 1, 3),
    ("vars: x\nx + q", 2, 5),
    ("x\n\n  x +", 3, 6),
    ("x\nvars: x", 2, 1),
    ("vars: x, x\nx", 1, 1),
    ("()", 1, 2),
    ("*x", 1, 1),
])
def test_reject_corpus(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_system(text)
    assert (info.value.line, info.value.col) == (line, col)
    assert f"line {line}, column {col}" in str(info.value)


def test_format_examples():
    r = Ring("X,Y", "degrevlex")
    X, Y = r.gens
    assert format_poly(rat(3, 4) * X**3 * Y**2 - 2 * Y**4) == "3/4*X^3*Y^2 - 2*Y^4"
    assert format_poly(X**2 - 1) == "X^2 - 1"
    assert format_poly(r.zero) == "0"
    assert format_poly(-X) == "-X"


@pytest.mark.parametrize("order", MONOMIAL_ORDERS, ids=str)
@settings(max_examples=300)
@given(data=st.data())
def test_format_parse_round_trip(order, data):
    ring = Ring("x,y,z", order)
    polys = data.draw(st.lists(polynomials(ring), max_size=3))
    text = format_system(polys, ring)
    sf = parse_system(text, order)
    assert sf.polynomials == polys
    # parse(format(parse(s))) = parse(s)
    assert parse_system(format_system(sf.polynomials, sf.ring), order).polynomials == sf.polynomials
