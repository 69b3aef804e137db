"""Polynomial grammar, formatting round-trips and problem files."""

import pytest

from conftest import DEGLEX_X_ABOVE_Y, LEX_X_BELOW_Y, p
from torsion_border import Polynomial, format_poly, load_problem_text, parse_poly
from torsion_border.errors import (
    ExponentOverflow,
    ParseError,
    ProblemFormatError,
    UnknownVariable,
)


def test_parse_examples():
    assert p("2x^2y - y^2 - y") == Polynomial(2, {(2, 1): 2, (0, 2): -1, (0, 1): -1})
    assert p("0").is_zero
    assert p("x^4+2x^3y^2+x^2+4xy+15") == Polynomial(
        2, {(4, 0): 1, (3, 2): 2, (2, 0): 1, (1, 1): 4, (0, 0): 15}
    )


def test_parse_flexible_syntax():
    assert p(" - y + 2 * x ") == p("2x - y")
    assert p("3*x*y") == p("3xy")
    assert p("x^1") == p("x")
    assert p("x x") == p("x^2")
    assert p("5 - -0") == p("5")


def test_multicharacter_variables():
    assert parse_poly(["alpha", "beta"], "2alpha^2beta") == Polynomial(2, {(2, 1): 2})
    # a declared name wins over a split of shorter names
    q = parse_poly(["x", "y", "xy"], "xy")
    assert q == Polynomial(3, {(0, 0, 1): 1})


def test_parse_errors():
    with pytest.raises(UnknownVariable) as e:
        p("2z + 1")
    assert e.value.position == 1
    with pytest.raises(ParseError):
        p("2 +")
    with pytest.raises(ParseError):
        p("x^0")
    with pytest.raises(ParseError):
        p("x^-2")
    with pytest.raises(ExponentOverflow):
        p("x^99999999")
    with pytest.raises(ParseError):
        p("")


def test_format_examples():
    assert format_poly(DEGLEX_X_ABOVE_Y, ("x", "y"), Polynomial.zero(2)) == "0"
    remainder = p("15+2x+y+y^2+4xy")
    assert format_poly(DEGLEX_X_ABOVE_Y, ("x", "y"), remainder) == "4xy + y^2 + 2x + y + 15"
    assert format_poly(DEGLEX_X_ABOVE_Y, ("x", "y"), p("x - y")) == "x - y"
    assert format_poly(DEGLEX_X_ABOVE_Y, ("x", "y"), p("-x^2 + 1")) == "-x^2 + 1"


def test_roundtrip_random(rng):
    for _ in range(300):
        terms = {}
        for _ in range(rng.randint(0, 6)):
            mon = (rng.randint(0, 4), rng.randint(0, 4))
            terms[mon] = rng.randint(-30, 30)
        f = Polynomial(2, terms)
        for order in (LEX_X_BELOW_Y, DEGLEX_X_ABOVE_Y):
            assert p(format_poly(order, ("x", "y"), f)) == f


def test_format_is_canonical_for_source_strings():
    sources = [
        "2x^2y - y^2 - y",
        "x^4+2x^3y^2+x^2+4xy+15",
        "2x^2+2xy-y^2-2x-y",
        "4y+2x",
    ]
    for s in sources:
        f = p(s)
        txt = format_poly(DEGLEX_X_ABOVE_Y, ("x", "y"), f)
        assert format_poly(DEGLEX_X_ABOVE_Y, ("x", "y"), p(txt)) == txt


PROBLEM = """
{
  "vars": ["x", "y"],
  "order": {"kind": "lex", "priority": ["y", "x"]},
  "ideal_generators": ["3x", "4y+2x", "x^2", "y^2"],
  "mapping": [
    {"monomial": "1", "generators": [0]},
    {"monomial": "x", "generators": [4]},
    {"monomial": "y", "generators": [3]},
    {"monomial": "x^2", "generators": [2]}
  ],
  "query_polys": ["xy"]
}
"""


def test_load_problem():
    problem = load_problem_text(PROBLEM)
    assert problem.vars == ("x", "y")
    assert problem.order == LEX_X_BELOW_Y
    assert len(problem.ideal_generators) == 4
    assert problem.mapping.query((1, 0)).generator == 4
    assert problem.query_polys == [p("xy")]


def test_load_problem_rejects_bad_input():
    with pytest.raises(ProblemFormatError):
        load_problem_text("[1, 2]")
    with pytest.raises(ProblemFormatError):
        load_problem_text('{"vars": []}')
    with pytest.raises(ProblemFormatError):
        load_problem_text('{"vars": ["x"], "bogus": 1}')
    with pytest.raises(ProblemFormatError):
        load_problem_text('{"vars": ["x"], "ideal_generators": ["x + z"]}')
    with pytest.raises(ProblemFormatError):
        load_problem_text('{"vars": ["x"], "mapping": [{"monomial": "2x", "generators": [1]}]}')
    with pytest.raises(ProblemFormatError):
        load_problem_text('{"vars": ["x", "x"]}')


def test_problem_require():
    problem = load_problem_text('{"vars": ["x"]}')
    with pytest.raises(ProblemFormatError):
        problem.require("ideal_generators")
