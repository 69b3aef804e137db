"""Shared fixtures and parsing shortcuts for the test suite."""

import random

import pytest

from torsion_border import (
    MonomialOrder,
    OrderIdealData,
    parse_poly,
    validate_mapping,
)

XY = ("x", "y")

# lex with x below y (y is the most significant variable)
LEX_X_BELOW_Y = MonomialOrder("lex", (1, 0))
# deglex with x above y
DEGLEX_X_ABOVE_Y = MonomialOrder("deglex", (0, 1))


def p(text, vars=XY):
    return parse_poly(vars, text)


def polys(*texts, vars=XY):
    return [parse_poly(vars, t) for t in texts]


def mixed_torsion_order_ideal():
    """Order ideal with ideals <0>, <4>, <3>, <2> at 1, x, y, x^2."""
    mapping = validate_mapping(
        2, [((0, 0), [0]), ((1, 0), [4]), ((0, 1), [3]), ((2, 0), [2])]
    )
    return OrderIdealData(mapping)


def plateau_order_ideal():
    """Order ideal free on {1, x, y, xy, y^2} with torsion <2> at x^2, x^2y."""
    mapping = validate_mapping(
        2,
        [
            ((0, 0), [0]),
            ((1, 0), [0]),
            ((0, 1), [0]),
            ((1, 1), [0]),
            ((0, 2), [0]),
            ((2, 0), [2]),
            ((2, 1), [2]),
        ],
    )
    return OrderIdealData(mapping)


WORKED_PREBASIS_STRINGS = [
    "x^3-x",
    "y^3-y",
    "xy^2-xy",
    "x^2y^2-x^2y",
    "x^3y-xy",
    "2x^2y-y^2-y",
    "2x^2+2xy-y^2-2x-y",
]


@pytest.fixture
def rng():
    return random.Random(20260809)
