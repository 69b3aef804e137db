"""Ideals of the integer coefficient ring and canonical coset arithmetic.

Every ideal of Z is principal, so an ideal is stored as its unique
non-negative generator: 0 encodes the zero ideal {0}, 1 the unit ideal and
m > 1 the ideal <m>.  Coset representatives are fixed once and for all as
the least non-negative residues; this choice makes every normal form
computed elsewhere in the library unique and reproducible.

The surface of this module (from_generators / contains / sum / subset /
coset_rep) is exactly what any future coefficient ring would have to
provide.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple, Sequence


class CoefIdeal:
    """An ideal of Z in canonical single-generator form."""

    __slots__ = ("generator",)

    def __init__(self, generator: int):
        self.generator = abs(int(generator))

    @property
    def is_zero(self) -> bool:
        return self.generator == 0

    @property
    def is_unit(self) -> bool:
        return self.generator == 1

    @property
    def is_proper(self) -> bool:
        """True for every ideal except the unit ideal <1>."""
        return self.generator != 1

    def contains(self, a: int) -> bool:
        if self.generator == 0:
            return a == 0
        return a % self.generator == 0

    def issubset(self, other: "CoefIdeal") -> bool:
        """<a> is contained in <b> exactly when b divides a (with <0> minimal)."""
        return other.contains(self.generator)

    def coset_rep_value(self, a: int) -> int:
        """Least non-negative residue of ``a``; identity for the zero ideal."""
        if self.generator == 0:
            return a
        return a % self.generator

    def __add__(self, other: "CoefIdeal") -> "CoefIdeal":
        return CoefIdeal(math.gcd(self.generator, other.generator))

    def __eq__(self, other) -> bool:
        return isinstance(other, CoefIdeal) and self.generator == other.generator

    def __hash__(self):
        return hash(("CoefIdeal", self.generator))

    def __repr__(self):
        if self.generator == 0:
            return "CoefIdeal(0)"
        return f"CoefIdeal({self.generator})"


ZERO_IDEAL = CoefIdeal(0)
UNIT_IDEAL = CoefIdeal(1)


class CosetRep(NamedTuple):
    value: int
    ideal: CoefIdeal


def ideal_from_generators(gens: Iterable[int]) -> CoefIdeal:
    """Ideal generated by a list of integers: <gcd of absolute values>."""
    g = 0
    for a in gens:
        g = math.gcd(g, a)
    return CoefIdeal(g)


def ideal_contains(ideal: CoefIdeal, a: int) -> bool:
    return ideal.contains(a)


def ideal_sum(left: CoefIdeal, right: CoefIdeal) -> CoefIdeal:
    return left + right


def ideal_subset(left: CoefIdeal, right: CoefIdeal) -> bool:
    return left.issubset(right)


def coset_rep(ideal: CoefIdeal, a: int) -> CosetRep:
    """Canonical representative of ``a + ideal``."""
    return CosetRep(ideal.coset_rep_value(a), ideal)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``u*a + v*b == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def combine_to_gcd(values: Sequence[int]) -> tuple[int, list[int]]:
    """Express ``gcd(values)`` as an integer combination of ``values``.

    Returns ``(g, coeffs)`` with ``sum(c * v for c, v in zip(coeffs, values))
    == g``.  The cascade folds left over the list, so the witness is
    deterministic in list order.
    """
    if not values:
        return 0, []
    g = values[0]
    coeffs = [1]
    for v in values[1:]:
        g, u, w = extended_gcd(g, v)
        coeffs = [c * u for c in coeffs]
        coeffs.append(w)
    if g < 0:
        g = -g
        coeffs = [-c for c in coeffs]
    return g, coeffs
