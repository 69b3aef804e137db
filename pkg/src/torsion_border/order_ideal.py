"""Coefficient ideal mappings, order ideals, borders and border forms.

A coefficient ideal mapping assigns an ideal of Z to every monomial,
monotonically with respect to divisibility; only the finitely many
monomials mapped below the unit ideal are stored.  The induced order
ideal is the set of terms whose coefficients are canonical coset
representatives; it is infinite, so it is represented intensionally by
the mapping together with the least-non-negative-residue convention.

Monomials with ideal <0> are free directions; monomials with ideal <m>,
m >= 2, are torsion directions and contribute scalar border terms.
"""

from __future__ import annotations

import itertools
from typing import Iterable, NamedTuple, Sequence

from .coeff_ring import CoefIdeal, UNIT_IDEAL, ideal_from_generators
from .errors import ArityMismatch, NotMonotone, ZeroPolynomialError
from .poly import (
    Monomial,
    Polynomial,
    Term,
    mon_degree,
    mon_divides,
    mon_one,
)


def _mon_sort_key(m: Monomial):
    return (mon_degree(m), m)


class CoefficientIdealMapping:
    """A proper, monotone map from monomials to ideals of Z.

    ``support`` holds exactly the monomials mapped to a non-unit ideal;
    every other monomial maps to <1>.  Monotonicity (a divisor's ideal is
    contained in the multiple's) is validated on construction, which also
    forces the support to be closed under divisors.
    """

    __slots__ = ("arity", "_support")

    def __init__(self, arity: int, support: dict):
        self.arity = arity
        clean = {}
        for mon, ideal in support.items():
            mon = tuple(mon)
            if len(mon) != arity:
                raise ArityMismatch(f"monomial {mon} does not have arity {arity}")
            if not isinstance(ideal, CoefIdeal):
                ideal = ideal_from_generators(ideal)
            if ideal.is_unit:
                continue
            clean[mon] = ideal
        self._support = clean
        self._validate()

    def _validate(self):
        for mon, ideal in self._support.items():
            for i in range(self.arity):
                if mon[i] == 0:
                    continue
                below = mon[:i] + (mon[i] - 1,) + mon[i + 1 :]
                below_ideal = self._support.get(below, UNIT_IDEAL)
                if not below_ideal.issubset(ideal):
                    raise NotMonotone(below, mon)

    def query(self, mon: Monomial) -> CoefIdeal:
        return self._support.get(tuple(mon), UNIT_IDEAL)

    @property
    def support(self) -> dict:
        return dict(self._support)

    def support_monomials(self) -> list:
        return sorted(self._support, key=_mon_sort_key)

    def __eq__(self, other):
        return (
            isinstance(other, CoefficientIdealMapping)
            and self.arity == other.arity
            and self._support == other._support
        )

    def __hash__(self):
        return hash((self.arity, frozenset(self._support.items())))

    def __repr__(self):
        entries = ", ".join(
            f"{m}: {i.generator}" for m, i in sorted(self._support.items())
        )
        return f"CoefficientIdealMapping({self.arity}, {{{entries}}})"


def validate_mapping(arity: int, raw: Iterable[tuple[Monomial, Sequence[int]]]) -> CoefficientIdealMapping:
    """Canonicalize raw (monomial, generators) entries into a mapping.

    Generator lists collapse to their gcd.  Non-monotone input is rejected
    with a witness divisor/multiple pair.
    """
    support = {}
    for mon, gens in raw:
        support[tuple(mon)] = ideal_from_generators(gens)
    return CoefficientIdealMapping(arity, support)


class Border(NamedTuple):
    monomial_border: tuple  # of Monomial
    scalar_border: tuple  # of Term


class OrderIdealData:
    """An order ideal given intensionally by its coefficient ideal mapping."""

    __slots__ = ("mapping", "mon_part", "_closures", "_borders", "_border")

    def __init__(self, mapping: CoefficientIdealMapping):
        self.mapping = mapping
        self.mon_part = frozenset(mapping.support)
        # _closures[k] is the monomial part of the k-th border closure,
        # _borders[k] the k-th border (k >= 1); both grow on demand.
        self._closures = [None]
        self._borders = [None]
        self._border = None

    @property
    def arity(self) -> int:
        return self.mapping.arity

    def ideal_at(self, mon: Monomial) -> CoefIdeal:
        return self.mapping.query(mon)

    def contains_term(self, coefficient: int, mon: Monomial) -> bool:
        """Whether ``coefficient * x^mon`` is a term of the order ideal."""
        if coefficient == 0:
            return False
        if tuple(mon) not in self.mon_part:
            return False
        ideal = self.ideal_at(mon)
        return ideal.coset_rep_value(coefficient) == coefficient

    def sorted_mon_part(self) -> list:
        return sorted(self.mon_part, key=_mon_sort_key)

    # -- borders and closures ------------------------------------------

    def _expand(self, mon_set: frozenset) -> frozenset:
        out = set()
        for m in mon_set:
            for i in range(self.arity):
                out.add(m[:i] + (m[i] + 1,) + m[i + 1 :])
        return frozenset(out - mon_set)

    def border(self) -> Border:
        if self._border is None:
            if self.mon_part:
                mon_border = self._expand(self.mon_part)
            else:
                # border of the empty order ideal is {1} by convention
                mon_border = frozenset({mon_one(self.arity)})
            scalar = []
            for m in self.sorted_mon_part():
                ideal = self.ideal_at(m)
                if not ideal.is_zero and not ideal.is_unit:
                    scalar.append(Term(ideal.generator, m))
            self._border = Border(
                tuple(sorted(mon_border, key=_mon_sort_key)),
                tuple(scalar),
            )
        return self._border

    def closure_monomials(self, k: int) -> frozenset:
        """Monomial part of the k-th border closure, k >= 1."""
        if k < 1:
            raise ValueError("border closures are indexed from k = 1")
        while len(self._closures) <= k:
            self._grow()
        return self._closures[k]

    def border_monomials(self, k: int) -> frozenset:
        """The k-th border as a set of monomials, k >= 1 (k = 1 is the monomial border)."""
        if k < 1:
            raise ValueError("borders are indexed from k = 1")
        while len(self._borders) <= k:
            self._grow()
        return self._borders[k]

    def _grow(self):
        if len(self._closures) == 1:
            first = frozenset(self.border().monomial_border)
            self._borders.append(first)
            self._closures.append(frozenset(self.mon_part) | first)
            return
        prev = self._closures[-1]
        nxt = self._expand(prev)
        self._borders.append(nxt)
        self._closures.append(prev | nxt)


def borders(order_ideal: OrderIdealData) -> Border:
    """Monomial and scalar borders of an order ideal."""
    return order_ideal.border()


def kth_border(order_ideal: OrderIdealData, k: int) -> set:
    """The k-th border for k >= 2 (only the monomial part is nonempty there)."""
    if k < 2:
        raise ValueError("kth_border is defined for k >= 2; use borders() for k = 1")
    return set(order_ideal.border_monomials(k))


def monomial_index(order_ideal: OrderIdealData, mon: Monomial) -> int:
    """Least k with the monomial inside the k-th border closure, ignoring coefficients."""
    mon = tuple(mon)
    if mon in order_ideal.mon_part:
        return 0
    k = 1
    limit = mon_degree(mon) + 1
    while True:
        if mon in order_ideal.border_monomials(k):
            return k
        k += 1
        if k > limit:
            raise AssertionError(f"monomial {mon} escaped every border closure")


def index_term(order_ideal: OrderIdealData, term: Term) -> int:
    """Index of a term: 0 inside the order ideal, k for the k-th border closure."""
    c, mon = term
    if c == 0:
        raise ZeroPolynomialError("the zero term has no index")
    mon = tuple(mon)
    if mon in order_ideal.mon_part:
        ideal = order_ideal.ideal_at(mon)
        # coefficient outside the ideal sits in a nonzero coset (0th closure);
        # a nonzero element of the ideal is spanned by the scalar border.
        return 0 if not ideal.contains(c) else 1
    return monomial_index(order_ideal, mon)


def index_poly(order_ideal: OrderIdealData, f: Polynomial) -> int:
    """Largest index over the terms of a nonzero polynomial."""
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no index")
    return max(index_term(order_ideal, t) for t in f.terms())


def border_form(order_ideal: OrderIdealData, f: Polynomial) -> Polynomial:
    """Sum of the terms of maximal index; the border analogue of the leading term."""
    top = index_poly(order_ideal, f)
    return Polynomial(
        f.arity,
        {mon: c for c, mon in f.terms() if index_term(order_ideal, Term(c, mon)) == top},
    )


def index_by_degree_formula(order_ideal: OrderIdealData, mon: Monomial) -> int:
    """Independent index computation: min degree of a cofactor into the monomial part.

    Used as a cross-check oracle against the closure-based computation.
    """
    mon = tuple(mon)
    if mon in order_ideal.mon_part:
        return 0
    best = None
    for v in order_ideal.mon_part:
        if mon_divides(v, mon):
            d = mon_degree(mon) - mon_degree(v)
            best = d if best is None else min(best, d)
    if best is None:
        # empty or non-covering monomial part: fall back to the convention
        # border {1}, which puts a monomial of degree d at index d + 1
        return mon_degree(mon) + 1
    return best


def box_monomials(bounds: Sequence[int]):
    """All monomials with exponent i strictly below bounds[i]."""
    return itertools.product(*(range(b) for b in bounds))


def monomials_up_to_degree(arity: int, degree: int):
    """All monomials of total degree <= degree."""
    for exps in itertools.product(range(degree + 1), repeat=arity):
        if sum(exps) <= degree:
            yield exps
