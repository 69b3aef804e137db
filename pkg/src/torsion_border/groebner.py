"""Buchberger's algorithm over the integers and leading-coefficient analysis.

Over Z a term ``a*x^g`` of a polynomial is reducible modulo a basis when
``a`` lies in the ideal generated by the leading coefficients of the basis
elements whose leading monomials divide ``x^g``; reduction replaces the
coefficient by its canonical (least non-negative) residue and subtracts an
explicit gcd-witness combination.  Saturating S-polynomials under this
reduction yields a basis whose leading term ideal equals that of the
ideal; a completion pass then realizes, for every corner of the leading
monomial lattice, the gcd of the applicable leading coefficients as the
leading term of an actual element.  Together these give the basis the
reduction, membership and finite-generation properties the border-basis
layer builds on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .coeff_ring import CoefIdeal, combine_to_gcd, ideal_from_generators
from .errors import ArityMismatch, NotFinitelyGenerated, ZeroPolynomialError
from .order_ideal import CoefficientIdealMapping, OrderIdealData, box_monomials
from .poly import (
    Monomial,
    MonomialOrder,
    Polynomial,
    mon_divides,
    mon_lcm,
    mon_one,
    mon_quotient,
)


@dataclass(frozen=True)
class GroebnerBasis:
    ideal_generators: tuple
    basis: tuple
    order: MonomialOrder
    is_short_reduced: bool = False

    @property
    def arity(self) -> int:
        return self.order.arity


def _normalize_sign(f: Polynomial, order: MonomialOrder) -> Polynomial:
    return -f if f.leading_term(order).coefficient < 0 else f


def s_polynomial(order: MonomialOrder, f: Polynomial, g: Polynomial) -> Polynomial:
    """Classic S-polynomial with the lcm of both leading coefficients."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("S-polynomial of a zero polynomial")
    cf, mf = f.leading_term(order)
    cg, mg = g.leading_term(order)
    lcm_mon = mon_lcm(mf, mg)
    c = math.lcm(cf, cg)
    left = f.mul_term(c // cf, mon_quotient(lcm_mon, mf))
    right = g.mul_term(c // cg, mon_quotient(lcm_mon, mg))
    return left - right


def g_polynomial(order: MonomialOrder, f: Polynomial, g: Polynomial) -> Polynomial:
    """Gcd-combination of a pair; its leading term is gcd(Lc(f), Lc(g)) * lcm(Lm(f), Lm(g))."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("G-polynomial of a zero polynomial")
    cf, mf = f.leading_term(order)
    cg, mg = g.leading_term(order)
    lcm_mon = mon_lcm(mf, mg)
    d, coeffs = combine_to_gcd([cf, cg])
    assert d == math.gcd(cf, cg)
    left = f.mul_term(coeffs[0], mon_quotient(lcm_mon, mf))
    right = g.mul_term(coeffs[1], mon_quotient(lcm_mon, mg))
    return left + right


def _applicable(order: MonomialOrder, basis: Sequence[Polynomial], mon: Monomial):
    """Basis elements whose leading monomial divides ``mon``, in basis order."""
    out = []
    for g in basis:
        lt = g.leading_term(order)
        if mon_divides(lt.monomial, mon):
            out.append((g, lt))
    return out


def gb_reduce(order: MonomialOrder, f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Normal form of ``f`` modulo a basis under coefficient-canonical reduction.

    The largest actionable term is rewritten first: a term ``a*x^g`` whose
    coefficient is not the canonical residue modulo the leading-coefficient
    ideal at ``x^g`` has the excess removed through a deterministic
    extended-gcd witness over the applicable basis elements.  The result
    has every coefficient canonical; for a Groebner basis it is the unique
    normal form, and it is zero exactly for ideal members.
    """
    basis = [g for g in basis if not g.is_zero]
    work = {m: c for c, m in f.terms()}
    while True:
        target = None
        for mon in sorted(work, key=order.sort_key, reverse=True):
            coeff = work[mon]
            applicable = _applicable(order, basis, mon)
            if not applicable:
                continue
            gen = 0
            for _, lt in applicable:
                gen = math.gcd(gen, lt.coefficient)
            if gen == 0:
                continue
            rep = coeff % gen
            if rep != coeff:
                target = (mon, coeff, rep, applicable, gen)
                break
        if target is None:
            break
        mon, coeff, rep, applicable, gen = target
        d, witness = combine_to_gcd([lt.coefficient for _, lt in applicable])
        assert d == gen
        q = (coeff - rep) // gen
        for (g, lt), u in zip(applicable, witness):
            if u == 0:
                continue
            shift = mon_quotient(mon, lt.monomial)
            for c2, m2 in g.mul_term(q * u, shift).terms():
                m2c = work.get(m2, 0) - c2
                if m2c:
                    work[m2] = m2c
                else:
                    work.pop(m2, None)
        # the witness removes exactly the excess, leaving the canonical residue
        assert work.get(mon, 0) == rep
    return Polynomial(f.arity, work)


def _pair_key(order: MonomialOrder, basis, pair):
    i, j = pair
    mi = basis[i].leading_term(order).monomial
    mj = basis[j].leading_term(order).monomial
    return (order.sort_key(mon_lcm(mi, mj)), i, j)


def _corner_completion(order: MonomialOrder, basis: list) -> None:
    """Add, for each lcm-corner of the leading monomials, an element whose
    leading term realizes the gcd of the applicable leading coefficients.

    This is what makes per-monomial leading-coefficient gcds visible as
    single leading terms (monic pure powers included), mirroring the
    reduced bases used for finite-generation analysis.
    """
    corners = {g.leading_term(order).monomial for g in basis}
    while True:
        new = set()
        for a in corners:
            for b in corners:
                m = mon_lcm(a, b)
                if m not in corners:
                    new.add(m)
        if not new:
            break
        corners |= new
    for mon in sorted(corners, key=order.sort_key):
        applicable = _applicable(order, basis, mon)
        lcs = [lt.coefficient for _, lt in applicable]
        d = 0
        for c in lcs:
            d = math.gcd(d, c)
        if any(abs(lt.coefficient) == d for _, lt in applicable):
            continue
        _, witness = combine_to_gcd(lcs)
        h = Polynomial.zero(order.arity)
        for (g, lt), u in zip(applicable, witness):
            if u:
                h = h + g.mul_term(u, mon_quotient(mon, lt.monomial))
        lt = h.leading_term(order)
        assert lt.monomial == mon and lt.coefficient == d
        lt_poly = Polynomial.from_term(order.arity, lt.coefficient, lt.monomial)
        tail = gb_reduce(order, lt_poly - h, basis)
        basis.append(lt_poly - tail)


def buchberger(order: MonomialOrder, gens: Sequence[Polynomial]) -> GroebnerBasis:
    """Saturate S-polynomial pairs over Z, then complete lcm-corner gcds.

    Pairs are processed in the normal strategy (smallest lcm of leading
    monomials under the order, ties by input position), so the result is
    deterministic for a fixed generator sequence.  The returned basis may
    contain redundant elements; ``short_reduce`` canonicalizes it.
    """
    gens = tuple(gens)
    nonzero = [g for g in gens if not g.is_zero]
    if not nonzero:
        raise ZeroPolynomialError("cannot compute a basis for the zero ideal")
    arity = order.arity
    for g in nonzero:
        if g.arity != arity:
            raise ArityMismatch(f"generator arity {g.arity} does not match order arity {arity}")
    basis = [_normalize_sign(g, order) for g in nonzero]
    pending = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pending:
        pair = min(pending, key=lambda p: _pair_key(order, basis, p))
        pending.discard(pair)
        i, j = pair
        s = s_polynomial(order, basis[i], basis[j])
        if s.is_zero:
            continue
        r = gb_reduce(order, s, basis)
        if r.is_zero:
            continue
        r = _normalize_sign(r, order)
        basis.append(r)
        k = len(basis) - 1
        pending.update((i2, k) for i2 in range(k))
    _corner_completion(order, basis)
    return GroebnerBasis(gens, tuple(basis), order, is_short_reduced=False)


def short_reduce(gb: GroebnerBasis) -> GroebnerBasis:
    """Canonical short reduced basis: one gcd element per leading monomial,
    redundant leading terms pruned, tails rewritten to canonical residues.

    An element is redundant when its leading coefficient already lies in
    the ideal generated by the leading coefficients at properly dividing
    leading monomials.  Tails are canonicalized in subtracted form: writing
    an element as ``Lt - h``, every coefficient of ``h`` is the canonical
    residue modulo the applicable leading-coefficient ideal.
    """
    if gb.is_short_reduced:
        return gb
    order = gb.order
    elems = [_normalize_sign(g, order) for g in gb.basis if not g.is_zero]

    # one element per leading monomial, with leading coefficient the gcd
    by_lm: dict[Monomial, list] = {}
    for g in elems:
        by_lm.setdefault(g.leading_term(order).monomial, []).append(g)
    consolidated = []
    for mon in sorted(by_lm, key=order.sort_key):
        group = by_lm[mon]
        lcs = [g.leading_term(order).coefficient for g in group]
        d = 0
        for c in lcs:
            d = math.gcd(d, c)
        pick = next((g for g in group if abs(g.leading_term(order).coefficient) == d), None)
        if pick is None:
            _, witness = combine_to_gcd(lcs)
            pick = Polynomial.zero(order.arity)
            for g, u in zip(group, witness):
                if u:
                    pick = pick + g.scale(u)
            assert pick.leading_term(order) == (d, mon)
        consolidated.append(_normalize_sign(pick, order))

    # prune elements whose leading coefficient is generated below them
    kept = []
    for g in consolidated:
        lc, lm = g.leading_term(order)
        below = [
            h.leading_term(order).coefficient
            for h in kept
            if h.leading_term(order).monomial != lm
            and mon_divides(h.leading_term(order).monomial, lm)
        ]
        if below and ideal_from_generators(below).contains(lc):
            continue
        kept.append(g)

    # canonicalize tails against the kept set (normal forms are unique,
    # so the outcome does not depend on the processing order)
    reduced = []
    for g in kept:
        lc, lm = g.leading_term(order)
        lt_poly = Polynomial.from_term(order.arity, lc, lm)
        tail = gb_reduce(order, lt_poly - g, kept)
        reduced.append(lt_poly - tail)
    reduced.sort(key=lambda g: order.sort_key(g.leading_term(order).monomial))
    return GroebnerBasis(gb.ideal_generators, tuple(reduced), order, is_short_reduced=True)


def leading_coefficient_ideal(gb: GroebnerBasis, mon: Monomial) -> CoefIdeal:
    """Ideal of Z generated by leading coefficients at divisors of ``mon``."""
    return ideal_from_generators(
        g.leading_term(gb.order).coefficient
        for g in gb.basis
        if mon_divides(g.leading_term(gb.order).monomial, tuple(mon))
    )


def is_residue_fg(gb: GroebnerBasis) -> bool:
    """Whether the residue class module is finitely generated.

    Criterion: for every variable, the short reduced basis contains an
    element whose leading term is a monic pure power of that variable.
    """
    sr = short_reduce(gb)
    for i in range(sr.arity):
        found = False
        for g in sr.basis:
            lc, lm = g.leading_term(sr.order)
            if lc == 1 and all(e == 0 for k, e in enumerate(lm) if k != i):
                found = True
                break
        if not found:
            return False
    return True


def is_free_representation(gb: GroebnerBasis) -> bool:
    """Whether the residue module is free: the short reduced basis is monic."""
    sr = short_reduce(gb)
    return all(g.leading_term(sr.order).coefficient == 1 for g in sr.basis)


def _support_box(sr: GroebnerBasis) -> list:
    """Exponent bounds outside which every leading-coefficient ideal is <1>."""
    bounds = []
    for i in range(sr.arity):
        bound = None
        for g in sr.basis:
            lc, lm = g.leading_term(sr.order)
            if lc == 1 and all(e == 0 for k, e in enumerate(lm) if k != i):
                nu = lm[i]
                bound = nu if bound is None else min(bound, nu)
        if bound is None:
            raise NotFinitelyGenerated(
                f"no monic pure power of variable {i} among the leading terms"
            )
        bounds.append(bound)
    return bounds


class GroebnerIdealMapping:
    """The coefficient ideal mapping fixed by a basis, queryable everywhere.

    The finite non-unit support is materialized only when the residue
    module is finitely generated; otherwise the mapping stays intensional
    and ``support``/``to_order_ideal`` raise ``NotFinitelyGenerated``.
    """

    __slots__ = ("gb", "proper")

    def __init__(self, gb: GroebnerBasis):
        self.gb = short_reduce(gb)
        self.proper = is_residue_fg(self.gb)

    def query(self, mon: Monomial) -> CoefIdeal:
        return leading_coefficient_ideal(self.gb, mon)

    def support(self) -> dict:
        if not self.proper:
            raise NotFinitelyGenerated(
                "the mapping sends infinitely many monomials to proper ideals"
            )
        out = {}
        for mon in box_monomials(_support_box(self.gb)):
            ideal = self.query(mon)
            if not ideal.is_unit:
                out[mon] = ideal
        return out

    def to_mapping(self) -> CoefficientIdealMapping:
        return CoefficientIdealMapping(self.gb.arity, self.support())

    def to_order_ideal(self) -> OrderIdealData:
        return OrderIdealData(self.to_mapping())


def cim_from_gb(gb: GroebnerBasis) -> GroebnerIdealMapping:
    """Coefficient ideal mapping induced by the basis' leading terms."""
    return GroebnerIdealMapping(gb)


def weak_standard_monomials(gb: GroebnerBasis) -> tuple:
    """Monomials whose leading-coefficient ideal is proper, sorted by degree.

    These generate the residue module; with canonical coset coordinates
    they form its weak-plus basis.  Raises ``NotFinitelyGenerated`` when
    the set is infinite.
    """
    mapping = cim_from_gb(gb)
    return tuple(sorted(mapping.support(), key=lambda m: (sum(m), m)))


@dataclass(frozen=True)
class ResidueAnalysis:
    finitely_generated: bool
    free_representation: bool
    weak_std_monomials: tuple | None
    monomial_ideals: dict


def residue_analysis(gb: GroebnerBasis) -> ResidueAnalysis:
    """Finite-generation and freeness report for the residue class module.

    ``monomial_ideals`` holds the full non-unit support when finitely
    generated, and otherwise the ideals at 1 and at each basis leading
    monomial (a finite probe of the infinite support).
    """
    sr = short_reduce(gb)
    fg = is_residue_fg(sr)
    free = is_free_representation(sr)
    if fg:
        mapping = cim_from_gb(sr)
        ideals = mapping.support()
        weak = tuple(sorted(ideals, key=lambda m: (sum(m), m)))
    else:
        probe = {mon_one(sr.arity)} | {
            g.leading_term(sr.order).monomial for g in sr.basis
        }
        ideals = {m: leading_coefficient_ideal(sr, m) for m in sorted(probe)}
        weak = None
    return ResidueAnalysis(fg, free, weak, ideals)
