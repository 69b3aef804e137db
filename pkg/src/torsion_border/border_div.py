"""Border prebases, acyclicity, border division and acyclic border bases.

A border prebasis pairs every border term of an order ideal with a tail
supported inside the order ideal.  Division by a prebasis eliminates
monomial-border terms by shifted subtraction and scalar-border terms by
extended-gcd combinations; it terminates whenever the scalar-border
dependency relation (which element's tail mentions which other scalar
monomial) is acyclic.  Scalar eliminations follow a topological order of
that relation, which bounds them by one pass per elimination phase.
"""

from __future__ import annotations

import graphlib
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .coeff_ring import combine_to_gcd, ideal_from_generators
from .errors import (
    ArityMismatch,
    MissingBorderElement,
    NotAcyclic,
    NotFinitelyGenerated,
    SelfMonomialInTail,
    StepBudgetExceeded,
    TailNotInOrderIdeal,
    ZeroPolynomialError,
)
from .groebner import (
    GroebnerBasis,
    buchberger,
    cim_from_gb,
    gb_reduce,
    short_reduce,
)
from .order_ideal import (
    OrderIdealData,
    border_form,
    borders,
    index_term,
)
from .poly import (
    Monomial,
    MonomialOrder,
    Polynomial,
    Term,
    mon_degree,
    mon_divides,
    mon_one,
    mon_quotient,
)


def _mon_sort_key(m: Monomial):
    return (mon_degree(m), m)


class PrebasisElement:
    """One prebasis polynomial ``g = border_term - tail`` with its parts."""

    __slots__ = ("border_term", "tail")

    def __init__(self, border_term: Term, tail: Polynomial):
        self.border_term = border_term
        self.tail = tail

    @property
    def polynomial(self) -> Polynomial:
        c, mon = self.border_term
        return Polynomial.from_term(self.tail.arity, c, mon) - self.tail

    def __eq__(self, other):
        return (
            isinstance(other, PrebasisElement)
            and self.border_term == other.border_term
            and self.tail == other.tail
        )

    def __hash__(self):
        return hash((self.border_term, self.tail))

    def __repr__(self):
        return f"PrebasisElement({self.border_term}, tail={self.tail!r})"


class BorderPrebasis:
    """A validated border prebasis together with its dependency structure."""

    def __init__(self, order_ideal, elements, scalar_generators):
        self.order_ideal = order_ideal
        self.elements = tuple(elements)
        # per torsion monomial, the generator list its scalar terms use
        self.scalar_generators = {m: tuple(g) for m, g in scalar_generators.items()}
        self.monomial_border_set = frozenset(order_ideal.border().monomial_border)
        self.scalar_monomials = frozenset(self.scalar_generators)
        self._element_at = {}
        for i, elt in enumerate(self.elements):
            self._element_at[elt.border_term] = i
        self._report = None

    @property
    def arity(self) -> int:
        return self.order_ideal.arity

    def polynomials(self) -> list:
        return [elt.polynomial for elt in self.elements]

    def is_scalar_element(self, i: int) -> bool:
        return self.elements[i].border_term.monomial in self.scalar_monomials

    def element_index(self, border_term: Term) -> int:
        return self._element_at[border_term]

    def scalar_term_count(self) -> int:
        return sum(len(g) for g in self.scalar_generators.values())

    def dependency_edges(self) -> dict:
        """Tail references between scalar-border monomials: edge m -> m' when
        an element with scalar border monomial m has a tail term on m'."""
        edges = {m: set() for m in self.scalar_monomials}
        for elt in self.elements:
            beta = elt.border_term.monomial
            if beta not in self.scalar_monomials:
                continue
            for _, gamma in elt.tail.terms():
                if gamma in self.scalar_monomials:
                    edges[beta].add(gamma)
        return edges

    def acyclicity_report(self) -> "AcyclicityReport":
        if self._report is None:
            self._report = _compute_acyclicity(self)
        return self._report


@dataclass(frozen=True)
class AcyclicityReport:
    acyclic: bool
    topological_order: tuple | None
    cycle_witness: tuple | None


def validate_prebasis(
    order_ideal: OrderIdealData,
    raw_elements: Sequence,
    scalar_generators: dict | None = None,
) -> BorderPrebasis:
    """Check border-term coverage, tail shape and coefficient canonicity.

    ``raw_elements`` may hold plain polynomials (the border term is
    identified inside each) or explicit ``(Term, tail)`` pairs.  By default
    every torsion monomial contributes its single canonical generator to
    the scalar border; ``scalar_generators`` may supply an explicit
    multi-generator presentation per monomial instead.
    """
    bdr = borders(order_ideal)
    gens_by_mon = {}
    for c, mon in bdr.scalar_border:
        gens_by_mon[mon] = (c,)
    if scalar_generators:
        for mon, gens in scalar_generators.items():
            mon = tuple(mon)
            if mon not in gens_by_mon:
                raise ValueError(f"{mon} has no scalar border to override")
            gens = tuple(int(g) for g in gens)
            if any(g == 0 for g in gens) or len(set(gens)) != len(gens):
                raise ValueError(f"scalar generators for {mon} must be distinct and nonzero")
            if ideal_from_generators(gens) != order_ideal.ideal_at(mon):
                raise ValueError(
                    f"scalar generators {gens} do not generate the ideal at {mon}"
                )
            gens_by_mon[mon] = gens

    required = [Term(1, mon) for mon in bdr.monomial_border]
    for mon in sorted(gens_by_mon, key=_mon_sort_key):
        required.extend(Term(c, mon) for c in gens_by_mon[mon])
    required_set = set(required)

    elements = []
    for raw in raw_elements:
        if isinstance(raw, PrebasisElement):
            border_term, tail = raw.border_term, raw.tail
        elif isinstance(raw, tuple):
            border_term, tail = Term(*raw[0]), raw[1]
        else:
            border_term, tail = _split_raw_polynomial(raw, required_set)
        if border_term not in required_set:
            raise MissingBorderElement(
                f"{border_term} is not a border term of this order ideal"
            )
        _check_tail(order_ideal, border_term, tail)
        elements.append(PrebasisElement(border_term, tail))

    seen = {}
    for elt in elements:
        if elt.border_term in seen:
            raise MissingBorderElement(
                f"border term {elt.border_term} is covered by more than one element"
            )
        seen[elt.border_term] = elt
    missing = [t for t in required if t not in seen]
    if missing:
        raise MissingBorderElement(f"no element for border terms {missing}")

    return BorderPrebasis(order_ideal, elements, gens_by_mon)


def _split_raw_polynomial(g: Polynomial, required_set):
    """Locate the border term inside a raw prebasis polynomial."""
    if g.is_zero:
        raise ZeroPolynomialError("a prebasis element cannot be zero")
    candidates = [t for t in g.terms() if t in required_set]
    if not candidates:
        offending = max(g.terms(), key=lambda t: _mon_sort_key(t.monomial))
        raise TailNotInOrderIdeal(
            offending,
            f"no border term found in {g!r}; offending term {offending}",
        )
    border_term = max(candidates, key=lambda t: _mon_sort_key(t.monomial))
    tail = Polynomial.from_term(g.arity, *border_term) - g
    return border_term, tail


def _check_tail(order_ideal, border_term: Term, tail: Polynomial):
    for c, mon in tail.terms():
        if mon == border_term.monomial:
            raise SelfMonomialInTail(
                f"tail of the element at {border_term} mentions its own monomial"
            )
        if mon not in order_ideal.mon_part:
            raise TailNotInOrderIdeal(Term(c, mon))
        ideal = order_ideal.ideal_at(mon)
        if ideal.coset_rep_value(c) != c:
            raise TailNotInOrderIdeal(
                Term(c, mon),
                f"tail coefficient {c} at {mon} is not a canonical residue "
                f"modulo <{ideal.generator}>",
            )


def _compute_acyclicity(prebasis: BorderPrebasis) -> AcyclicityReport:
    edges = prebasis.dependency_edges()
    # first element index per scalar monomial fixes a deterministic node order
    first_index = {}
    for i, elt in enumerate(prebasis.elements):
        mon = elt.border_term.monomial
        if mon in prebasis.scalar_monomials and mon not in first_index:
            first_index[mon] = i
    nodes = sorted(prebasis.scalar_monomials, key=lambda m: first_index.get(m, 0))

    graph = {}
    for node in nodes:
        preds = [m for m in nodes if node in edges.get(m, ())]
        graph[node] = preds
    sorter = graphlib.TopologicalSorter(graph)
    try:
        mon_order = list(sorter.static_order())
    except graphlib.CycleError as e:
        cycle = list(e.args[1])
        if len(cycle) > 1 and cycle[0] == cycle[-1]:
            cycle = cycle[:-1]
        return AcyclicityReport(False, None, tuple(cycle))

    order_indices = []
    for mon in mon_order:
        for i, elt in enumerate(prebasis.elements):
            if elt.border_term.monomial == mon and mon in prebasis.scalar_monomials:
                order_indices.append(i)
    for i, elt in enumerate(prebasis.elements):
        if elt.border_term.monomial not in prebasis.scalar_monomials:
            order_indices.append(i)
    return AcyclicityReport(True, tuple(order_indices), None)


def acyclicity(prebasis: BorderPrebasis) -> AcyclicityReport:
    """Classify the prebasis through its scalar-border dependency graph."""
    return prebasis.acyclicity_report()


@dataclass(frozen=True)
class TraceStep:
    kind: int  # 3, 4 or 5
    eliminated: Term | None = None
    uses: tuple = ()  # (element index, multiplier term) pairs
    assignments: tuple = ()  # step 3: (monomial, coefficient) pairs

    def to_dict(self, render_mon, render_term):
        out = {"step": self.kind}
        if self.eliminated is not None:
            out["eliminated"] = render_term(self.eliminated)
        if self.uses:
            out["uses"] = [
                {"element": i + 1, "multiplier": render_term(t)} for i, t in self.uses
            ]
        if self.kind == 3:
            out["remainder"] = {render_mon(m): c for m, c in self.assignments}
        return out


@dataclass(frozen=True)
class DivisionResult:
    prebasis: BorderPrebasis
    dividend: Polynomial
    cofactors: tuple
    remainder_coeffs: dict
    trace: tuple
    step4_count: int

    def remainder(self) -> Polynomial:
        arity = self.dividend.arity
        return Polynomial(arity, dict(self.remainder_coeffs))

    def expansion(self) -> Polynomial:
        """Recombine cofactors and remainder; must reproduce the dividend."""
        acc = self.remainder()
        for cof, elt in zip(self.cofactors, self.prebasis.elements):
            if not cof.is_zero:
                acc = acc + cof * elt.polynomial
        return acc

    def check_identity(self) -> bool:
        return self.expansion() == self.dividend


def border_divide(
    prebasis: BorderPrebasis,
    f: Polynomial,
    step_budget: int | None = None,
) -> DivisionResult:
    """Divide ``f`` by an acyclic border prebasis.

    Returns cofactors aligned with the prebasis elements, remainder
    coefficients over the monomial part of the order ideal, and a step
    trace.  Scalar eliminations are counted against a budget (default: the
    cube of the number of scalar border terms) and raise
    ``StepBudgetExceeded`` if it is ever crossed.
    """
    O = prebasis.order_ideal
    if f.arity != O.arity:
        raise ArityMismatch(f"dividend arity {f.arity} does not match order ideal arity {O.arity}")
    report = prebasis.acyclicity_report()
    if not report.acyclic:
        raise NotAcyclic(report.cycle_witness)
    if step_budget is None:
        step_budget = prebasis.scalar_term_count() ** 3

    topo_rank = {}
    for pos, i in enumerate(report.topological_order):
        mon = prebasis.elements[i].border_term.monomial
        if mon in prebasis.scalar_monomials and mon not in topo_rank:
            topo_rank[mon] = pos

    cofactors = [Polynomial.zero(f.arity) for _ in prebasis.elements]
    work = {mon: c for c, mon in f.terms()}
    trace = []
    step4 = 0
    mon_part_sorted = O.sorted_mon_part()

    def subtract(element_index: int, coeff: int, shift: Monomial):
        elt = prebasis.elements[element_index]
        for c2, m2 in elt.polynomial.mul_term(coeff, shift).terms():
            val = work.get(m2, 0) - c2
            if val:
                work[m2] = val
            else:
                work.pop(m2, None)
        cofactors[element_index] = cofactors[element_index] + Polynomial.from_term(
            f.arity, coeff, shift
        )

    ended_at_step3 = False
    while work:
        term_index = {mon: index_term(O, Term(c, mon)) for mon, c in work.items()}
        k = max(term_index.values())
        if k == 0:
            ended_at_step3 = True
            break
        if k == 1:
            border_mons = [m for m in work if m in prebasis.monomial_border_set]
            if border_mons:
                eligible = border_mons
                step = 5
            else:
                eligible = [m for m, ki in term_index.items() if ki == 1]
                step = 4
        else:
            eligible = [m for m, ki in term_index.items() if ki == k]
            step = 5

        if step == 5:
            gamma = max(eligible)
            d = work[gamma]
            pick = None
            for i, elt in enumerate(prebasis.elements):
                beta = elt.border_term.monomial
                if beta in prebasis.scalar_monomials:
                    continue
                if mon_divides(beta, gamma) and mon_degree(gamma) - mon_degree(beta) == k - 1:
                    pick = (i, beta)
                    break
            assert pick is not None, f"no monomial-border divisor for {gamma}"
            i, beta = pick
            shift = mon_quotient(gamma, beta)
            subtract(i, d, shift)
            trace.append(TraceStep(5, Term(d, gamma), ((i, Term(d, shift)),)))
        else:
            gamma = min(eligible, key=lambda m: topo_rank[m])
            d = work[gamma]
            gens = prebasis.scalar_generators[gamma]
            g0, witness = combine_to_gcd(gens)
            assert d % g0 == 0, "index-1 scalar term outside its coefficient ideal"
            q = d // g0
            uses = []
            one = mon_one(f.arity)
            for c_j, u in zip(gens, witness):
                b = q * u
                if b == 0:
                    continue
                i = prebasis.element_index(Term(c_j, gamma))
                subtract(i, b, one)
                uses.append((i, Term(b, one)))
            step4 += 1
            if step4 > step_budget:
                raise StepBudgetExceeded(
                    f"scalar eliminations exceeded the budget of {step_budget}"
                )
            trace.append(TraceStep(4, Term(d, gamma), tuple(uses)))

    remainder_coeffs = {m: work.get(m, 0) for m in mon_part_sorted}
    assert all(m in remainder_coeffs for m in work), "remainder escaped the order ideal"
    if ended_at_step3:
        trace.append(TraceStep(3, assignments=tuple(remainder_coeffs.items())))
    return DivisionResult(
        prebasis,
        f,
        tuple(cofactors),
        remainder_coeffs,
        tuple(trace),
        step4,
    )


def o_remainder(prebasis: BorderPrebasis, f: Polynomial, step_budget: int | None = None) -> Polynomial:
    """Remainder of border division: the order-ideal part of the output."""
    return border_divide(prebasis, f, step_budget).remainder()


def normal_form(prebasis: BorderPrebasis, f: Polynomial, step_budget: int | None = None) -> Polynomial:
    """Unique canonical representative of ``f`` modulo a border basis.

    Division leaves remainder coefficients outside the coefficient ideals
    but not necessarily canonical; this pass rewrites each scalar monomial
    coefficient to its least non-negative residue, walking the dependency
    graph in topological order so earlier coefficients are never disturbed.
    """
    O = prebasis.order_ideal
    r = o_remainder(prebasis, f, step_budget)
    report = prebasis.acyclicity_report()
    scalar_order = []
    for i in report.topological_order:
        mon = prebasis.elements[i].border_term.monomial
        if mon in prebasis.scalar_monomials and mon not in scalar_order:
            scalar_order.append(mon)
    for mon in scalar_order:
        a = r.coefficient(mon)
        ideal = O.ideal_at(mon)
        rep = ideal.coset_rep_value(a)
        if rep == a:
            continue
        gens = prebasis.scalar_generators[mon]
        g0, witness = combine_to_gcd(gens)
        q = (a - rep) // g0
        for c_j, u in zip(gens, witness):
            d_j = q * u
            if d_j == 0:
                continue
            elt = prebasis.elements[prebasis.element_index(Term(c_j, mon))]
            r = r - elt.polynomial.scale(d_j)
        assert r.coefficient(mon) == rep
    return r


def is_member(prebasis: BorderPrebasis, f: Polynomial, step_budget: int | None = None) -> bool:
    """Ideal membership through a border basis: zero normal form."""
    return normal_form(prebasis, f, step_budget).is_zero


def border_basis_from_gb(gb: GroebnerBasis):
    """Construct the unique acyclic border basis from a Groebner basis.

    Requires a finitely generated residue module.  Each border term is
    paired with its Groebner normal form as tail; the monomial order
    guarantees acyclicity of the result.
    """
    mapping = cim_from_gb(gb)
    if not mapping.proper:
        raise NotFinitelyGenerated(
            "the residue class module is not finitely generated; no finite order ideal exists"
        )
    sr = mapping.gb
    O = mapping.to_order_ideal()
    bdr = borders(O)
    elements = []
    for mon in bdr.monomial_border:
        lt_poly = Polynomial.from_term(O.arity, 1, mon)
        tail = gb_reduce(sr.order, lt_poly, sr.basis)
        elements.append(PrebasisElement(Term(1, mon), tail))
    for c, mon in bdr.scalar_border:
        lt_poly = Polynomial.from_term(O.arity, c, mon)
        tail = gb_reduce(sr.order, lt_poly, sr.basis)
        elements.append(PrebasisElement(Term(c, mon), tail))
    prebasis = validate_prebasis(O, elements)
    report = prebasis.acyclicity_report()
    assert report.acyclic, "order-induced border bases are acyclic by construction"
    return O, prebasis


@dataclass(frozen=True)
class VerificationReport:
    verdict: str  # "verified", "refuted" or "inconclusive"
    checks: dict
    details: tuple = ()
    matched_order: MonomialOrder | None = None


def _candidate_orders(order: MonomialOrder):
    n = order.arity
    orders = [order]
    perms = permutations(range(n)) if n <= 4 else [tuple(range(n))]
    for priority in perms:
        for kind in ("lex", "deglex", "degrevlex"):
            cand = MonomialOrder(kind, priority)
            if cand not in orders:
                orders.append(cand)
    return orders


def verify_border_basis(
    order_ideal: OrderIdealData,
    prebasis: BorderPrebasis,
    ideal_gens: Sequence[Polynomial],
    order: MonomialOrder,
) -> VerificationReport:
    """Three-valued border-basis check against an explicitly generated ideal.

    Necessary checks: (V1) every prebasis element lies in the ideal, (V2)
    every Groebner basis element border-reduces to zero, (V3) the border
    form of every Groebner basis element lies in the term ideal spanned by
    the border.  Any failure refutes.  (V4) When the order ideal is the one
    induced by some standard monomial order, uniqueness decides the answer
    exactly; otherwise the necessary checks alone leave the verdict
    inconclusive.
    """
    report = prebasis.acyclicity_report()
    if not report.acyclic:
        raise NotAcyclic(report.cycle_witness)
    checks = {"V1": None, "V2": None, "V3": None, "V4": None}
    details = []

    gb = short_reduce(buchberger(order, ideal_gens))

    checks["V1"] = True
    for i, p in enumerate(prebasis.polynomials()):
        if not gb_reduce(order, p, gb.basis).is_zero:
            checks["V1"] = False
            details.append(f"element {i + 1} does not reduce to zero modulo the ideal")
            return VerificationReport("refuted", checks, tuple(details))

    checks["V2"] = True
    for g in gb.basis:
        if not o_remainder(prebasis, g).is_zero:
            checks["V2"] = False
            details.append("a Groebner basis element does not border-reduce to zero")
            return VerificationReport("refuted", checks, tuple(details))

    checks["V3"] = True
    border_terms = [elt.border_term for elt in prebasis.elements]
    for g in gb.basis:
        bf = border_form(order_ideal, g)
        for c, mon in bf.terms():
            applicable = [bc for bc, bm in border_terms if mon_divides(bm, mon)]
            if not ideal_from_generators(applicable).contains(c):
                checks["V3"] = False
                details.append(
                    f"border form term {Term(c, mon)} lies outside the border term ideal"
                )
                return VerificationReport("refuted", checks, tuple(details))

    mine = set(prebasis.polynomials())
    for cand in _candidate_orders(order):
        cand_gb = short_reduce(buchberger(cand, ideal_gens))
        cand_mapping = cim_from_gb(cand_gb)
        if not cand_mapping.proper:
            continue
        if cand_mapping.to_mapping() != order_ideal.mapping:
            continue
        _, canonical = border_basis_from_gb(cand_gb)
        checks["V4"] = set(canonical.polynomials()) == mine
        if checks["V4"]:
            return VerificationReport("verified", checks, tuple(details), cand)
        details.append(
            "the order ideal is induced by a monomial order and the unique "
            "border basis differs from the given prebasis"
        )
        return VerificationReport("refuted", checks, tuple(details), cand)

    details.append(
        "necessary checks passed but the order ideal is not induced by any "
        "attempted monomial order"
    )
    return VerificationReport("inconclusive", checks, tuple(details))


def pauer_subset_check(gb: GroebnerBasis, prebasis: BorderPrebasis) -> bool:
    """The short reduced basis is the border-basis slice at irredundant border terms.

    A border term survives when its coefficient is not generated by leading
    coefficients at properly dividing monomials; the prebasis elements at
    the surviving terms must coincide, as polynomials, with the short
    reduced Groebner basis.
    """
    sr = short_reduce(gb)
    _, canonical = border_basis_from_gb(sr)
    if set(canonical.polynomials()) != set(prebasis.polynomials()):
        raise ValueError("prebasis was not produced from this Groebner basis")
    surviving = []
    for elt in prebasis.elements:
        c, mon = elt.border_term
        below = ideal_from_generators(
            g.leading_term(sr.order).coefficient
            for g in sr.basis
            if g.leading_term(sr.order).monomial != mon
            and mon_divides(g.leading_term(sr.order).monomial, mon)
        )
        if not below.contains(c):
            surviving.append(elt.polynomial)
    return set(surviving) == set(sr.basis)
