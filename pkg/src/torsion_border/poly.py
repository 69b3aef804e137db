"""Sparse multivariate polynomials over Z with exponent-vector monomials.

A monomial is a plain tuple of non-negative integer exponents, one entry
per variable.  A polynomial maps monomials to nonzero integer
coefficients.  All values are immutable and hashable, so they can be
shared freely and used as dictionary keys or set members.
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple

from .errors import ArityMismatch, ZeroPolynomialError

Monomial = tuple  # tuple[int, ...]

ORDER_KINDS = ("lex", "deglex", "degrevlex")


def mon_one(arity: int) -> Monomial:
    return (0,) * arity


def mon_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mon_divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` divides ``b`` componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mon_quotient(b: Monomial, a: Monomial) -> Monomial:
    """Exponent vector of ``b / a``; requires ``a`` to divide ``b``."""
    q = tuple(y - x for x, y in zip(a, b))
    if any(e < 0 for e in q):
        raise ValueError(f"{a} does not divide {b}")
    return q


def mon_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mon_degree(a: Monomial) -> int:
    return sum(a)


class Term(NamedTuple):
    """A nonzero coefficient attached to a monomial."""

    coefficient: int
    monomial: Monomial


class MonomialOrder:
    """A monomial order: one of lex, deglex or degrevlex with a variable priority.

    ``priority`` lists variable indices from most to least significant.
    All three kinds are total, multiplicative well-orders with 1 minimal.
    """

    __slots__ = ("kind", "priority")

    def __init__(self, kind: str, priority: Iterable[int]):
        if kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {kind!r}; expected one of {ORDER_KINDS}")
        priority = tuple(priority)
        if sorted(priority) != list(range(len(priority))):
            raise ValueError(f"priority {priority} is not a permutation of variable indices")
        self.kind = kind
        self.priority = priority

    @property
    def arity(self) -> int:
        return len(self.priority)

    def sort_key(self, m: Monomial):
        """A key that sorts monomials ascending in this order."""
        if len(m) != len(self.priority):
            raise ArityMismatch(f"monomial {m} has arity {len(m)}, order expects {len(self.priority)}")
        if self.kind == "lex":
            return tuple(m[i] for i in self.priority)
        if self.kind == "deglex":
            return (sum(m), tuple(m[i] for i in self.priority))
        # degrevlex: compare degree, then the reversed priority sequence with
        # the smaller trailing exponent winning.
        return (sum(m), tuple(-m[i] for i in reversed(self.priority)))

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.sort_key(a), self.sort_key(b)
        if ka < kb:
            return -1
        if ka > kb:
            return 1
        return 0

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.priority == other.priority
        )

    def __hash__(self):
        return hash((self.kind, self.priority))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, {self.priority})"


def monomial_compare(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 according to whether ``a`` is below, equal to or above ``b``."""
    if len(a) != len(b):
        raise ArityMismatch(f"cannot compare monomials of arity {len(a)} and {len(b)}")
    return order.compare(a, b)


class Polynomial:
    """A sparse polynomial over Z.  Immutable; no zero coefficients stored."""

    __slots__ = ("arity", "_coeffs")

    def __init__(self, arity: int, coeffs: Mapping[Monomial, int] | None = None):
        self.arity = arity
        clean = {}
        if coeffs:
            for mon, c in coeffs.items():
                if c == 0:
                    continue
                mon = tuple(mon)
                if len(mon) != arity:
                    raise ArityMismatch(f"monomial {mon} does not have arity {arity}")
                if any(e < 0 for e in mon):
                    raise ValueError(f"negative exponent in monomial {mon}")
                clean[mon] = int(c)
        self._coeffs = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "Polynomial":
        return cls(arity)

    @classmethod
    def constant(cls, arity: int, c: int) -> "Polynomial":
        return cls(arity, {mon_one(arity): c})

    @classmethod
    def from_term(cls, arity: int, coefficient: int, monomial: Monomial) -> "Polynomial":
        return cls(arity, {tuple(monomial): coefficient})

    @classmethod
    def from_terms(cls, arity: int, terms: Iterable[tuple[int, Monomial]]) -> "Polynomial":
        acc: dict[Monomial, int] = {}
        for c, mon in terms:
            mon = tuple(mon)
            acc[mon] = acc.get(mon, 0) + c
        return cls(arity, acc)

    # -- inspection ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def coefficient(self, mon: Monomial) -> int:
        return self._coeffs.get(tuple(mon), 0)

    def monomials(self) -> list:
        """Support of the polynomial, sorted by exponent vector."""
        return sorted(self._coeffs)

    def terms(self) -> list:
        """Terms sorted by exponent vector (order-agnostic canonical form)."""
        return [Term(self._coeffs[m], m) for m in sorted(self._coeffs)]

    def items(self):
        return self._coeffs.items()

    def sorted_terms(self, order: MonomialOrder) -> list:
        """Terms sorted descending under ``order``."""
        mons = sorted(self._coeffs, key=order.sort_key, reverse=True)
        return [Term(self._coeffs[m], m) for m in mons]

    def total_degree(self) -> int:
        if not self._coeffs:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return max(mon_degree(m) for m in self._coeffs)

    def leading_term(self, order: MonomialOrder) -> Term:
        if not self._coeffs:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        m = max(self._coeffs, key=order.sort_key)
        return Term(self._coeffs[m], m)

    # -- arithmetic ---------------------------------------------------

    def _check_arity(self, other: "Polynomial"):
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} does not match arity {other.arity}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_arity(other)
        acc = dict(self._coeffs)
        for m, c in other._coeffs.items():
            acc[m] = acc.get(m, 0) + c
        return Polynomial(self.arity, acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_arity(other)
        acc = dict(self._coeffs)
        for m, c in other._coeffs.items():
            acc[m] = acc.get(m, 0) - c
        return Polynomial(self.arity, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.arity, {m: -c for m, c in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check_arity(other)
        acc: dict[Monomial, int] = {}
        for m1, c1 in self._coeffs.items():
            for m2, c2 in other._coeffs.items():
                m = mon_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(self.arity, acc)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: int) -> "Polynomial":
        if c == 0:
            return Polynomial.zero(self.arity)
        return Polynomial(self.arity, {m: c * v for m, v in self._coeffs.items()})

    def mul_term(self, coefficient: int, monomial: Monomial) -> "Polynomial":
        """Multiply by the single term ``coefficient * x^monomial``."""
        if coefficient == 0:
            return Polynomial.zero(self.arity)
        monomial = tuple(monomial)
        if len(monomial) != self.arity:
            raise ArityMismatch(f"term monomial {monomial} does not have arity {self.arity}")
        return Polynomial(
            self.arity,
            {mon_mul(m, monomial): coefficient * c for m, c in self._coeffs.items()},
        )

    # -- equality -----------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.arity == other.arity
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self.arity, frozenset(self._coeffs.items())))

    def __repr__(self):
        if not self._coeffs:
            return f"Polynomial({self.arity}, 0)"
        body = " + ".join(f"{c}*x^{m}" for c, m in self.terms())
        return f"Polynomial({self.arity}, {body})"


class LeadingData(NamedTuple):
    term: Term
    monomial: Monomial
    coefficient: int


def leading_data(order: MonomialOrder, f: Polynomial) -> LeadingData:
    """Leading term of ``f`` under ``order`` together with its parts."""
    t = f.leading_term(order)
    return LeadingData(t, t.monomial, t.coefficient)
