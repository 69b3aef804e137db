"""Exception types shared across the library."""


class TorsionBorderError(Exception):
    """Base class for all errors raised by this package."""


class ArityMismatch(TorsionBorderError):
    """Operands live in polynomial rings with different numbers of variables."""


class ZeroPolynomialError(TorsionBorderError):
    """An operation that needs a nonzero polynomial received zero."""


class NotMonotone(TorsionBorderError):
    """A coefficient ideal mapping violates monotonicity under divisibility."""

    def __init__(self, divisor, multiple, message=None):
        self.divisor = divisor
        self.multiple = multiple
        super().__init__(
            message
            or f"mapping not monotone: ideal at {divisor} is not contained "
            f"in ideal at {multiple}"
        )


class NotFinitelyGenerated(TorsionBorderError):
    """The residue class module is not finitely generated."""


class MissingBorderElement(TorsionBorderError):
    """A border prebasis does not cover every border term exactly once."""


class TailNotInOrderIdeal(TorsionBorderError):
    """A prebasis tail has a term outside the order ideal."""

    def __init__(self, term, message=None):
        self.term = term
        super().__init__(message or f"tail term {term} does not lie in the order ideal")


class SelfMonomialInTail(TorsionBorderError):
    """A prebasis tail mentions the element's own border monomial."""


class NotAcyclic(TorsionBorderError):
    """The border prebasis has a cyclic scalar-border dependency."""

    def __init__(self, cycle, message=None):
        self.cycle = tuple(cycle)
        super().__init__(
            message or f"prebasis is not acyclic; scalar-border cycle: {list(cycle)}"
        )


class StepBudgetExceeded(TorsionBorderError):
    """Border division exceeded its scalar-elimination step budget."""


class ParseError(TorsionBorderError):
    """Syntax error in a polynomial expression."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class UnknownVariable(ParseError):
    """An undeclared variable name appeared in an expression."""


class ExponentOverflow(ParseError):
    """An exponent exceeds the supported limit."""


class ProblemFormatError(TorsionBorderError):
    """A problem file is malformed or missing a required section."""
