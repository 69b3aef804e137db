"""Exact Groebner bases over Z and acyclic border bases for torsion residue rings."""

from .coeff_ring import (
    CoefIdeal,
    CosetRep,
    coset_rep,
    ideal_contains,
    ideal_from_generators,
    ideal_subset,
    ideal_sum,
)
from .poly import (
    LeadingData,
    Monomial,
    MonomialOrder,
    Polynomial,
    Term,
    leading_data,
    monomial_compare,
)
from .order_ideal import (
    Border,
    CoefficientIdealMapping,
    OrderIdealData,
    border_form,
    borders,
    index_poly,
    index_term,
    kth_border,
    validate_mapping,
)
from .groebner import (
    GroebnerBasis,
    GroebnerIdealMapping,
    ResidueAnalysis,
    buchberger,
    cim_from_gb,
    g_polynomial,
    gb_reduce,
    is_free_representation,
    is_residue_fg,
    leading_coefficient_ideal,
    residue_analysis,
    s_polynomial,
    short_reduce,
    weak_standard_monomials,
)
from .border_div import (
    AcyclicityReport,
    BorderPrebasis,
    DivisionResult,
    PrebasisElement,
    VerificationReport,
    acyclicity,
    border_basis_from_gb,
    border_divide,
    is_member,
    normal_form,
    o_remainder,
    pauer_subset_check,
    validate_prebasis,
    verify_border_basis,
)
from .textio import (
    ProblemFile,
    format_monomial,
    format_poly,
    load_problem,
    load_problem_text,
    parse_monomial,
    parse_poly,
)
from . import errors

__all__ = [
    "AcyclicityReport",
    "Border",
    "BorderPrebasis",
    "CoefficientIdealMapping",
    "CoefIdeal",
    "CosetRep",
    "DivisionResult",
    "GroebnerBasis",
    "GroebnerIdealMapping",
    "LeadingData",
    "Monomial",
    "MonomialOrder",
    "OrderIdealData",
    "Polynomial",
    "PrebasisElement",
    "ProblemFile",
    "ResidueAnalysis",
    "Term",
    "VerificationReport",
    "acyclicity",
    "border_basis_from_gb",
    "border_divide",
    "border_form",
    "borders",
    "buchberger",
    "cim_from_gb",
    "coset_rep",
    "errors",
    "format_monomial",
    "format_poly",
    "g_polynomial",
    "gb_reduce",
    "ideal_contains",
    "ideal_from_generators",
    "ideal_subset",
    "ideal_sum",
    "index_poly",
    "index_term",
    "is_free_representation",
    "is_member",
    "is_residue_fg",
    "kth_border",
    "leading_coefficient_ideal",
    "leading_data",
    "load_problem",
    "load_problem_text",
    "monomial_compare",
    "normal_form",
    "o_remainder",
    "parse_monomial",
    "parse_poly",
    "pauer_subset_check",
    "residue_analysis",
    "s_polynomial",
    "short_reduce",
    "validate_mapping",
    "validate_prebasis",
    "verify_border_basis",
    "weak_standard_monomials",
]
