"""Involutive bases for polynomial ideals over the rationals.

Exact arithmetic throughout (``fractions.Fraction``).  The package
provides monomial machinery, five involutive divisions, monomial set
completion, a polynomial layer with a conventional Groebner oracle, and
the involutive basis algorithms themselves.
"""
from .completion import (
    CompletionResult,
    CompletionStep,
    autoreduce_monomials,
    is_involutive_up_to,
    is_locally_involutive,
    minimal_monomial_completion,
)
from .divisions import (
    AxiomReport,
    Division,
    Partition,
    check_division_axioms,
    involutive_divisors,
    is_involutive_divisor,
    multiplicative_table,
    partition,
)
from .engine import (
    BasisResult,
    BasisStats,
    Triple,
    VerifyResult,
    criterion,
    involutive_autoreduce,
    involutive_basis,
    involutive_normal_form,
    minimal_involutive_basis,
    nf_equality_check,
    verify_groebner,
    verify_involutive,
)
from .monomials import ContextMismatch, Monomial, Ordering, VariableContext, compare, monomials_up_to_degree
from .parsing import ParseError, parse_monomial, parse_monomial_file, parse_polynomial, parse_polynomial_file
from .polynomials import Polynomial, autoreduce, buchberger, normal_form, s_polynomial, same_ideal

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "BasisResult",
    "BasisStats",
    "CompletionResult",
    "CompletionStep",
    "ContextMismatch",
    "Division",
    "Monomial",
    "Ordering",
    "ParseError",
    "Partition",
    "Polynomial",
    "Triple",
    "VariableContext",
    "VerifyResult",
    "autoreduce",
    "autoreduce_monomials",
    "buchberger",
    "check_division_axioms",
    "compare",
    "criterion",
    "involutive_autoreduce",
    "involutive_basis",
    "involutive_divisors",
    "involutive_normal_form",
    "is_involutive_divisor",
    "is_involutive_up_to",
    "is_locally_involutive",
    "minimal_involutive_basis",
    "minimal_monomial_completion",
    "monomials_up_to_degree",
    "multiplicative_table",
    "nf_equality_check",
    "normal_form",
    "parse_monomial",
    "parse_monomial_file",
    "parse_polynomial",
    "parse_polynomial_file",
    "partition",
    "s_polynomial",
    "same_ideal",
    "verify_groebner",
    "verify_involutive",
    "__version__",
]
