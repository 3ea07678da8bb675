"""Built-in example corpus with known completions.

Four small inputs exercise every division: a three-monomial staircase whose
completions differ across all five divisions (and diverge for Pommaret), the
same staircase under a variable order that makes the Pommaret completion
trivial, a corner set whose Pommaret completion adds a single monomial, and
a lexicographic polynomial system whose minimal basis collapses to
``{x - 1, y - 1}``.  Expected values are stored as text and used by the
golden tests and the bench harness.
"""
from __future__ import annotations

from dataclasses import dataclass

from .monomials import Ordering


@dataclass(frozen=True, slots=True)
class CorpusCase:
    name: str
    kind: str  # "monomials" | "polynomials"
    variables: tuple[str, ...]
    ordering: Ordering
    lines: tuple[str, ...]
    # minimal completions per division, None where the completion is infinite
    expected_completion: dict


CASES: tuple[CorpusCase, ...] = (
    CorpusCase(
        name="staircase",
        kind="monomials",
        variables=("x", "y", "z"),
        ordering=Ordering.DEGLEX,
        lines=("x^2", "x*y", "z"),
        expected_completion={
            "thomas": ("x^2", "x*y", "z", "x*z", "y*z", "x^2*y", "x*y*z", "x^2*z", "x^2*y*z"),
            "janet": ("x^2", "x*y", "z", "x*z"),
            "pommaret": None,
            "division1": ("x^2", "x*y", "z", "x*z", "x^2*y", "x*y*z", "x^2*z", "x^2*y*z"),
            "division2": ("x^2", "x*y", "z", "x*z", "y*z", "x*y*z"),
        },
    ),
    CorpusCase(
        name="staircase-zxy",
        kind="monomials",
        variables=("z", "x", "y"),
        ordering=Ordering.DEGLEX,
        lines=("x^2", "x*y", "z"),
        expected_completion={
            "pommaret": ("x^2", "x*y", "z"),
        },
    ),
    CorpusCase(
        name="corner",
        kind="monomials",
        variables=("x", "y", "z"),
        ordering=Ordering.DEGLEX,
        lines=("x^2", "x*z", "y"),
        expected_completion={
            "pommaret": ("x^2", "x*y", "x*z", "y"),
        },
    ),
    CorpusCase(
        name="binomial-lex",
        kind="polynomials",
        variables=("x", "y"),
        ordering=Ordering.LEX,
        lines=("x^2*y - 1", "x*y^2 - 1", "y^4 - 1"),
        expected_completion={
            "janet-involutive": (
                "x^2*y - 1",
                "x^2 - 1",
                "x*y^2 - 1",
                "x*y - 1",
                "x - 1",
                "y^4 - 1",
                "y^3 - 1",
                "y^2 - 1",
                "y - 1",
            ),
            "janet-minimal": ("x - 1", "y - 1"),
            "buchberger": ("x - 1", "y - 1"),
        },
    ),
)


def case(name: str) -> CorpusCase:
    for c in CASES:
        if c.name == name:
            return c
    raise KeyError(f"no corpus case named {name!r}")
