"""Text forms for monomials and polynomials.

The grammar is deliberately small: integer or rational coefficients
(``3``, ``-7/2``), ``+``/``-`` between terms, ``*`` between factors and
``^`` for exponents, e.g. ``x^2*y - 1``.  Errors carry the line and column
where parsing stopped.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .monomials import Monomial, Ordering, VariableContext
from .polynomials import Polynomial


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str  # NUM, NAME, OP, END
    text: str
    col: int


def _tokenize(text: str, line: int) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("NUM", text[i:j], i + 1))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("NAME", text[i:j], i + 1))
            i = j
            continue
        if ch in "+-*/^":
            tokens.append(_Token("OP", ch, i + 1))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, i + 1)
    tokens.append(_Token("END", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], line: int, ctx: VariableContext):
        self.tokens = tokens
        self.pos = 0
        self.line = line
        self.ctx = ctx

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, tok: Optional[_Token] = None):
        tok = tok or self.peek()
        raise ParseError(message, self.line, tok.col)

    def number(self) -> Fraction:
        tok = self.take()
        value = Fraction(int(tok.text))
        if self.peek().kind == "OP" and self.peek().text == "/":
            self.take()
            den = self.peek()
            if den.kind != "NUM":
                self.fail("expected an integer denominator")
            self.take()
            if int(den.text) == 0:
                self.fail("zero denominator", den)
            value /= int(den.text)
        return value

    def factor(self) -> tuple[Fraction, dict[int, int]]:
        tok = self.peek()
        if tok.kind == "NUM":
            return self.number(), {}
        if tok.kind == "NAME":
            self.take()
            try:
                idx = self.ctx.index(tok.text)
            except KeyError:
                self.fail(f"unknown variable {tok.text!r}", tok)
            power = 1
            if self.peek().kind == "OP" and self.peek().text == "^":
                self.take()
                exp = self.peek()
                if exp.kind == "OP" and exp.text == "-":
                    self.fail("exponent must be a non-negative integer", exp)
                if exp.kind != "NUM":
                    self.fail("expected an integer exponent", exp)
                self.take()
                power = int(exp.text)
            return Fraction(1), {idx: power}
        self.fail("expected a coefficient or a variable", tok)

    def term(self) -> tuple[Fraction, dict[int, int]]:
        coeff, exps = self.factor()
        while self.peek().kind == "OP" and self.peek().text == "*":
            self.take()
            c2, e2 = self.factor()
            coeff *= c2
            for idx, p in e2.items():
                exps[idx] = exps.get(idx, 0) + p
        nxt = self.peek()
        if nxt.kind in ("NUM", "NAME"):
            self.fail("expected an operator between factors", nxt)
        return coeff, exps

    def polynomial(self, ordering: Ordering) -> Polynomial:
        terms: list[tuple[Monomial, Fraction]] = []
        sign = Fraction(1)
        tok = self.peek()
        if tok.kind == "OP" and tok.text in "+-":
            self.take()
            sign = Fraction(-1) if tok.text == "-" else Fraction(1)
        if self.peek().kind == "END":
            self.fail("expected a term")
        while True:
            coeff, exps = self.term()
            full = [0] * self.ctx.n
            for idx, p in exps.items():
                full[idx] = p
            terms.append((Monomial(self.ctx, tuple(full)), sign * coeff))
            tok = self.peek()
            if tok.kind == "END":
                break
            if tok.kind == "OP" and tok.text in "+-":
                self.take()
                sign = Fraction(-1) if tok.text == "-" else Fraction(1)
                continue
            self.fail("expected '+' or '-' between terms", tok)
        return Polynomial.from_terms(self.ctx, ordering, terms)


def parse_polynomial(text: str, ctx: VariableContext, ordering: Ordering, line: int = 1) -> Polynomial:
    parser = _Parser(_tokenize(text, line), line, ctx)
    return parser.polynomial(ordering)


def parse_monomial(text: str, ctx: VariableContext, line: int = 1) -> Monomial:
    """A single monomial with an implicit coefficient of one, e.g. ``x^2*y``."""
    parser = _Parser(_tokenize(text, line), line, ctx)
    if parser.peek().kind == "END":
        parser.fail("expected a monomial")
    coeff, exps = parser.term()
    tok = parser.peek()
    if tok.kind != "END":
        parser.fail("a monomial holds a single term", tok)
    if coeff != 1:
        raise ParseError("a monomial must carry coefficient 1", line, 1)
    full = [0] * ctx.n
    for idx, p in exps.items():
        full[idx] = p
    return Monomial(ctx, tuple(full))


def _collect_names(lines: Iterable[tuple[int, str]]) -> tuple[str, ...]:
    names: list[str] = []
    for lineno, text in lines:
        for tok in _tokenize(text, lineno):
            if tok.kind == "NAME" and tok.text not in names:
                names.append(tok.text)
    return tuple(names)


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((lineno, raw))
    return out


def parse_polynomial_file(
    text: str, ctx: Optional[VariableContext], ordering: Ordering
) -> tuple[tuple[Polynomial, ...], VariableContext, list[str]]:
    """Parse one polynomial per line; ``#`` lines and blanks are skipped.

    Without a declared context the variables are inferred in order of first
    appearance, which is reported as a warning.
    """
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input", 1, 1)
    warnings = []
    if ctx is None:
        names = _collect_names(lines)
        if not names:
            raise ParseError("no variables found and none declared", lines[0][0], 1)
        ctx = VariableContext(names)
        warnings.append(f"variables inferred from input: {','.join(names)}")
    polys = tuple(parse_polynomial(text, ctx, ordering, line=lineno) for lineno, text in lines)
    return polys, ctx, warnings


def parse_monomial_file(
    text: str, ctx: Optional[VariableContext]
) -> tuple[tuple[Monomial, ...], VariableContext, list[str]]:
    """Parse one monomial per line with the same conventions as polynomials."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input", 1, 1)
    warnings = []
    if ctx is None:
        names = _collect_names(lines)
        if not names:
            raise ParseError("no variables found and none declared", lines[0][0], 1)
        ctx = VariableContext(names)
        warnings.append(f"variables inferred from input: {','.join(names)}")
    monos = tuple(parse_monomial(text, ctx, line=lineno) for lineno, text in lines)
    return monos, ctx, warnings
