"""Sparse multivariate polynomials over the rationals.

Terms are kept sorted, highest first, under the polynomial's own ordering;
coefficients are exact Fractions throughout.  The module also carries the
conventional machinery (normal form, autoreduction, S-polynomials,
Buchberger) that serves as the independent oracle for the involutive
algorithms.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .monomials import ContextMismatch, Monomial, Ordering, VariableContext

Term = tuple[Monomial, Fraction]


@dataclass(frozen=True, slots=True, eq=False)
class Polynomial:
    ctx: VariableContext
    ordering: Ordering
    terms: tuple[Term, ...]  # sorted descending, no zero coefficients

    @classmethod
    def from_terms(cls, ctx: VariableContext, ordering: Ordering, terms: Mapping[Monomial, Fraction] | Iterable[Term]) -> "Polynomial":
        acc: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            if m.ctx != ctx:
                raise ContextMismatch("term monomial from a different context")
            c = Fraction(c)
            if c:
                acc[m] = acc.get(m, Fraction(0)) + c
        cleaned = tuple(sorted(((m, c) for m, c in acc.items() if c), key=lambda t: ordering.key(t[0]), reverse=True))
        return cls(ctx, ordering, cleaned)

    @classmethod
    def zero(cls, ctx: VariableContext, ordering: Ordering) -> "Polynomial":
        return cls(ctx, ordering, ())

    @classmethod
    def from_monomial(cls, m: Monomial, ordering: Ordering, coeff: Fraction | int = 1) -> "Polynomial":
        return cls.from_terms(m.ctx, ordering, [(m, Fraction(coeff))])

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lm(self) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def lc(self) -> Fraction:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.terms[0][1]

    @property
    def tail(self) -> tuple[Term, ...]:
        return self.terms[1:]

    def coefficient(self, m: Monomial) -> Fraction:
        for mm, c in self.terms:
            if mm == m:
                return c
        return Fraction(0)

    def with_ordering(self, ordering: Ordering) -> "Polynomial":
        if ordering is self.ordering:
            return self
        return Polynomial.from_terms(self.ctx, ordering, self.terms)

    def _check(self, other: "Polynomial") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatch("polynomials from different variable contexts")
        if self.ordering is not other.ordering:
            raise ValueError("polynomials carry different orderings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = acc.get(m, Fraction(0)) + c
        return Polynomial.from_terms(self.ctx, self.ordering, acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ctx, self.ordering, tuple((m, -c) for m, c in self.terms))

    def scale(self, c: Fraction | int) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.ctx, self.ordering)
        return Polynomial(self.ctx, self.ordering, tuple((m, c * cc) for m, cc in self.terms))

    def mul_term(self, coeff: Fraction | int, monomial: Monomial) -> "Polynomial":
        coeff = Fraction(coeff)
        if not coeff:
            return Polynomial.zero(self.ctx, self.ordering)
        # multiplying by one monomial preserves the order of the terms
        return Polynomial(self.ctx, self.ordering, tuple((m * monomial, coeff * c) for m, c in self.terms))

    def mul_var(self, i: int) -> "Polynomial":
        return Polynomial(self.ctx, self.ordering, tuple((m.mul_var(i), c) for m, c in self.terms))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = m1 * m2
                acc[m] = acc.get(m, Fraction(0)) + c1 * c2
        return Polynomial.from_terms(self.ctx, self.ordering, acc)

    def monic(self) -> "Polynomial":
        if self.is_zero or self.lc == 1:
            return self
        inv = 1 / self.lc
        return Polynomial(self.ctx, self.ordering, tuple((m, c * inv) for m, c in self.terms))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.ctx, frozenset(self.terms)))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, (m, c) in enumerate(self.terms):
            mag = abs(c)
            if m.is_one:
                body = str(mag)
            elif mag == 1:
                body = str(m)
            else:
                body = f"{mag}*{m}"
            if k == 0:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def _coerce(F: Iterable[Polynomial], ordering: Optional[Ordering]) -> list[Polynomial]:
    polys = [p for p in F if not p.is_zero]
    if not polys:
        return []
    if ordering is None:
        ordering = polys[0].ordering
    ctx = polys[0].ctx
    out = []
    for p in polys:
        if p.ctx != ctx:
            raise ContextMismatch("polynomials from different variable contexts")
        out.append(p.with_ordering(ordering))
    return out


def normal_form(p: Polynomial, F: Sequence[Polynomial]) -> Polynomial:
    """Full conventional normal form of p modulo F.

    Strategy is fixed for determinism: always rewrite the highest reducible
    monomial, using the reducer with the lowest leading monomial, ties by
    position in F.
    """
    reducers = [f for f in F if not f.is_zero]
    for f in reducers:
        p._check(f)
    order = sorted(range(len(reducers)), key=lambda i: (p.ordering.key(reducers[i].lm), i))
    reducers = [reducers[i] for i in order]
    key = p.ordering.key
    work: dict[Monomial, Fraction] = dict(p.terms)
    out: dict[Monomial, Fraction] = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if not c:
            continue
        hit = None
        for f in reducers:
            if f.lm.divides(m):
                hit = f
                break
        if hit is None:
            out[m] = c
            continue
        v = m / hit.lm
        factor = c / hit.lc
        for mm, cc in hit.tail:
            mv = mm * v
            nc = work.get(mv, Fraction(0)) - factor * cc
            if nc:
                work[mv] = nc
            else:
                work.pop(mv, None)
    return Polynomial.from_terms(p.ctx, p.ordering, out)


def autoreduce(F: Iterable[Polynomial]) -> tuple[Polynomial, ...]:
    """Mutually reduce a set to a fixed point; members come back monic,
    sorted ascending by leading monomial."""
    polys = _coerce(F, None)
    if not polys:
        return ()
    ordering = polys[0].ordering
    polys = [p.monic() for p in polys]
    guard = 0
    while True:
        guard += 1
        if guard > 10000:
            raise RuntimeError("autoreduction failed to stabilise")
        polys.sort(key=lambda p: ordering.key(p.lm))
        changed = False
        for i in range(len(polys)):
            rest = polys[:i] + polys[i + 1:]
            r = normal_form(polys[i], rest)
            if r != polys[i]:
                changed = True
                if r.is_zero:
                    del polys[i]
                else:
                    polys[i] = r.monic()
                break
        if not changed:
            return tuple(polys)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero or g.is_zero:
        raise ValueError("S-polynomial of a zero polynomial is undefined")
    f._check(g)
    w = f.lm.lcm(g.lm)
    return f.mul_term(1 / f.lc, w / f.lm) - g.mul_term(1 / g.lc, w / g.lm)


def buchberger(F: Iterable[Polynomial], ordering: Optional[Ordering] = None) -> tuple[Polynomial, ...]:
    """Reduced monic Groebner basis via Buchberger's algorithm.

    Pairs are treated in normal selection order (lowest lcm first) and
    pruned with the coprime-lm and chain criteria.
    """
    polys = _coerce(F, ordering)
    if not polys:
        return ()
    ordering = polys[0].ordering
    G = list(autoreduce(polys))
    if not G:
        return ()
    key = ordering.key
    pending: set[tuple[int, int]] = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    while pending:
        i, j = min(pending, key=lambda p: (key(G[p[0]].lm.lcm(G[p[1]].lm)), p))
        pending.remove((i, j))
        li, lj = G[i].lm, G[j].lm
        w = li.lcm(lj)
        if w == li * lj:
            continue  # coprime leading monomials
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if G[k].lm.divides(w) and (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                skip = True  # chain criterion
                break
        if skip:
            continue
        r = normal_form(s_polynomial(G[i], G[j]), G)
        if r.is_zero:
            continue
        G.append(r.monic())
        new = len(G) - 1
        pending.update((k, new) for k in range(new))
    # minimalise, then interreduce tails
    G.sort(key=lambda p: key(p.lm))
    minimal: list[Polynomial] = []
    for p in G:
        if not any(q.lm.divides(p.lm) for q in minimal):
            minimal.append(p)
    return autoreduce(minimal)


def same_ideal(F: Iterable[Polynomial], G: Iterable[Polynomial], ordering: Optional[Ordering] = None) -> bool:
    """Ideal equality through the unique reduced Groebner bases."""
    return list(buchberger(F, ordering)) == list(buchberger(G, ordering))
