"""Involutive bases of polynomial ideals.

Two completion algorithms are provided.  ``involutive_basis`` keeps the
whole basis involutively autoreduced after every insertion and rebuilds its
triple bookkeeping from scratch each round.  ``minimal_involutive_basis``
instead runs two queues: an intermediate set whose prolongations are being
examined, and a pending queue of displaced elements; whenever a freshly
reduced element undercuts the leading monomials of the intermediate set,
the higher elements are demoted back to the queue.  For a constructive
noetherian division the second algorithm returns the unique minimal
involutive basis of the ideal.

Both algorithms prune prolongations with the ancestor criterion: a
prolongation whose leading monomial has an involutive divisor among the
tracked elements, with the two ancestors' lcm strictly below it, reduces to
zero and is skipped.  A test mode re-checks every skip by full reduction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .divisions import Division, _inv_divides, multiplicative_table
from .monomials import Monomial, Ordering, monomials_up_to_degree
from .polynomials import Polynomial, autoreduce, normal_form, s_polynomial


@dataclass(frozen=True, slots=True)
class Triple:
    """A basis member with its prolongation bookkeeping.

    ``ancestor`` is the leading monomial of the element this one descends
    from by non-multiplicative prolongations (its own when fresh);
    ``processed`` holds the variable positions already examined.  ``age``
    is an insertion counter used only to break selection ties.
    """

    poly: Polynomial
    ancestor: Monomial
    processed: frozenset[int]
    age: int


@dataclass
class BasisStats:
    prolongations_examined: int = 0
    criterion_hits: int = 0
    zero_reductions: int = 0
    nonzero_reductions: int = 0
    criterion_checked: int = 0
    criterion_violations: int = 0


@dataclass(frozen=True, slots=True)
class BasisResult:
    basis: tuple[Polynomial, ...]  # monic, ascending by leading monomial
    status: str  # "complete" | "cap_exceeded"
    division: Division
    ordering: Ordering
    stats: BasisStats


@dataclass(frozen=True, slots=True)
class VerifyResult:
    ok: bool
    reason: str = ""
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


class _Reducers:
    """Basis elements prepared for involutive reduction lookups."""

    __slots__ = ("items",)

    def __init__(
        self,
        polys: Sequence[Polynomial],
        table: dict[Monomial, frozenset[int]],
        ordering: Ordering,
        presorted: bool = False,
    ):
        if presorted:
            self.items = [(p.lm.exps, table[p.lm], p) for p in polys]
        else:
            order = sorted(range(len(polys)), key=lambda i: (ordering.key(polys[i].lm), i))
            self.items = [(polys[i].lm.exps, table[polys[i].lm], polys[i]) for i in order]

    def find(self, m: Monomial):
        exps = m.exps
        for lm_exps, mult, poly in self.items:
            ok = True
            for i, (a, b) in enumerate(zip(lm_exps, exps)):
                if a > b or (b > a and i not in mult):
                    ok = False
                    break
            if ok:
                return poly
        return None


def _nf(p: Polynomial, reducers: _Reducers, trace: Optional[list] = None) -> Polynomial:
    key = p.ordering.key
    work: dict[Monomial, Fraction] = dict(p.terms)
    out: dict[Monomial, Fraction] = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if not c:
            continue
        f = reducers.find(m)
        if f is None:
            out[m] = c
            continue
        v = m / f.lm
        factor = c / f.lc
        if trace is not None:
            trace.append((f, v, factor))
        for mm, cc in f.tail:
            mv = mm * v
            nc = work.get(mv, Fraction(0)) - factor * cc
            if nc:
                work[mv] = nc
            else:
                work.pop(mv, None)
    return Polynomial.from_terms(p.ctx, p.ordering, out)


def _prepare(F: Iterable[Polynomial], ordering: Ordering) -> list[Polynomial]:
    polys = [p.with_ordering(ordering) for p in F if not p.is_zero]
    if not polys:
        raise ValueError("need at least one nonzero polynomial")
    ctx = polys[0].ctx
    for p in polys:
        if p.ctx != ctx:
            raise ValueError("polynomials from different variable contexts")
    return polys


def involutive_normal_form(
    p: Polynomial,
    F: Iterable[Polynomial],
    division: Division,
    ordering: Ordering,
    trace: Optional[list] = None,
) -> Polynomial:
    """Involutive normal form of p modulo F.

    Reduction rewrites the highest reducible monomial with the reducer whose
    leading monomial is lowest (ties by position in F); an optional trace
    collects (reducer, multiplier, coefficient) steps.
    """
    polys = [f.with_ordering(ordering) for f in F if not f.is_zero]
    p = p.with_ordering(ordering)
    if not polys:
        return p
    table = multiplicative_table(division, [f.lm for f in polys])
    return _nf(p, _Reducers(polys, table, ordering), trace)


def involutive_autoreduce(F: Iterable[Polynomial], division: Division, ordering: Ordering) -> tuple[Polynomial, ...]:
    """Involutive analogue of autoreduction: reduce every member modulo the
    others until stable, with partitions always taken over the full current
    leading-monomial set."""
    polys = [p.with_ordering(ordering).monic() for p in F if not p.is_zero]
    seen: list[Polynomial] = []
    for p in polys:
        if p not in seen:
            seen.append(p)
    polys = seen
    guard = 0
    while polys:
        guard += 1
        if guard > 10000:
            raise RuntimeError("involutive autoreduction failed to stabilise")
        polys.sort(key=lambda p: ordering.key(p.lm))
        table = multiplicative_table(division, [p.lm for p in polys])
        changed = False
        for i in range(len(polys)):
            others = polys[:i] + polys[i + 1:]
            r = _nf(polys[i], _Reducers(others, table, ordering)) if others else polys[i]
            if r != polys[i]:
                changed = True
                if r.is_zero:
                    del polys[i]
                else:
                    polys[i] = r.monic()
                break
        if not changed:
            break
    return tuple(polys)


def _autoreduce_with_new(
    polys: list[Polynomial], h: Polynomial, division: Division, ordering: Ordering
) -> tuple[list[Polynomial], dict[Monomial, frozenset[int]]]:
    """Autoreduce an already-autoreduced basis extended by one normal form.

    Fast path: the new element is itself reduced, and the partitions of the
    old members can only shrink, so only reductions by the new element can
    appear.  When none exists the enlarged set is returned as-is (sorted);
    otherwise the full fixed-point autoreduction runs.  The multiplicative
    table of the returned set comes back with it so callers reuse it.
    """
    enlarged = sorted([*polys, h], key=lambda p: ordering.key(p.lm))
    table = multiplicative_table(division, [p.lm for p in enlarged])
    h_exps, h_mult = h.lm.exps, table[h.lm]
    for f in enlarged:
        if f is h:
            continue
        for m, _ in f.terms:
            if _inv_divides(h_exps, m.exps, h_mult):
                reduced = list(involutive_autoreduce(enlarged, division, ordering))
                return reduced, multiplicative_table(division, [p.lm for p in reduced])
    return enlarged, table


def criterion(g: Polynomial, u: Monomial, T: Iterable[Triple], division: Division, ordering: Ordering) -> bool:
    """True when some tracked (f, v) has lm(f) involutively dividing lm(g)
    with lcm(u, v) strictly below lm(g); such a prolongation reduces to 0."""
    triples = list(T)
    if not triples:
        return False
    table = multiplicative_table(division, [t.poly.lm for t in triples])
    return _criterion_holds(g.lm, u, triples, table, ordering)


def _criterion_holds(
    prol_lm: Monomial,
    ancestor: Monomial,
    triples: Sequence[Triple],
    table: dict[Monomial, frozenset[int]],
    ordering: Ordering,
) -> bool:
    bound = ordering.key(prol_lm)
    for t in triples:
        f_lm = t.poly.lm
        if _inv_divides(f_lm.exps, prol_lm.exps, table[f_lm]):
            if ordering.key(ancestor.lcm(t.ancestor)) < bound:
                return True
    return False


def _pack(
    triples: Sequence[Triple], status: str, division: Division, ordering: Ordering, stats: BasisStats
) -> BasisResult:
    basis = tuple(sorted((t.poly.monic() for t in triples), key=lambda p: ordering.key(p.lm)))
    return BasisResult(basis, status, division, ordering, stats)


def involutive_basis(
    F: Iterable[Polynomial],
    division: Division,
    ordering: Ordering,
    cap: int = 20000,
    *,
    check_criterion: bool = False,
    log: Optional[list[str]] = None,
) -> BasisResult:
    """Complete F to an involutive basis, keeping the set autoreduced.

    Every round selects the lowest untreated non-multiplicative
    prolongation, reduces it unless the criterion fires, inserts a nonzero
    result and re-autoreduces, then rebuilds the triples against the new
    basis.  The cap bounds the number of executed normal-form reductions.
    """
    stats = BasisStats()
    counter = itertools.count()
    polys = list(autoreduce(_prepare(F, ordering)))
    triples = [Triple(g, g.lm, frozenset(), next(counter)) for g in polys]
    status = "complete"
    n = polys[0].ctx.n
    # triples stay sorted ascending by leading monomial; the table matches
    # the current leading-monomial set and is rebuilt only when it changes
    table = multiplicative_table(division, [t.poly.lm for t in triples])
    while True:
        current = [t.poly for t in triples]
        best = None
        for idx, t in enumerate(triples):
            lm = t.poly.lm
            mult = table[lm]
            for x in range(n):
                if x in mult or x in t.processed:
                    continue
                prod = lm.mul_var(x)
                rank = (ordering.key(prod), t.age, x)
                if best is None or rank < best[0]:
                    best = (rank, idx, x, prod)
        if best is None:
            break
        _, idx, x, prod = best
        t = triples[idx]
        stats.prolongations_examined += 1
        triples[idx] = replace(t, processed=t.processed | {x})
        reducers = _Reducers(current, table, ordering, presorted=True)
        h: Optional[Polynomial] = None
        if _criterion_holds(prod, t.ancestor, triples, table, ordering):
            stats.criterion_hits += 1
            if log is not None:
                log.append(f"skip {prod} by criterion")
            if check_criterion:
                stats.criterion_checked += 1
                if not _nf(t.poly.mul_var(x), reducers).is_zero:
                    stats.criterion_violations += 1
        else:
            if stats.zero_reductions + stats.nonzero_reductions >= cap:
                status = "cap_exceeded"
                break
            r = _nf(t.poly.mul_var(x), reducers)
            if r.is_zero:
                stats.zero_reductions += 1
                if log is not None:
                    log.append(f"reduce {prod} -> 0")
            else:
                stats.nonzero_reductions += 1
                h = r.monic()
                if log is not None:
                    log.append(f"reduce {prod} -> {h.lm}")
        if h is not None:
            queue = list(triples)
            ancestor = t.ancestor if h.lm == prod else h.lm
            queue.append(Triple(h, ancestor, frozenset(), next(counter)))
            new_polys, table = _autoreduce_with_new(current, h, division, ordering)
            triples = _rebuild(new_polys, queue, table, ordering, counter)
            if not triples:
                raise RuntimeError("basis vanished during autoreduction")
        # with no new element the rebuild is the identity: every ancestor
        # is a member leading monomial, its own unique involutive cover
    return _pack(triples, status, division, ordering, stats)


def _rebuild(
    new_polys: Sequence[Polynomial],
    queue: Sequence[Triple],
    table: dict[Monomial, frozenset[int]],
    ordering: Ordering,
    counter,
) -> list[Triple]:
    """Reattach triple bookkeeping to a just-autoreduced basis.

    A member keeps the processed set of the old triple with the same
    leading monomial; its ancestor is remapped to the leading monomial of
    the unique member involutively covering it, or reset to its own when
    the old ancestor is no longer covered.  ``table`` holds the partitions
    of the new leading-monomial set.
    """
    lm_set = {p.lm for p in new_polys}
    by_lm: dict[Monomial, Triple] = {}
    for q in queue:
        # distinct leading monomials are an invariant of the caller
        by_lm.setdefault(q.poly.lm, q)
    out = []
    for g in sorted(new_polys, key=lambda p: ordering.key(p.lm)):
        q = by_lm.get(g.lm)
        if q is None:
            out.append(Triple(g, g.lm, frozenset(), next(counter)))
            continue
        if q.ancestor in lm_set:
            # on an involutively autoreduced set a member's only
            # involutive cover is itself
            out.append(Triple(g, q.ancestor, q.processed, q.age))
            continue
        covers = [p for p in new_polys if _inv_divides(p.lm.exps, q.ancestor.exps, table[p.lm])]
        if len(covers) > 1:
            raise RuntimeError("involutive cones overlap on an autoreduced set")
        ancestor = covers[0].lm if covers else g.lm
        out.append(Triple(g, ancestor, q.processed, q.age))
    return out


def minimal_involutive_basis(
    F: Iterable[Polynomial],
    division: Division,
    ordering: Ordering,
    cap: int = 20000,
    *,
    check_criterion: bool = False,
    reset_processed_on_demotion: bool = False,
    log: Optional[list[str]] = None,
) -> BasisResult:
    """Complete F to the minimal involutive basis (two-queue strategy).

    The intermediate set only ever grows at the top: whenever a reduced
    element lands below existing leading monomials, everything above it is
    demoted back to the pending queue and reconsidered later.  Every such
    contraction resets all processed-variable marks, demoted and kept
    alike; a mark certifies a prolongation only against sets the basis has
    grown from, never across a shrink (``reset_processed_on_demotion`` is
    accepted for compatibility and adds nothing beyond that reset).  The
    cap bounds the number of executed normal-form reductions across both
    loops.
    """
    stats = BasisStats()
    counter = itertools.count()
    start = list(autoreduce(_prepare(F, ordering)))
    ctx = start[0].ctx
    n = ctx.n
    T = [Triple(start[0], start[0].lm, frozenset(), next(counter))]
    Q = [Triple(f, f.lm, frozenset(), next(counter)) for f in start[1:]]
    status = "complete"

    def clear(t: Triple) -> Triple:
        return replace(t, processed=frozenset()) if t.processed else t

    def demote(new_lm: Monomial) -> None:
        bound = ordering.key(new_lm)
        kept = []
        moved = []
        for t in T:
            if ordering.key(t.poly.lm) > bound:
                moved.append(t)
                if log is not None:
                    log.append(f"demote {t.poly.lm}")
            else:
                kept.append(t)
        if not moved:
            T[:] = kept
            return
        # a contraction can remove the very cone that justified an earlier
        # prolongation mark, on members staying put as much as on the moved
        # ones, so every mark everywhere is reset; marks made after this
        # point face only a growing set again, where handled stays handled
        T[:] = [clear(t) for t in kept]
        Q[:] = [clear(t) for t in Q]
        Q.extend(clear(t) for t in moved)

    capped = False
    while True:
        h: Optional[Polynomial] = None
        origin: Optional[Triple] = None
        # T is fixed while the pending queue is drained, so its partitions
        # and reducers are computed once per drain
        current = [t.poly for t in T]
        table = multiplicative_table(division, [p.lm for p in current])
        reducers = _Reducers(current, table, ordering)
        while Q and h is None:
            i = min(range(len(Q)), key=lambda k: (ordering.key(Q[k].poly.lm), Q[k].age))
            q = Q.pop(i)
            if _criterion_holds(q.poly.lm, q.ancestor, T, table, ordering):
                stats.criterion_hits += 1
                if log is not None:
                    log.append(f"skip queued {q.poly.lm} by criterion")
                if check_criterion:
                    stats.criterion_checked += 1
                    if not _nf(q.poly, reducers).is_zero:
                        stats.criterion_violations += 1
                continue
            if stats.zero_reductions + stats.nonzero_reductions >= cap:
                status = "cap_exceeded"
                capped = True
                break
            r = _nf(q.poly, reducers)
            if r.is_zero:
                stats.zero_reductions += 1
            else:
                stats.nonzero_reductions += 1
                h = r.monic()
                origin = q
        if capped:
            break
        if h is not None:
            assert origin is not None
            if h.lm == origin.poly.lm:
                T.append(Triple(h, origin.ancestor, origin.processed, next(counter)))
            else:
                T.append(Triple(h, h.lm, frozenset(), next(counter)))
                demote(h.lm)
        # examine prolongations of the intermediate set, staying below the
        # lowest pending leading monomial while the queue is non-empty
        dirty = h is not None
        while True:
            if dirty:
                current = [t.poly for t in T]
                table = multiplicative_table(division, [p.lm for p in current])
                reducers = _Reducers(current, table, ordering)
                dirty = False
            qmin = min(ordering.key(t.poly.lm) for t in Q) if Q else None
            best = None
            for idx, t in enumerate(T):
                lm = t.poly.lm
                mult = table[lm]
                for x in range(n):
                    if x in mult or x in t.processed:
                        continue
                    prod = lm.mul_var(x)
                    pk = ordering.key(prod)
                    if qmin is not None and not pk < qmin:
                        continue
                    rank = (pk, t.age, x)
                    if best is None or rank < best[0]:
                        best = (rank, idx, x, prod)
            if best is None:
                break
            _, idx, x, prod = best
            t = T[idx]
            stats.prolongations_examined += 1
            T[idx] = replace(t, processed=t.processed | {x})
            if _criterion_holds(prod, t.ancestor, T, table, ordering):
                stats.criterion_hits += 1
                if log is not None:
                    log.append(f"skip {prod} by criterion")
                if check_criterion:
                    stats.criterion_checked += 1
                    if not _nf(t.poly.mul_var(x), reducers).is_zero:
                        stats.criterion_violations += 1
                continue
            if stats.zero_reductions + stats.nonzero_reductions >= cap:
                status = "cap_exceeded"
                capped = True
                break
            r = _nf(t.poly.mul_var(x), reducers)
            if r.is_zero:
                stats.zero_reductions += 1
                if log is not None:
                    log.append(f"reduce {prod} -> 0")
                continue
            stats.nonzero_reductions += 1
            h2 = r.monic()
            if log is not None:
                log.append(f"reduce {prod} -> {h2.lm}")
            if h2.lm == prod:
                T.append(Triple(h2, t.ancestor, frozenset(), next(counter)))
            else:
                T.append(Triple(h2, h2.lm, frozenset(), next(counter)))
                demote(h2.lm)
            dirty = True
        if capped or not Q:
            break
    return _pack(T, status, division, ordering, stats)


def verify_involutive(
    G: Iterable[Polynomial],
    division: Division,
    ordering: Ordering,
    mode: str = "local",
    degree_bound: int = 3,
) -> VerifyResult:
    """Verify that G is an involutive basis.

    ``local`` checks every non-multiplicative prolongation; ``global``
    additionally reduces f times every monomial multiplier up to
    ``degree_bound``.  The set must be involutively autoreduced first.
    """
    polys = [p.with_ordering(ordering).monic() for p in G if not p.is_zero]
    if not polys:
        return VerifyResult(False, reason="empty basis")
    if mode not in ("local", "global"):
        raise ValueError(f"unknown mode {mode!r}")
    if len({p.lm for p in polys}) != len(polys):
        return VerifyResult(False, reason="not involutively autoreduced: duplicate leading monomials")
    table = multiplicative_table(division, [p.lm for p in polys])
    for i, f in enumerate(polys):
        others = polys[:i] + polys[i + 1:]
        if others and _nf(f, _Reducers(others, table, ordering)) != f:
            return VerifyResult(False, reason="not involutively autoreduced", witness=(f,))
    reducers = _Reducers(polys, table, ordering)
    n = polys[0].ctx.n
    failing = []
    for f in polys:
        for x in range(n):
            if x in table[f.lm]:
                continue
            if not _nf(f.mul_var(x), reducers).is_zero:
                failing.append((f, x))
    if failing:
        f, x = min(failing, key=lambda p: (ordering.key(p[0].lm.mul_var(p[1])), ordering.key(p[0].lm)))
        return VerifyResult(False, reason="uncovered non-multiplicative prolongation", witness=(f, x))
    if mode == "global":
        ctx = polys[0].ctx
        for u in monomials_up_to_degree(ctx, degree_bound):
            for f in polys:
                if not _nf(f.mul_term(Fraction(1), u), reducers).is_zero:
                    return VerifyResult(False, reason="uncovered multiple", witness=(f, u))
    return VerifyResult(True)


def verify_groebner(G: Iterable[Polynomial], ordering: Ordering) -> bool:
    """Buchberger's test: every S-polynomial reduces to zero modulo G."""
    polys = [p.with_ordering(ordering) for p in G if not p.is_zero]
    if not polys:
        return False
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if not normal_form(s_polynomial(polys[i], polys[j]), polys).is_zero:
                return False
    return True


def nf_equality_check(p: Polynomial, G: Sequence[Polynomial], division: Division, ordering: Ordering) -> bool:
    """On an involutive basis the involutive and conventional normal forms
    agree; this is the per-probe equality test."""
    inv = involutive_normal_form(p, G, division, ordering)
    conv = normal_form(p.with_ordering(ordering), [g.with_ordering(ordering) for g in G])
    return inv == conv
