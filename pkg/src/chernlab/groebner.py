"""Reduced Groebner bases via Buchberger's algorithm.

The engine processes critical pairs in nondecreasing S-degree (degree of the
pair's lcm), with ties broken by the monomial order on the lcm and then on the
two leading monomials, so output is deterministic for fixed input.  Pairs are
pruned with the coprime (product) criterion and the chain criterion; the
Buchberger S-polynomial property test in the suite guards both.

For homogeneous input the degree-ordered schedule makes the basis exact
degree by degree, which supports truncated computation: once every pair of
S-degree <= s has been processed, the leading terms of degree <= s are final.
"""

from __future__ import annotations

from heapq import heapify, heappop, heappush

from .core import ContextMismatchError, Polynomial

__all__ = [
    "GroebnerBasis",
    "buchberger",
    "normal_form",
    "s_polynomial",
    "standard_monomials",
]


def _mono_lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _mono_divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _reduce_terms(terms, lms, degs, tails, p, heap_key, nb):
    """Full normal form of a term dict against monic reducers.

    Monomials are processed from largest to smallest via a heap; each
    reduction step can only introduce strictly smaller monomials, so the loop
    terminates with a remainder none of whose terms is divisible by any
    reducer leading monomial.
    """
    work = dict(terms)
    heap = [(heap_key(m), m) for m in work]
    heapify(heap)
    out = {}
    while heap:
        _, m = heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        mdeg = sum(m)
        red = -1
        for idx in range(nb):
            if degs[idx] <= mdeg and _mono_divides(lms[idx], m):
                red = idx
                break
        if red < 0:
            out[m] = c
            continue
        lt = lms[red]
        q = tuple(y - x for x, y in zip(lt, m))
        for tm, tc in tails[red]:
            mm = tuple(x + y for x, y in zip(q, tm))
            prev = work.get(mm)
            if prev is None:
                v = (-c * tc) % p
                if v:
                    work[mm] = v
                    heappush(heap, (heap_key(mm), mm))
            else:
                v = (prev - c * tc) % p
                if v:
                    work[mm] = v
                else:
                    del work[mm]
    return out


class _Engine:
    """Incremental Buchberger run over term dicts.

    Basis elements are stored monic.  ``run(limit)`` processes every queued
    pair of S-degree <= limit (all pairs when limit is None).
    """

    def __init__(self, gens, ctx):
        self.ctx = ctx
        self.p = ctx.characteristic
        self.sort_key = ctx.sort_key
        self.heap_key = ctx.heap_key
        self.lms = []
        self.degs = []
        self.tails = []
        self.polys = []
        self.pairs = []
        self.pending = set()
        for g in gens:
            if g.terms:
                self._append(dict(g.terms))

    def _append(self, terms):
        key = self.sort_key
        lm = max(terms, key=key)
        lc = terms[lm]
        if lc != 1:
            inv = pow(lc, -1, self.p)
            terms = {m: c * inv % self.p for m, c in terms.items()}
        j = len(self.lms)
        tail = sorted(((m, c) for m, c in terms.items() if m != lm),
                      key=lambda t: key(t[0]), reverse=True)
        self.lms.append(lm)
        self.degs.append(sum(lm))
        self.tails.append(tail)
        self.polys.append(terms)
        for i in range(j):
            lcm = _mono_lcm(self.lms[i], lm)
            entry = ((sum(lcm), key(lcm), key(self.lms[i]), key(lm)), i, j)
            heappush(self.pairs, entry)
            self.pending.add((i, j))

    @property
    def exhausted(self):
        return not self.pairs

    def next_degree(self):
        return self.pairs[0][0][0] if self.pairs else None

    def run(self, limit=None):
        pairs = self.pairs
        pending = self.pending
        lms = self.lms
        while pairs and (limit is None or pairs[0][0][0] <= limit):
            _, i, j = heappop(pairs)
            pending.discard((i, j))
            lm_i = lms[i]
            lm_j = lms[j]
            lcm = _mono_lcm(lm_i, lm_j)
            # coprime criterion
            if all(x + y == z for x, y, z in zip(lm_i, lm_j, lcm)):
                continue
            # chain criterion
            skip = False
            for k in range(len(lms)):
                if k == i or k == j:
                    continue
                if _mono_divides(lms[k], lcm):
                    a = (i, k) if i < k else (k, i)
                    b = (j, k) if j < k else (k, j)
                    if a not in pending and b not in pending:
                        skip = True
                        break
            if skip:
                continue
            s_terms = self._spair_terms(i, j, lcm)
            if not s_terms:
                continue
            reduced = _reduce_terms(s_terms, self.lms, self.degs, self.tails,
                                    self.p, self.heap_key, len(self.lms))
            if reduced:
                self._append(reduced)

    def _spair_terms(self, i, j, lcm):
        p = self.p
        qi = tuple(a - b for a, b in zip(lcm, self.lms[i]))
        qj = tuple(a - b for a, b in zip(lcm, self.lms[j]))
        out = {}
        for m, c in self.polys[i].items():
            out[tuple(a + b for a, b in zip(qi, m))] = c
        for m, c in self.polys[j].items():
            mm = tuple(a + b for a, b in zip(qj, m))
            v = (out.get(mm, 0) - c) % p
            if v:
                out[mm] = v
            else:
                out.pop(mm, None)
        return out


def _interreduce(term_dicts, ctx):
    """Turn a generating set with the Groebner property into the reduced basis."""
    key = ctx.sort_key
    p = ctx.characteristic
    items = []
    for terms in term_dicts:
        if terms:
            items.append((max(terms, key=key), terms))
    items.sort(key=lambda t: key(t[0]))
    kept = []
    for lm, terms in items:
        if any(_mono_divides(klm, lm) for klm, _ in kept):
            continue
        kept.append((lm, terms))
    heap_key = ctx.heap_key
    reduced = []
    for idx, (lm, terms) in enumerate(kept):
        lms = [k for i, (k, _) in enumerate(kept) if i != idx]
        degs = [sum(k) for k in lms]
        tails = []
        for i, (klm, kterms) in enumerate(kept):
            if i != idx:
                tail = sorted(((m, c) for m, c in kterms.items() if m != klm),
                              key=lambda t: key(t[0]), reverse=True)
                tails.append(tail)
        out = _reduce_terms(terms, lms, degs, tails, p, heap_key, len(lms))
        lc = out[lm]
        if lc != 1:
            inv = pow(lc, -1, p)
            out = {m: c * inv % p for m, c in out.items()}
        reduced.append(out)
    return reduced


class GroebnerBasis:
    """A reduced Groebner basis: monic elements sorted by leading monomial.

    When ``degree_bound`` is set the basis is only guaranteed to determine the
    ideal's leading terms up to that degree (homogeneous input only).
    """

    __slots__ = ("ctx", "elements", "degree_bound", "_lead")

    def __init__(self, ctx, elements, degree_bound=None):
        self.ctx = ctx
        self.elements = tuple(elements)
        self.degree_bound = degree_bound
        self._lead = tuple(g.leading_monomial() for g in self.elements)

    def lead_monomials(self):
        return self._lead

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.ctx == other.ctx and self.elements == other.elements

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.elements)
        return f"GroebnerBasis([{gens}])"


def buchberger(gens, ctx=None, degree_bound=None) -> GroebnerBasis:
    """Compute the reduced Groebner basis of the ideal generated by gens.

    With ``degree_bound`` set, only pairs of S-degree <= bound are processed
    and only elements of degree <= bound are returned; this requires all
    generators to be homogeneous.
    """
    gens = list(gens)
    if ctx is None:
        if not gens:
            raise ValueError("cannot infer ring context from empty input")
        ctx = gens[0].ctx
    for g in gens:
        if g.ctx != ctx:
            raise ContextMismatchError("generator from a different ring context")
    if degree_bound is not None and any(not g.is_homogeneous() for g in gens):
        raise ValueError("degree-truncated computation requires homogeneous input")
    engine = _Engine(gens, ctx)
    engine.run(degree_bound)
    dicts = engine.polys
    if degree_bound is not None:
        dicts = [t for t, d in zip(engine.polys, engine.degs) if d <= degree_bound]
    reduced = _interreduce(dicts, ctx)
    elements = [Polynomial(ctx, t) for t in reduced]
    return GroebnerBasis(ctx, elements, degree_bound)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial of two nonzero polynomials (leading terms cancelled)."""
    if f.ctx != g.ctx:
        raise ContextMismatchError("operands come from different ring contexts")
    if f.is_zero() or g.is_zero():
        return Polynomial.zero(f.ctx)
    f = f.monic()
    g = g.monic()
    lf = f.leading_monomial()
    lg = g.leading_monomial()
    lcm = _mono_lcm(lf, lg)
    qf = tuple(a - b for a, b in zip(lcm, lf))
    qg = tuple(a - b for a, b in zip(lcm, lg))
    ctx = f.ctx
    mf = Polynomial(ctx, {qf: 1})
    mg = Polynomial(ctx, {qg: 1})
    return mf * f - mg * g


def normal_form(f: Polynomial, basis: GroebnerBasis) -> Polynomial:
    """Remainder of f under multivariate division by the basis.

    For a (reduced) Groebner basis the result is the unique normal form, so
    ``normal_form(f, G) == 0`` decides ideal membership and the operation is
    idempotent.
    """
    if f.ctx != basis.ctx:
        raise ContextMismatchError("polynomial and basis contexts differ")
    if f.is_zero() or not basis.elements:
        return f
    ctx = basis.ctx
    key = ctx.sort_key
    lms = list(basis.lead_monomials())
    degs = [sum(m) for m in lms]
    tails = []
    for g, lm in zip(basis.elements, lms):
        tail = sorted(((m, c) for m, c in g.terms.items() if m != lm),
                      key=lambda t: key(t[0]), reverse=True)
        tails.append(tail)
    out = _reduce_terms(f.terms, lms, degs, tails, ctx.characteristic,
                        ctx.heap_key, len(lms))
    res = Polynomial.__new__(Polynomial)
    res.ctx = ctx
    res.terms = out
    return res


def _next_standard_degree(prev_std, lead_monomials, ctx):
    """Standard monomials one degree up from a standard-monomial list.

    Every standard monomial of degree s+1 is a variable multiple of a
    standard monomial of degree s, so candidates are generated from prev_std
    and filtered by divisibility.
    """
    r = ctx.nvars
    candidates = set()
    for m in prev_std:
        for u in range(r):
            candidates.add(tuple(e + 1 if i == u else e for i, e in enumerate(m)))
    out = []
    for m in sorted(candidates, key=ctx.sort_key):
        if not any(_mono_divides(lm, m) for lm in lead_monomials):
            out.append(m)
    return out


def standard_monomials(basis: GroebnerBasis, max_degree: int):
    """Monomials of each degree 0..max_degree not divisible by any leading
    monomial of the basis: a vector-space basis of the quotient per degree."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    if basis.degree_bound is not None and basis.degree_bound < max_degree:
        raise ValueError("basis was truncated below the requested degree")
    ctx = basis.ctx
    lead = basis.lead_monomials()
    unit = ctx.unit_monomial()
    per_degree = []
    current = [] if any(lm == unit for lm in lead) else [unit]
    per_degree.append(list(current))
    for _ in range(max_degree):
        current = _next_standard_degree(current, lead, ctx)
        per_degree.append(current)
    return per_degree
