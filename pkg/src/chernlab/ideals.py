"""Ideal arithmetic (sum, product, power, intersection), Krull dimension,
Hilbert series of monomial ideals, and zero-dimensional colength.

All ideals are homogeneous, which keeps every finite colength equal to a
graded vector-space dimension and lets the colength computation run the
Buchberger engine degree by degree, stopping as soon as a degree carries no
standard monomials.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement

from .core import ContextMismatchError, Polynomial, RingContext, parse_polynomial
from .groebner import (GroebnerBasis, _Engine, _mono_divides,
                       _next_standard_degree, buchberger, normal_form)

__all__ = [
    "Ideal",
    "HilbertSeries",
    "NotFiniteLengthError",
    "ideal_sum",
    "ideal_product",
    "ideal_power",
    "ideal_intersect",
    "intersect_all",
    "krull_dimension",
    "is_mprimary",
    "monomial_hilbert_series",
    "quotient_hilbert_series",
    "quotient_length",
]


class NotFiniteLengthError(ValueError):
    """Raised when a colength is requested for a positive-dimensional quotient."""


class Ideal:
    """A homogeneous ideal: generator list plus a cached reduced Groebner basis.

    The cache is filled on first use; computation is deterministic, so a
    benign race between threads can only recompute the same value.
    """

    __slots__ = ("ctx", "generators", "_gb")

    def __init__(self, ctx: RingContext, generators):
        gens = []
        for g in generators:
            if g.ctx != ctx:
                raise ContextMismatchError("generator from a different ring context")
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
            if not g.is_zero():
                gens.append(g)
        self.ctx = ctx
        self.generators = tuple(gens)
        self._gb = None

    @classmethod
    def from_strings(cls, ctx: RingContext, texts) -> "Ideal":
        return cls(ctx, [parse_polynomial(t, ctx) for t in texts])

    def groebner(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = buchberger(self.generators, self.ctx)
        return self._gb

    def lead_monomials(self):
        return self.groebner().lead_monomials()

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self.groebner()).is_zero()

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ctx != other.ctx:
            return False
        return self.groebner() == other.groebner()

    def __reduce__(self):
        return (Ideal, (self.ctx, self.generators))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal({gens})"


def _check_pair(a: Ideal, b: Ideal):
    if a.ctx != b.ctx:
        raise ContextMismatchError("ideals come from different ring contexts")


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    _check_pair(a, b)
    return Ideal(a.ctx, list(a.generators) + list(b.generators))


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    _check_pair(a, b)
    return Ideal(a.ctx, [f * g for f in a.generators for g in b.generators])


def ideal_power(a: Ideal, n: int) -> Ideal:
    """Ideal generated by all n-fold products of the generators."""
    if n < 1:
        raise ValueError("exponent must be at least 1")
    if n == 1:
        return a
    gens = []
    for combo in combinations_with_replacement(a.generators, n):
        prod = combo[0]
        for g in combo[1:]:
            prod = prod * g
        gens.append(prod)
    return Ideal(a.ctx, gens)


def ideal_intersect(a: Ideal, b: Ideal) -> Ideal:
    """Intersection via the single auxiliary variable t:

    A ∩ B = (t*A + (1-t)*B) ∩ k[x], computed with a block order eliminating
    t.  Ties inside each block follow the base context order, so the t-free
    part of the elimination basis is already the reduced basis of A ∩ B.
    """
    _check_pair(a, b)
    ctx = a.ctx
    tname = "t"
    while tname in ctx.variables:
        tname += "_"
    ectx = RingContext((tname,) + ctx.variables, ctx.characteristic,
                       ("elim", 1, ctx.order))

    def lift(f, t_exp, scale=1):
        return Polynomial(ectx, {(t_exp,) + m: c * scale
                                 for m, c in f.terms.items()})

    gens = [lift(f, 1) for f in a.generators]
    for g in b.generators:
        gens.append(lift(g, 0) + lift(g, 1, -1))

    eliminated = buchberger(gens, ectx)
    kept = []
    for g in eliminated:
        if all(m[0] == 0 for m in g.terms):
            kept.append(Polynomial(ctx, {m[1:]: c for m, c in g.terms.items()}))
    result = Ideal(ctx, kept)
    result._gb = GroebnerBasis(ctx, kept)
    return result


def intersect_all(ideals) -> Ideal:
    ideals = list(ideals)
    if not ideals:
        raise ValueError("need at least one ideal")
    acc = ideals[0]
    for other in ideals[1:]:
        acc = ideal_intersect(acc, other)
    return acc


def _dimension_from_leads(lead_monomials, r) -> int:
    """Dimension of a monomial ideal's quotient: the largest variable subset U
    such that no generator is supported inside U.  Returns -1 for the unit
    ideal (every subset, including the empty one, contains the support of 1).
    """
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in lead_monomials]
    for size in range(r, -1, -1):
        for subset in combinations(range(r), size):
            u = frozenset(subset)
            if not any(s <= u for s in supports):
                return size
    return -1


def krull_dimension(a: Ideal) -> int:
    """dim S/a, computed from the initial ideal of the cached basis."""
    return _dimension_from_leads(a.lead_monomials(), a.ctx.nvars)


def is_mprimary(a: Ideal) -> bool:
    return krull_dimension(a) == 0


# ---------------------------------------------------------------------------
# Hilbert series of monomial ideals
# ---------------------------------------------------------------------------


def _poly_mul_z(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _minimalize(monos):
    """Minimal generators of the monomial ideal generated by monos."""
    uniq = sorted(set(monos), key=lambda m: (sum(m), m))
    out = []
    for m in uniq:
        if not any(_mono_divides(g, m) for g in out):
            out.append(m)
    return out


def _series_numerator(gens, r):
    """Numerator of HS(S/I) over (1-t)^r for a minimal monomial generating set.

    Recursion on a variable pivot x_u (the most frequent variable, ties by
    index):  N(I) = N(I + (x_u)) + t * N(I : x_u).
    """
    if not gens:
        return [1]
    unit = (0,) * r
    if unit in gens:
        return [0]
    if all(sum(1 for e in m if e) == 1 for m in gens):
        # pairwise coprime variable powers: product formula
        num = [1]
        for m in gens:
            factor = [0] * (sum(m) + 1)
            factor[0] = 1
            factor[sum(m)] = -1
            num = _poly_mul_z(num, factor)
        return num
    # Pivot on the most frequent variable (ties: smallest index) among
    # mixed-support generators; pivoting on a variable that only occurs in a
    # pure power would fail to shrink the "+ pivot" branch.
    counts = [0] * r
    for m in gens:
        if sum(1 for e in m if e) > 1:
            for i, e in enumerate(m):
                if e:
                    counts[i] += 1
    u = max(range(r), key=lambda i: (counts[i], -i))
    pivot = tuple(1 if i == u else 0 for i in range(r))
    plus = _minimalize([m for m in gens if m[u] == 0] + [pivot])
    colon = _minimalize([tuple(e - 1 if i == u and e else e
                               for i, e in enumerate(m)) for m in gens])
    a = _series_numerator(plus, r)
    b = _series_numerator(colon, r)
    out = [0] * max(len(a), len(b) + 1)
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i + 1] += x
    return out


class HilbertSeries:
    """A series numerator/(1-t)^s, stored in lowest terms: (1-t) is divided
    out of the numerator until s reaches 0 or the numerator stops vanishing
    at t = 1.  When s = 0 the series is the (finite) dimension sequence
    itself and total() gives the full dimension of the quotient."""

    __slots__ = ("numerator", "denominator_exponent")

    def __init__(self, numerator, denominator_exponent):
        num = list(numerator)
        while num and num[-1] == 0:
            num.pop()
        s = denominator_exponent
        while s > 0 and num and sum(num) == 0:
            quotient = []
            acc = 0
            for c in num[:-1]:
                acc += c
                quotient.append(acc)
            num = quotient
            while num and num[-1] == 0:
                num.pop()
            s -= 1
        if not num:
            s = 0
        self.numerator = tuple(num)
        self.denominator_exponent = s

    def is_polynomial(self) -> bool:
        return self.denominator_exponent == 0

    def degree(self):
        """Degree of a polynomial series (None for 0)."""
        if not self.is_polynomial():
            raise ValueError("series has a pole at t = 1")
        return len(self.numerator) - 1 if self.numerator else None

    def total(self) -> int:
        if not self.is_polynomial():
            raise NotFiniteLengthError("quotient does not have finite length")
        return sum(self.numerator)

    def coefficients_up_to(self, max_degree: int):
        """Dimension sequence dim (S/I)_s for s = 0..max_degree."""
        from .core import binomial

        out = [0] * (max_degree + 1)
        s = self.denominator_exponent
        for j, c in enumerate(self.numerator):
            if c == 0 or j > max_degree:
                continue
            if s == 0:
                out[j] += c
            else:
                for k in range(j, max_degree + 1):
                    out[k] += c * binomial(k - j + s - 1, s - 1)
        return out

    def _lift(self, s):
        num = list(self.numerator)
        for _ in range(s - self.denominator_exponent):
            num = [a - b for a, b in zip(num + [0], [0] + num)]
        return num

    def __add__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        s = max(self.denominator_exponent, other.denominator_exponent)
        a = self._lift(s)
        b = other._lift(s)
        width = max(len(a), len(b))
        num = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
               for i in range(width)]
        return HilbertSeries(num, s)

    def __sub__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        s = max(self.denominator_exponent, other.denominator_exponent)
        a = self._lift(s)
        b = other._lift(s)
        width = max(len(a), len(b))
        num = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
               for i in range(width)]
        return HilbertSeries(num, s)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return (self.numerator == other.numerator
                and self.denominator_exponent == other.denominator_exponent)

    def __repr__(self):
        return (f"HilbertSeries(numerator={list(self.numerator)}, "
                f"denominator_exponent={self.denominator_exponent})")


def monomial_hilbert_series(lead_monomials, ctx: RingContext) -> HilbertSeries:
    """Exact Hilbert series of S/(monomial ideal)."""
    r = ctx.nvars
    gens = _minimalize(lead_monomials)
    return HilbertSeries(_series_numerator(gens, r), r)


def quotient_hilbert_series(a: Ideal) -> HilbertSeries:
    """Hilbert series of S/a via the initial ideal of the reduced basis."""
    return monomial_hilbert_series(a.lead_monomials(), a.ctx)


def quotient_length(a: Ideal) -> int:
    """Total number of standard monomials of S/a (its colength).

    The Buchberger engine is advanced one degree at a time; standard
    monomials are tracked incrementally and the loop stops at the first
    degree carrying none (such a degree exists exactly when dim S/a = 0, in
    which case the ideal contains a power of every variable).  Raises
    NotFiniteLengthError when dim S/a > 0.
    """
    ctx = a.ctx
    if a._gb is not None:
        series = quotient_hilbert_series(a)
        if not series.is_polynomial():
            raise NotFiniteLengthError("quotient does not have finite length")
        return series.total()
    if not a.generators:
        raise NotFiniteLengthError("quotient does not have finite length")
    engine = _Engine(a.generators, ctx)
    unit = ctx.unit_monomial()
    total = 0
    std = [unit]
    degree = 0
    dimension_checked = False
    while True:
        engine.run(degree)
        leads = engine.lms
        if degree == 0 and any(m == unit for m in leads):
            return 0
        if degree > 0:
            std = _next_standard_degree(std, leads, ctx)
        if not std:
            return total
        total += len(std)
        if engine.exhausted and not dimension_checked:
            dimension_checked = True
            if _dimension_from_leads(leads, ctx.nvars) > 0:
                raise NotFiniteLengthError(
                    "quotient does not have finite length")
        degree += 1
