"""Exact arithmetic foundation: prime-field scalars, monomials, and sparse
multivariate polynomials with pluggable monomial orders.

Monomials are plain tuples of nonnegative exponents (length = number of ring
variables).  Polynomials store a dict mapping monomial -> nonzero coefficient
in F_p.  All values are immutable after construction and safe to share across
threads; lengths and combinatorial counts use Python's arbitrary-precision
integers, so every downstream equality check is exact.
"""

from __future__ import annotations

import math
import re

__all__ = [
    "RingContext",
    "Polynomial",
    "ContextMismatchError",
    "ParseError",
    "binomial",
    "is_prime",
    "parse_polynomial",
]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class ContextMismatchError(ValueError):
    """Raised when operands belong to different ring contexts."""


class ParseError(ValueError):
    """Raised on malformed polynomial text."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def binomial(a: int, b: int) -> int:
    """Binomial coefficient C(a, b) with C(a, b) = 0 when b < 0 or a < b."""
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


def _make_keys(order, r):
    """Return (sort_key, heap_key) for an order tag.

    sort_key is ascending in the monomial order; heap_key is its negation so
    a min-heap pops the largest monomial first.
    """
    if order == "grevlex":
        def sort_key(m):
            return (sum(m), tuple(-e for e in reversed(m)))

        def heap_key(m):
            return (-sum(m), m[::-1])

    elif order == "lex":
        def sort_key(m):
            return m

        def heap_key(m):
            return tuple(-e for e in m)

    elif isinstance(order, tuple) and len(order) == 3 and order[0] == "elim":
        k = order[1]
        base_sort, base_heap = _make_keys(order[2], r)

        def sort_key(m):
            return (sum(m[:k]), base_sort(m))

        def heap_key(m):
            return (-sum(m[:k]), base_heap(m))

    else:
        raise ValueError(f"unknown monomial order {order!r}")
    return sort_key, heap_key


class RingContext:
    """A polynomial ring F_p[variables] together with a monomial order.

    Valid order tags: "grevlex" (default), "lex", and the internal
    ("elim", k, base) block order that eliminates the first k variables.
    """

    __slots__ = ("variables", "characteristic", "order", "sort_key",
                 "heap_key", "_var_index")

    def __init__(self, variables, characteristic=32003, order="grevlex"):
        variables = tuple(variables)
        if not variables:
            raise ValueError("at least one variable is required")
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be unique")
        for name in variables:
            if not _NAME_RE.fullmatch(name):
                raise ValueError(f"invalid variable name {name!r}")
        if not is_prime(characteristic):
            raise ValueError(f"characteristic {characteristic} is not prime")
        self.variables = variables
        self.characteristic = characteristic
        self.order = order
        self.sort_key, self.heap_key = _make_keys(order, len(variables))
        self._var_index = {name: i for i, name in enumerate(variables)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def variable_index(self, name: str) -> int:
        try:
            return self._var_index[name]
        except KeyError:
            raise ParseError(f"unknown variable {name!r}") from None

    def unit_monomial(self):
        return (0,) * len(self.variables)

    def __eq__(self, other):
        if not isinstance(other, RingContext):
            return NotImplemented
        return (self.variables == other.variables
                and self.characteristic == other.characteristic
                and self.order == other.order)

    def __hash__(self):
        return hash((self.variables, self.characteristic, self.order))

    def __reduce__(self):
        return (RingContext, (self.variables, self.characteristic, self.order))

    def __repr__(self):
        return (f"RingContext({list(self.variables)}, "
                f"p={self.characteristic}, order={self.order!r})")


def _check_ctx(a: "Polynomial", b: "Polynomial"):
    if a.ctx != b.ctx:
        raise ContextMismatchError("operands come from different ring contexts")


class Polynomial:
    """Sparse multivariate polynomial over F_p.

    Stored coefficients are canonical residues in 1..p-1; zero coefficients
    are never stored, so equal polynomials have equal term dicts.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: RingContext, terms=None):
        p = ctx.characteristic
        clean = {}
        if terms:
            r = ctx.nvars
            for mono, coeff in terms.items():
                if len(mono) != r:
                    raise ValueError("monomial length does not match ring")
                c = coeff % p
                if c:
                    prev = clean.get(mono)
                    if prev is None:
                        clean[mono] = c
                    else:
                        merged = (prev + c) % p
                        if merged:
                            clean[mono] = merged
                        else:
                            del clean[mono]
        self.ctx = ctx
        self.terms = clean

    @classmethod
    def zero(cls, ctx: RingContext) -> "Polynomial":
        return cls(ctx, {})

    @classmethod
    def constant(cls, ctx: RingContext, value: int) -> "Polynomial":
        return cls(ctx, {ctx.unit_monomial(): value})

    @classmethod
    def variable(cls, ctx: RingContext, name: str) -> "Polynomial":
        i = ctx.variable_index(name)
        mono = tuple(1 if j == i else 0 for j in range(ctx.nvars))
        return cls(ctx, {mono: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def leading_monomial(self):
        if not self.terms:
            return None
        return max(self.terms, key=self.ctx.sort_key)

    def leading_coefficient(self) -> int:
        lm = self.leading_monomial()
        return self.terms[lm] if lm is not None else 0

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        inv = pow(self.leading_coefficient(), -1, self.ctx.characteristic)
        return self.scale(inv)

    def scale(self, c: int) -> "Polynomial":
        p = self.ctx.characteristic
        c %= p
        if c == 0:
            return Polynomial.zero(self.ctx)
        if c == 1:
            return self
        return Polynomial(self.ctx, {m: v * c % p for m, v in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        _check_ctx(self, other)
        p = self.ctx.characteristic
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        res = Polynomial.__new__(Polynomial)
        res.ctx = self.ctx
        res.terms = out
        return res

    def __neg__(self):
        p = self.ctx.characteristic
        res = Polynomial.__new__(Polynomial)
        res.ctx = self.ctx
        res.terms = {m: p - c for m, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        _check_ctx(self, other)
        p = self.ctx.characteristic
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = (out.get(m, 0) + c1 * c2) % p
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        res = Polynomial.__new__(Polynomial)
        res.ctx = self.ctx
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self.ctx, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def substitute(self, images) -> "Polynomial":
        """Evaluate at variable images (a list of polynomials, one per variable)."""
        if len(images) != self.ctx.nvars:
            raise ValueError("need one image per variable")
        for g in images:
            _check_ctx(images[0], g)
        target = images[0].ctx
        out = Polynomial.zero(target)
        for mono, coeff in sorted(self.terms.items(), key=lambda t: self.ctx.sort_key(t[0])):
            prod = Polynomial.constant(target, coeff)
            for i, e in enumerate(mono):
                if e:
                    prod = prod * images[i] ** e
            out = out + prod
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __reduce__(self):
        return (Polynomial, (self.ctx, self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=self.ctx.sort_key, reverse=True):
            coeff = self.terms[mono]
            factors = []
            for name, e in zip(self.ctx.variables, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{coeff}*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


# ---------------------------------------------------------------------------
# Parsing.  Grammar (whitespace insensitive):
#
#   expr   := ["+" | "-"] term (("+" | "-") term)*
#   term   := factor ("*" factor)*
#   factor := atom ["^" INT]
#   atom   := INT | NAME | "(" expr ")"
#
# Implicit multiplication is rejected: "2x" is a syntax error, "2*x" parses.
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r} at position {pos}")
        if m.group(1) is not None:
            tokens.append(("int", m.group(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
        pos = m.end()
    tokens.append(("end", ""))
    return tokens


class _Parser:
    def __init__(self, tokens, ctx):
        self.tokens = tokens
        self.ctx = ctx
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, value = self.advance()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}, found {value!r}")

    def parse_expr(self):
        kind, value = self.peek()
        negate = False
        if kind == "op" and value in "+-":
            self.advance()
            negate = value == "-"
        poly = self.parse_term()
        if negate:
            poly = -poly
        while True:
            kind, value = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.parse_term()
                poly = poly - rhs if value == "-" else poly + rhs
            else:
                return poly

    def parse_term(self):
        poly = self.parse_factor()
        while True:
            kind, value = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                poly = poly * self.parse_factor()
            else:
                return poly

    def parse_factor(self):
        poly = self.parse_atom()
        kind, value = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            kind, value = self.advance()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer")
            poly = poly ** int(value)
        return poly

    def parse_atom(self):
        kind, value = self.advance()
        if kind == "int":
            return Polynomial.constant(self.ctx, int(value))
        if kind == "name":
            return Polynomial.variable(self.ctx, value)
        if kind == "op" and value == "(":
            poly = self.parse_expr()
            self.expect_op(")")
            return poly
        raise ParseError(f"unexpected token {value!r}")


def parse_polynomial(text: str, ctx: RingContext) -> Polynomial:
    """Parse polynomial text into canonical form, coefficients reduced mod p."""
    parser = _Parser(_tokenize(text), ctx)
    poly = parser.parse_expr()
    kind, value = parser.peek()
    if kind != "end":
        raise ParseError(f"trailing input starting at {value!r}")
    return poly
