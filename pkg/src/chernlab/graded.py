"""Graded vector-space model of the cokernel L of the diagonal embedding

    S/(I_1 ∩ ... ∩ I_g)  >-->  S/I_1 ⊕ ... ⊕ S/I_g.

When the pairwise sums I_i + I_j are m-primary this cokernel has finite
length; its Hilbert series is the difference of the component series and the
series of the intersection, and that difference being a polynomial certifies
the exact top degree.  The model carries explicit bases (tuples of standard
monomials) and multiplication matrices for each ring variable, which is
enough to decide annihilation by an ideal and to measure colengths of power
actions by plain dense linear algebra over F_p.
"""

from __future__ import annotations

from .core import Polynomial
from .groebner import normal_form, standard_monomials
from .ideals import (Ideal, NotFiniteLengthError, intersect_all,
                     quotient_hilbert_series)
from .linalg import RowSpan, mat_mul, mat_vec, rref_mod_p

__all__ = [
    "CokernelModule",
    "diagonal_cokernel",
    "module_length",
    "annihilates",
    "power_colength",
]


class CokernelModule:
    """Finite-length graded module with per-degree bases and variable actions.

    dims[s] is the dimension in degree s (s = 0..top_degree); bases[s] lists
    the coordinate labels (component index, standard monomial) chosen for
    degree s; var_maps[u][s] is the matrix of multiplication by variable u
    from degree s to s+1 (maps out of top_degree are zero and not stored).
    top_degree is None exactly when the module is zero.
    """

    __slots__ = ("ctx", "length", "top_degree", "dims", "bases", "var_maps")

    def __init__(self, ctx, length, top_degree, dims, bases, var_maps):
        self.ctx = ctx
        self.length = length
        self.top_degree = top_degree
        self.dims = tuple(dims)
        self.bases = tuple(tuple(b) for b in bases)
        self.var_maps = var_maps

    def dim(self, s: int) -> int:
        if self.top_degree is None or s < 0 or s > self.top_degree:
            return 0
        return self.dims[s]

    def variable_map(self, u: int, s: int):
        """Matrix of multiplication by variable u, degree s -> s+1."""
        if self.top_degree is None or s < 0 or s >= self.top_degree:
            return []
        return self.var_maps[u][s]

    def monomial_action(self, mono, s: int):
        """Matrix of multiplication by a monomial from degree s upward,
        composing variable maps in ascending variable order."""
        e = sum(mono)
        target = self.dim(s + e)
        source = self.dim(s)
        if target == 0 or source == 0:
            return [[0] * source for _ in range(target)]
        p = self.ctx.characteristic
        mat = [[1 if i == j else 0 for j in range(source)] for i in range(source)]
        level = s
        for u, exp in enumerate(mono):
            for _ in range(exp):
                mat = mat_mul(self.variable_map(u, level), mat, p)
                level += 1
                if not mat:
                    return [[0] * source for _ in range(target)]
        return mat

    def polynomial_action(self, f: Polynomial, s: int):
        """Matrix of multiplication by a homogeneous polynomial at degree s."""
        if f.is_zero() or not f.is_homogeneous():
            raise ValueError("action needs a nonzero homogeneous element")
        e = f.degree()
        p = self.ctx.characteristic
        target = self.dim(s + e)
        source = self.dim(s)
        acc = [[0] * source for _ in range(target)]
        for mono, coeff in sorted(f.terms.items(), key=lambda t: self.ctx.sort_key(t[0])):
            mat = self.monomial_action(mono, s)
            for i in range(target):
                row = mat[i]
                arow = acc[i]
                for j in range(source):
                    arow[j] = (arow[j] + coeff * row[j]) % p
        return acc


def _project(vector, rref_rows, pivot_cols, free_cols, p):
    """Class of a vector in the quotient by the row space, in free coordinates."""
    v = list(vector)
    for row, piv in zip(rref_rows, pivot_cols):
        c = v[piv] % p
        if c:
            v = [(a - c * b) % p for a, b in zip(v, row)]
    return [v[j] % p for j in free_cols]


def diagonal_cokernel(ideals) -> CokernelModule:
    """Build the graded model of L = (⊕ S/I_i) / S/(∩ I_i).

    Raises NotFiniteLengthError when the Hilbert series difference is not a
    polynomial, which signals that some pairwise sum I_i + I_j fails to be
    m-primary and L has infinite length.
    """
    ideals = list(ideals)
    if not ideals:
        raise ValueError("need at least one ideal")
    ctx = ideals[0].ctx
    for ideal in ideals:
        if ideal.ctx != ctx:
            raise ValueError("ideals come from different ring contexts")
    p = ctx.characteristic

    core = intersect_all(ideals) if len(ideals) > 1 else ideals[0]
    series = quotient_hilbert_series(ideals[0])
    for ideal in ideals[1:]:
        series = series + quotient_hilbert_series(ideal)
    series = series - quotient_hilbert_series(core)
    if not series.is_polynomial():
        raise NotFiniteLengthError(
            "cokernel of the diagonal map has infinite length; "
            "some pairwise sum of the ideals is not m-primary")

    dims = list(series.numerator)
    length = sum(dims)
    if length == 0:
        return CokernelModule(ctx, 0, None, [], [], [])
    top = len(dims) - 1

    component_gbs = [ideal.groebner() for ideal in ideals]
    core_std = standard_monomials(core.groebner(), top)
    comp_std = [standard_monomials(gb, top) for gb in component_gbs]

    coords = []        # per degree: list of (component, monomial)
    coord_index = []   # per degree: dict (component, monomial) -> position
    for s in range(top + 1):
        labels = [(i, m) for i in range(len(ideals)) for m in comp_std[i][s]]
        coords.append(labels)
        coord_index.append({lab: j for j, lab in enumerate(labels)})

    rrefs = []
    bases = []
    for s in range(top + 1):
        rows = []
        for mono in core_std[s]:
            row = [0] * len(coords[s])
            f = Polynomial(ctx, {mono: 1})
            for i, gb in enumerate(component_gbs):
                nf = normal_form(f, gb)
                for m, c in nf.terms.items():
                    row[coord_index[s][(i, m)]] = c
            rows.append(row)
        rref_rows, pivots = rref_mod_p(rows, p)
        if len(pivots) != len(rows):
            raise RuntimeError("diagonal map is not injective degreewise; "
                               "internal inconsistency")
        free = [j for j in range(len(coords[s])) if j not in set(pivots)]
        if len(free) != dims[s]:
            raise RuntimeError("cokernel dimension disagrees with the Hilbert "
                               "series; internal inconsistency")
        rrefs.append((rref_rows, pivots, free))
        bases.append([coords[s][j] for j in free])

    nvars = ctx.nvars
    var_maps = [[None] * top for _ in range(nvars)]
    for s in range(top):
        rref_rows, pivots, free = rrefs[s + 1]
        for u in range(nvars):
            columns = []
            for (i, mono) in bases[s]:
                shifted = tuple(e + 1 if v == u else e for v, e in enumerate(mono))
                nf = normal_form(Polynomial(ctx, {shifted: 1}), component_gbs[i])
                vec = [0] * len(coords[s + 1])
                for m, c in nf.terms.items():
                    vec[coord_index[s + 1][(i, m)]] = c
                columns.append(_project(vec, rref_rows, pivots, free, p))
            matrix = [[columns[j][i] for j in range(len(columns))]
                      for i in range(dims[s + 1])]
            var_maps[u][s] = matrix

    return CokernelModule(ctx, length, top, dims, bases, var_maps)


def module_length(model: CokernelModule) -> int:
    """Total length of the module (sum of the per-degree dimensions)."""
    return model.length


def annihilates(ideal: Ideal, model: CokernelModule) -> bool:
    """True when every generator of the ideal acts as zero on every graded
    piece of the module."""
    if model.top_degree is None:
        return True
    for f in ideal.generators:
        e = f.degree()
        for s in range(model.top_degree + 1):
            if s + e > model.top_degree:
                continue
            matrix = model.polynomial_action(f, s)
            if any(any(entry for entry in row) for row in matrix):
                return False
    return True


def power_colength(model: CokernelModule, ideal: Ideal, n: int) -> int:
    """Colength of the n-th power action: length(L / ideal^n L).

    Spans are propagated degreewise by multiplying with the generators n
    times; equals the full length once n exceeds top_degree because every
    generator has positive degree.
    """
    if n < 0:
        raise ValueError("power must be nonnegative")
    if model.top_degree is None or n == 0:
        return 0
    p = model.ctx.characteristic
    top = model.top_degree

    actions = []
    for f in ideal.generators:
        e = f.degree()
        per_degree = {}
        for s in range(top + 1):
            if s + e <= top and model.dim(s) and model.dim(s + e):
                per_degree[s] = model.polynomial_action(f, s)
        actions.append((e, per_degree))

    spans = {s: [[1 if i == j else 0 for j in range(model.dim(s))]
                 for i in range(model.dim(s))]
             for s in range(top + 1) if model.dim(s)}
    for _ in range(n):
        collected = {}
        for e, per_degree in actions:
            for s, matrix in per_degree.items():
                if s not in spans:
                    continue
                bucket = collected.setdefault(s + e, RowSpan(p))
                for vec in spans[s]:
                    bucket.add(mat_vec(matrix, vec, p))
        spans = {t: span.rows for t, span in collected.items() if span.rank}
        if not spans:
            break
    submodule = sum(len(rows) for rows in spans.values())
    return model.length - submodule
