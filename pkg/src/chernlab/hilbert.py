"""Hilbert-Samuel function values, exact polynomial fitting in the
alternating binomial basis, Cohen-Macaulay test, and Chern-number sign.

The fitted polynomial has the shape

    P(n) = e_0 C(n+d-1, d) - e_1 C(n+d-2, d-1) + ... + (-1)^d e_d

and the fit is exact: windows of d+1 consecutive values are solved over the
rationals and two consecutive windows must agree before the coefficients are
accepted.  The collocation matrix on consecutive integers is unimodular, so
non-integral solutions can only come from an internal bug and abort loudly.
"""

from __future__ import annotations

from typing import NamedTuple

from .core import binomial
from .ideals import Ideal, ideal_power, ideal_sum, quotient_length
from .linalg import solve_fraction_free

__all__ = [
    "FitInstabilityError",
    "InconsistentDataError",
    "HilbertDataset",
    "CmResult",
    "hilbert_samuel",
    "fit_coefficients",
    "hilbert_polynomial_value",
    "cm_test",
    "chern_sign",
]


class FitInstabilityError(ValueError):
    """Raised when no two consecutive fitting windows agree."""


class InconsistentDataError(ValueError):
    """Raised when an exact fit produces non-integral coefficients."""


def hilbert_samuel(core: Ideal, parameters: Ideal, n: int) -> int:
    """Length of S/(core + parameters^n), the Hilbert-Samuel value H(n).

    Raises NotFiniteLengthError when the quotient is not zero-dimensional,
    which signals that the parameters do not cut the core down to a point.
    """
    if n < 1:
        raise ValueError("power must be at least 1")
    return quotient_length(ideal_sum(core, ideal_power(parameters, n)))


def hilbert_polynomial_value(coefficients, n: int) -> int:
    """Evaluate sum_i (-1)^i e_i C(n+d-1-i, d-i) for coefficients (e_0..e_d)."""
    d = len(coefficients) - 1
    total = 0
    for i, e in enumerate(coefficients):
        term = e * binomial(n + d - 1 - i, d - i)
        total += -term if i % 2 else term
    return total


def _solve_window(values, start, d):
    matrix = []
    rhs = []
    for n in range(start, start + d + 1):
        row = []
        for i in range(d + 1):
            c = binomial(n + d - 1 - i, d - i)
            row.append(-c if i % 2 else c)
        matrix.append(row)
        rhs.append(values[n])
    solution = solve_fraction_free(matrix, rhs)
    for x in solution:
        if x.denominator != 1:
            raise InconsistentDataError("inconsistent data - internal error")
    return tuple(int(x) for x in solution)


def fit_coefficients(values, d: int):
    """Fit (e_0, ..., e_d) to a contiguous window of (n, H(n)) values.

    Sliding windows of width d+1 are solved from the largest n downward; the
    fit is accepted at the first pair of consecutive windows with identical
    coefficient vectors whose polynomial also reproduces every recorded value
    above the window.  Returns (coefficients, n0) where n0 is the smallest n
    such that all recorded values from n0 upward match the polynomial.
    """
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    values = dict(values)
    ns = sorted(values)
    if not ns or ns != list(range(ns[0], ns[-1] + 1)):
        raise ValueError("values must cover a contiguous window of n")
    n_min, n_max = ns[0], ns[-1]
    if n_max - n_min + 1 < d + 2:
        raise FitInstabilityError("window too short - increase max_power")
    previous = None
    accepted = None
    for start in range(n_max - d, n_min - 1, -1):
        solution = _solve_window(values, start, d)
        if previous is not None and solution == previous:
            matches = all(values[n] == hilbert_polynomial_value(solution, n)
                          for n in range(start, n_max + 1))
            if matches:
                accepted = solution
                break
        previous = solution
    if accepted is None:
        raise FitInstabilityError("window too short - increase max_power")
    n0 = n_min
    for n in range(n_max, n_min - 1, -1):
        if values[n] != hilbert_polynomial_value(accepted, n):
            n0 = n + 1
            break
    return accepted, n0


class HilbertDataset:
    """A window of Hilbert-Samuel values together with the exact fit."""

    __slots__ = ("d", "values", "coefficients", "n0")

    def __init__(self, d: int, values, coefficients, n0: int):
        self.d = d
        self.values = dict(values)
        self.coefficients = tuple(coefficients)
        self.n0 = n0
        if self.coefficients and self.coefficients[0] < 1:
            raise InconsistentDataError(
                "leading Hilbert coefficient must be positive")

    @classmethod
    def fit(cls, values, d: int) -> "HilbertDataset":
        coefficients, n0 = fit_coefficients(values, d)
        return cls(d, values, coefficients, n0)

    def polynomial_value(self, n: int) -> int:
        return hilbert_polynomial_value(self.coefficients, n)

    def __repr__(self):
        return (f"HilbertDataset(d={self.d}, e={list(self.coefficients)}, "
                f"n0={self.n0})")


class CmResult(NamedTuple):
    is_cm: bool
    e0: int
    colength: int


def cm_test(e0: int, colength: int) -> CmResult:
    """Cohen-Macaulay verdict for a parameter ideal: e_0 = length(R/K)."""
    return CmResult(e0 == colength, e0, colength)


def chern_sign(e1: int) -> str:
    """Sign classification of the Chern number e_1."""
    if e1 < 0:
        return "negative"
    if e1 == 0:
        return "zero"
    return "positive"
