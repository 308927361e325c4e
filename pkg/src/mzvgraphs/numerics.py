"""Numeric evaluation of MZVs and normalized word values; exact Bernoulli.

This module is the independent cross-check for the exact algebra and never
feeds back into it.  The normalized value of an admissible word w of weight
n and depth d is (-1)^d zeta(n_1, ..., n_d) / (2 pi i)^n, real for even n
and purely imaginary for odd n.

Evaluation strategy: the value is the iterated integral of the forms
dx/(x - b) over the unit interval, with bit b per letter.  Splitting the
path at 1/2 (using path concatenation, the reversal identity and the
symmetry x -> 1 - x, which swaps the two forms) turns it into products of
multiple polylogarithms at argument 1/2, whose series converge
geometrically.  Truncating at 220 terms leaves the result accurate to
roundoff; the scheme is provably convergent, unlike truncation of the
defining nested series whose outer sum can decay as slowly as 1/k.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .words import Composition, Word, WordSum, ensure_admissible, word_from_composition

#: Guaranteed absolute error of the evaluation scheme, dominated by roundoff.
ERROR_FLOOR = 1e-12

_SERIES_TERMS = 220

_TWO_PI = 2.0 * math.pi

# i^(-n) for n mod 4, as (real, imag) factors.
_INV_I_POWER = ((1.0, 0.0), (0.0, -1.0), (-1.0, 0.0), (0.0, 1.0))


class ToleranceError(ValueError):
    """Requested tolerance is below what the evaluation scheme guarantees."""


@dataclass(frozen=True, slots=True)
class MzvValue:
    """A complex normalized value with an absolute error bound."""

    value: complex
    abs_error_bound: float


def default_tolerance(weight: int) -> float:
    """1e-8 through weight 6, 1e-6 beyond."""
    return 1e-8 if weight <= 6 else 1e-6


def _check_tolerance(tol: float, bound: float):
    if tol < ERROR_FLOOR:
        raise ToleranceError(f"tolerance {tol} below the supported floor {ERROR_FLOOR}")
    if tol < bound:
        raise ToleranceError(f"tolerance {tol} not achievable (scheme bound {bound})")


def _kahan_prefix_sums(terms):
    # Compensated running sums, one prefix value per term.
    total = 0.0
    comp = 0.0
    out = []
    for t in terms:
        y = t - comp
        s = total + y
        comp = (s - total) - y
        total = s
        out.append(total)
    return out


@functools.lru_cache(maxsize=None)
def _polylog_half(parts: tuple[int, ...]) -> float:
    """Li_{n_1,...,n_d}(1/2) = sum over 0<k_1<...<k_d of (1/2)^(k_d) / prod k_i^(n_i)."""
    prev = [1.0] * (_SERIES_TERMS + 1)
    depth = len(parts)
    for level, n in enumerate(parts):
        last = level == depth - 1
        terms = []
        for k in range(1, _SERIES_TERMS + 1):
            t = prev[k - 1] / float(k) ** n
            if last:
                t *= 0.5**k
            terms.append(t)
        prev = [0.0] + _kahan_prefix_sums(terms)
    return prev[_SERIES_TERMS]


def _blocks(bits: str) -> tuple[int, ...]:
    # Left-to-right runs 0^(a-1) 1 of a word ending in 1, reversed into index order.
    parts = []
    run = 0
    for b in bits:
        if b == "0":
            run += 1
        else:
            parts.append(run + 1)
            run = 0
    return tuple(reversed(parts))


def _half_integral(bits: str) -> float:
    # Iterated integral of the word's forms from 0 to 1/2; requires a final 1 bit.
    if not bits:
        return 1.0
    parts = _blocks(bits)
    return (-1.0) ** len(parts) * _polylog_half(parts)


def _reverse_complement(bits: str) -> str:
    return "".join("1" if b == "0" else "0" for b in reversed(bits))


@functools.lru_cache(maxsize=None)
def _unit_integral(bits: str) -> float:
    """Iterated integral of an admissible word's forms from 0 to 1.

    Equals (-1)^depth zeta(index); computed by splitting the path at 1/2.
    """
    n = len(bits)
    pieces = []
    for j in range(n + 1):
        prefix = _reverse_complement(bits[:j])
        suffix = bits[j:]
        pieces.append((-1.0) ** j * _half_integral(prefix) * _half_integral(suffix))
    return math.fsum(pieces)


def eval_mzv(c: Composition, tol: float | None = None) -> float:
    """zeta(n_1, ..., n_d) as a float, accurate to the requested tolerance."""
    if tol is None:
        tol = default_tolerance(c.weight)
    _check_tolerance(tol, ERROR_FLOOR)
    return (-1.0) ** c.depth * _unit_integral(word_from_composition(c).bits)


def eval_word(w: Word, tol: float | None = None) -> MzvValue:
    """Normalized value (-1)^d zeta(index) / (2 pi i)^n of an admissible word."""
    ensure_admissible(w)
    n = w.weight
    if tol is None:
        tol = default_tolerance(n)
    bound = ERROR_FLOOR / _TWO_PI**n
    _check_tolerance(tol, bound)
    z = _unit_integral(w.bits)
    re, im = _INV_I_POWER[n % 4]
    scale = _TWO_PI**n
    return MzvValue(value=complex(z * re / scale, z * im / scale), abs_error_bound=bound)


def eval_word_sum(s: WordSum, tol: float | None = None) -> MzvValue:
    """Coefficient-weighted sum of word values with accumulated error bound."""
    total = complex(0.0, 0.0)
    bound = 0.0
    for word, coeff in s.items():
        term = eval_word(word, tol)
        total += float(coeff) * term.value
        bound += abs(float(coeff)) * term.abs_error_bound
    return MzvValue(value=total, abs_error_bound=bound)


@functools.lru_cache(maxsize=None)
def _bernoulli_upto(n: int) -> tuple[Fraction, ...]:
    # B_0..B_n via sum_{j<=m} binom(m+1, j) B_j = 0, with B_1 = -1/2.
    table = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum((math.comb(m + 1, j) * table[j] for j in range(m)), Fraction(0))
        table.append(-acc / (m + 1))
    return tuple(table)


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n for even n >= 2 (convention B_1 = -1/2)."""
    if n < 2 or n % 2:
        raise ValueError(f"index must be an even integer >= 2: {n}")
    return _bernoulli_upto(n)[n]


def bernoulli_table(max_index: int) -> dict[int, Fraction]:
    """Map 2k -> B_2k for all even indices up to max_index."""
    table = _bernoulli_upto(max_index)
    return {m: table[m] for m in range(2, max_index + 1, 2)}
