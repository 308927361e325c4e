"""Lyndon words and the triangular shuffle-basis rewriting.

A Lyndon word is strictly smaller than every proper suffix.  By the
Chen-Fox-Lyndon theorem every word factors uniquely as a concatenation of
Lyndon words in decreasing order, and by Radford's theorem the Lyndon words
freely generate the shuffle algebra over Q: expanding the factorization
l_1^(k_1) ... l_m^(k_m) as (1/(k_1! ... k_m!)) l_1^(sh k_1) sh ... recovers
the word as its greatest term with coefficient one, plus lexicographically
smaller words.  Iterating that identity rewrites any admissible word as a
Q-combination of shuffle products of admissible Lyndon words.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .words import Word, WordSum, ensure_admissible, shuffle_sum

_ZERO = Fraction(0)


def is_lyndon(w: Word) -> bool:
    """True iff every proper split w = x.y has x < y lexicographically."""
    bits = w.bits
    if not bits:
        raise ValueError("the empty word is neither Lyndon nor not")
    return all(bits[:i] < bits[i:] for i in range(1, len(bits)))


@dataclass(frozen=True, slots=True)
class LyndonFactorization:
    """The Chen-Fox-Lyndon factorization l_1^(k_1) ... l_m^(k_m).

    Factors are (word, multiplicity) pairs with the words Lyndon and
    strictly decreasing; concatenation recovers the factored word.
    """

    factors: tuple[tuple[Word, int], ...]

    def __post_init__(self):
        words = [w for w, _ in self.factors]
        if any(k < 1 for _, k in self.factors):
            raise ValueError("factor multiplicities must be positive")
        if any(not is_lyndon(w) for w in words):
            raise ValueError("every factor must be a Lyndon word")
        if any(words[i] <= words[i + 1] for i in range(len(words) - 1)):
            raise ValueError("factors must be strictly decreasing")

    @property
    def word(self) -> Word:
        return Word("".join(w.bits * k for w, k in self.factors))

    def multiset(self) -> tuple[Word, ...]:
        """The factors with multiplicity, sorted descending."""
        return tuple(w for w, k in self.factors for _ in range(k))

    def __str__(self) -> str:
        return " ".join(f"({w})^{k}" for w, k in self.factors)


def chen_fox_lyndon(w: Word) -> LyndonFactorization:
    """Factor a word into decreasing Lyndon words (Duval's algorithm)."""
    s = w.bits
    if not s:
        raise ValueError("cannot factor the empty word")
    factors: list[str] = []
    i, n = 0, len(s)
    while i < n:
        j, k = i + 1, i
        while j < n and s[k] <= s[j]:
            k = i if s[k] < s[j] else k + 1
            j += 1
        while i <= k:
            factors.append(s[i : i + j - k])
            i += j - k
    grouped: list[tuple[Word, int]] = []
    for f in factors:
        if grouped and grouped[-1][0].bits == f:
            grouped[-1] = (grouped[-1][0], grouped[-1][1] + 1)
        else:
            grouped.append((Word(f), 1))
    return LyndonFactorization(tuple(grouped))


def radford_expand(fact: LyndonFactorization) -> WordSum:
    """Expand (1/(k_1! ... k_m!)) l_1^(sh k_1) sh ... sh l_m^(sh k_m).

    The greatest term is the factored word with coefficient exactly 1; all
    other terms are strictly smaller with positive coefficients.
    """
    result = WordSum.single(Word(""))
    denominator = 1
    for word, mult in fact.factors:
        denominator *= math.factorial(mult)
        for _ in range(mult):
            result = shuffle_sum(result, WordSum.single(word))
    return Fraction(1, denominator) * result


@dataclass(frozen=True, slots=True)
class LyndonBasisDecomposition:
    """A word written as sum of coefficient * (shuffle of a Lyndon multiset).

    Keys are multisets of admissible Lyndon words stored as descending
    tuples; expanding each multiset with the shuffle product and summing
    reproduces the decomposed word exactly.
    """

    terms: tuple[tuple[tuple[Word, ...], Fraction], ...]

    def __post_init__(self):
        for multiset, coeff in self.terms:
            if not coeff:
                raise ValueError("zero coefficients may not be stored")
            if not multiset:
                raise ValueError("empty factor multiset")
            if any(w.weight < 2 or not is_lyndon(w) for w in multiset):
                raise ValueError("factors must be Lyndon words of length >= 2")
            if any(multiset[i] < multiset[i + 1] for i in range(len(multiset) - 1)):
                raise ValueError("multisets must be sorted descending")

    def items(self) -> list[tuple[tuple[Word, ...], Fraction]]:
        return sorted(self.terms, key=lambda kv: kv[0], reverse=True)

    def expand(self) -> WordSum:
        """Multiply out every multiset; reproduces the decomposed word."""
        total = WordSum.zero()
        for multiset, coeff in self.terms:
            product = WordSum.single(Word(""))
            for factor in multiset:
                product = shuffle_sum(product, WordSum.single(factor))
            total = total + coeff * product
        return total

    def render(self) -> str:
        """One term per line, "<rational> [w1 ⧢ w2 ⧢ ...]"."""
        lines = []
        for multiset, coeff in self.items():
            body = " ⧢ ".join(w.bits for w in multiset)
            lines.append(f"{coeff} [{body}]")
        return "\n".join(lines)


def lyndon_basis_decompose(w: Word) -> LyndonBasisDecomposition:
    """Rewrite an admissible word as a Q-combination of Lyndon shuffles.

    Repeatedly eliminates the greatest outstanding word through its Radford
    expansion; terminates because the lexicographic order strictly drops
    within the fixed weight.
    """
    ensure_admissible(w)
    pending: dict[Word, Fraction] = {w: Fraction(1)}
    out: dict[tuple[Word, ...], Fraction] = {}
    while pending:
        u = max(pending)
        c = pending.pop(u)
        fact = chen_fox_lyndon(u)
        multinomial = Fraction(1, math.prod(math.factorial(k) for _, k in fact.factors))
        key = fact.multiset()
        total = out.get(key, _ZERO) + c * multinomial
        if total:
            out[key] = total
        else:
            out.pop(key, None)
        for word, coeff in radford_expand(fact).items():
            if word == u:
                continue
            remaining = pending.get(word, _ZERO) - c * coeff
            if remaining:
                pending[word] = remaining
            else:
                pending.pop(word, None)
    return LyndonBasisDecomposition(tuple(sorted(out.items(), key=lambda kv: kv[0], reverse=True)))
