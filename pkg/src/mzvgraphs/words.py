"""Binary words, the shuffle algebra over Q, and the MZV index codec.

A multiple zeta value zeta(n_1, ..., n_d) with n_d >= 2 is encoded by the
binary word 0^(n_d - 1) 1 0^(n_{d-1} - 1) 1 ... 0^(n_1 - 1) 1.  Words that
start with 0 and end with 1 are called *admissible*; they are exactly the
words arising this way.  Linear combinations of words form a commutative
ring under the shuffle product, with a module structure given by prepending
a 0 or appending a 1.  All coefficients are exact rationals.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Rational = Union[int, Fraction]

_ZERO = Fraction(0)


@dataclass(frozen=True, order=True, slots=True)
class Word:
    """An immutable binary string; comparison is lexicographic with 1 > 0."""

    bits: str

    def __post_init__(self):
        if self.bits.strip("01"):
            raise ValueError(f"word may contain only the bits 0 and 1: {self.bits!r}")

    @property
    def weight(self) -> int:
        return len(self.bits)

    @property
    def depth(self) -> int:
        """Number of 1 bits; the depth of the encoded MZV index."""
        return self.bits.count("1")

    def is_admissible(self) -> bool:
        return self.bits.startswith("0") and self.bits.endswith("1")

    def __str__(self) -> str:
        return self.bits


EMPTY_WORD = Word("")


def ensure_admissible(w: Word) -> Word:
    if not w.is_admissible():
        raise ValueError(f"word must start with 0 and end with 1: {w.bits!r}")
    return w


@dataclass(frozen=True, slots=True)
class Composition:
    """An MZV index (n_1, ..., n_d); convergence requires n_d >= 2."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("composition must have at least one part")
        if any(not isinstance(n, int) or n < 1 for n in self.parts):
            raise ValueError(f"composition parts must be positive integers: {self.parts}")
        if self.parts[-1] < 2:
            raise ValueError(f"divergent MZV index, last part must be >= 2: {self.parts}")

    @classmethod
    def from_text(cls, text: str) -> "Composition":
        """Parse a comma-separated index such as "1,2,2"."""
        try:
            parts = tuple(int(p) for p in text.split(","))
        except ValueError:
            raise ValueError(f"malformed composition {text!r}: expected comma-separated integers") from None
        return cls(parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return ",".join(str(n) for n in self.parts)


class WordSum:
    """A finite Q-linear combination of words.

    Zero coefficients are never stored, so equality of sums is equality of
    the underlying maps.  Instances are immutable; all arithmetic returns
    new sums.  Iteration and serialization order terms by word, greatest
    first in the lexicographic order.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, Rational] | Iterable[tuple[Word, Rational]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Fraction] = {}
        for word, coeff in items:
            c = acc.get(word, _ZERO) + coeff
            if c:
                acc[word] = c
            else:
                acc.pop(word, None)
        self._terms = acc

    @classmethod
    def single(cls, word: Word, coeff: Rational = 1) -> "WordSum":
        return cls(((word, Fraction(coeff)),))

    @classmethod
    def zero(cls) -> "WordSum":
        return cls()

    def items(self) -> list[tuple[Word, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)

    def words(self) -> list[Word]:
        return [w for w, _ in self.items()]

    def coefficient(self, word: Word) -> Fraction:
        return self._terms.get(word, _ZERO)

    def mass(self) -> Fraction:
        """Sum of all coefficients."""
        return sum(self._terms.values(), _ZERO)

    def is_homogeneous(self) -> bool:
        return len({w.weight for w in self._terms}) <= 1

    def weight(self) -> int:
        """Common weight of all terms; raises on inhomogeneous or zero sums."""
        weights = {w.weight for w in self._terms}
        if len(weights) != 1:
            raise ValueError("sum is empty or not homogeneous")
        return weights.pop()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(self.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WordSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "WordSum") -> "WordSum":
        if not isinstance(other, WordSum):
            return NotImplemented
        merged = dict(self._terms)
        for word, coeff in other._terms.items():
            c = merged.get(word, _ZERO) + coeff
            if c:
                merged[word] = c
            else:
                merged.pop(word, None)
        out = WordSum.zero()
        out._terms = merged
        return out

    def __neg__(self) -> "WordSum":
        out = WordSum.zero()
        out._terms = {w: -c for w, c in self._terms.items()}
        return out

    def __sub__(self, other: "WordSum") -> "WordSum":
        return self + (-other)

    def __rmul__(self, scalar: Rational) -> "WordSum":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if not scalar:
            return WordSum.zero()
        out = WordSum.zero()
        out._terms = {w: c * scalar for w, c in self._terms.items()}
        return out

    __mul__ = __rmul__

    def __repr__(self) -> str:
        if not self._terms:
            return "WordSum()"
        body = " + ".join(f"{c}*{w}" for w, c in self.items())
        return f"WordSum({body})"

    def render(self) -> str:
        """One term per line, "<rational> <word>", greatest word first."""
        return "\n".join(f"{c} {w}" for w, c in self.items())


def word_from_composition(c: Composition) -> Word:
    """Encode an MZV index as its binary word.

    The last part contributes the leading block: (1,2,2) -> 01011.
    """
    return Word("".join("0" * (n - 1) + "1" for n in reversed(c.parts)))


def composition_from_word(w: Word) -> Composition:
    """Decode an admissible word back into its MZV index."""
    ensure_admissible(w)
    blocks = []
    run = 0
    for bit in w.bits:
        if bit == "0":
            run += 1
        else:
            blocks.append(run + 1)
            run = 0
    return Composition(tuple(reversed(blocks)))


@functools.lru_cache(maxsize=None)
def _shuffle_bits(u: str, v: str) -> tuple[tuple[str, int], ...]:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    if u > v:  # commutative, so normalize the memo key
        u, v = v, u
    acc: dict[str, int] = {}
    for bits, mult in _shuffle_bits(u[1:], v):
        key = u[0] + bits
        acc[key] = acc.get(key, 0) + mult
    for bits, mult in _shuffle_bits(u, v[1:]):
        key = v[0] + bits
        acc[key] = acc.get(key, 0) + mult
    return tuple(sorted(acc.items()))

def shuffle(u: Word, v: Word) -> WordSum:
    """Shuffle product of two words: the multiset of all interleavings.

    Coefficients are positive integers summing to binomial(|u|+|v|, |u|);
    shuffles of admissible words are admissible.
    """
    return WordSum((Word(bits), Fraction(mult)) for bits, mult in _shuffle_bits(u.bits, v.bits))


def shuffle_sum(a: WordSum, b: WordSum) -> WordSum:
    """Bilinear extension of the shuffle product to word sums."""
    total = WordSum.zero()
    for u, cu in a.items():
        for v, cv in b.items():
            total = total + (cu * cv) * shuffle(u, v)
    return total


def prepend_word(s: WordSum) -> WordSum:
    """Prepend a 0 bit to every term; linear, weight +1 per term."""
    return WordSum((Word("0" + w.bits), c) for w, c in s.items())


def append_word(s: WordSum) -> WordSum:
    """Append a 1 bit to every term; linear, weight +1 per term."""
    return WordSum((Word(w.bits + "1"), c) for w, c in s.items())


def dual_word(w: Word) -> Word:
    """Reverse the word and complement every bit.

    An involution on admissible words realizing the classical MZV dualities,
    e.g. dual(00001) = 01111 encodes zeta(5) = zeta(1,1,1,2).
    """
    ensure_admissible(w)
    return Word("".join("1" if b == "0" else "0" for b in reversed(w.bits)))


def admissible_words(weight: int) -> list[Word]:
    """All 2^(weight-2) admissible words of the given weight, ascending."""
    if weight < 2:
        return []
    if weight == 2:
        return [Word("01")]
    middle = weight - 2
    return [Word("0" + format(m, f"0{middle}b") + "1") for m in range(2**middle)]
