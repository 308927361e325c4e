"""Decomposition of MZVs into graph weights, and integer certificates.

``decompose_word`` writes any admissible word w as a Q-combination of trees
whose word expansion is exactly 1*w, so the matching graph combination has
the word's normalized value as its weight.  The algorithm first rewrites w
into shuffles of admissible Lyndon words, then shrinks each Lyndon factor:
01 is the rung; a factor starting 00 strips a 0 under a prepend; a factor
ending 11 strips a 1 under an append (every Lyndon word of length >= 3
starts 00 or ends 11, so this always applies).

``unit_fraction_certificate`` produces an integer combination of the wedge
graph and single-chain trees evaluating exactly to 1/p, driven by the Von
Staudt-Clausen theorem and B_2k = -2 (2k)! zeta(2k) / (2 pi i)^(2k).

``weight5_obstruction`` recomputes the eight weight-5 generators and the
mod-2 rank argument showing the weight-5 graphs miss some integer
combinations of MZVs.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import WEDGE_VALUE
from .lyndon import lyndon_basis_decompose
from .numerics import bernoulli, eval_mzv
from .trees import RUNG, Prepend, SyntaxTree, TreeSum, parse_tree, render, to_words, tree_key
from .words import Composition, Word, WordSum, ensure_admissible, word_from_composition


def decompose_word(w: Word) -> TreeSum:
    """Trees t with word expansion exactly 1*w; homogeneous of weight |w|."""
    ensure_admissible(w)
    return _decompose_bits(w.bits)


@functools.lru_cache(maxsize=None)
def _decompose_bits(bits: str) -> TreeSum:
    if bits == "01":
        return TreeSum.single(RUNG)
    total = TreeSum.zero()
    for multiset, coeff in lyndon_basis_decompose(Word(bits)).items():
        term = _lyndon_tree(multiset[0].bits)
        for factor in multiset[1:]:
            term = term * _lyndon_tree(factor.bits)
        total = total + coeff * term
    return total


@functools.lru_cache(maxsize=None)
def _lyndon_tree(bits: str) -> TreeSum:
    # Shrink one admissible Lyndon factor; ties prefer stripping the leading 0.
    if bits == "01":
        return TreeSum.single(RUNG)
    if bits.startswith("00"):
        return _decompose_bits(bits[1:]).prepended()
    if bits.endswith("11"):
        return _decompose_bits(bits[:-1]).appended()
    raise ValueError(f"not an admissible Lyndon word of length >= 3: {bits!r}")


@dataclass(frozen=True, slots=True)
class MzvDecomposition:
    """A tree combination together with the identity it certifies.

    The sum of coefficient * graph-weight over the trees equals
    sign * zeta(composition) / (2 pi i)^weight with sign = (-1)^depth.
    """

    composition: Composition
    word: Word
    trees: TreeSum

    @property
    def weight(self) -> int:
        return self.composition.weight

    @property
    def sign(self) -> int:
        return -1 if self.composition.depth % 2 else 1

    def identity_text(self) -> str:
        sign = "-" if self.sign < 0 else ""
        return (
            f"sum of coefficient * graph weight over the listed trees"
            f" = {sign}zeta({self.composition})/(2*pi*i)^{self.weight}"
        )


def decompose_mzv(c: Composition) -> MzvDecomposition:
    """Decompose the word of an MZV index, with its normalization report."""
    w = word_from_composition(c)
    return MzvDecomposition(composition=c, word=w, trees=decompose_word(w))


@dataclass(frozen=True, slots=True)
class WedgeGenerator:
    """The distinguished wedge-graph generator used by certificates."""

    def __str__(self) -> str:
        return "wedge"


WEDGE = WedgeGenerator()


def exact_tree_value(t: SyntaxTree) -> Fraction:
    """Exact weight of a tree whose word expansion only has single-1 even words.

    The value of 0^(2k-1) 1 is B_2k / (2 (2k)!); other words have no exact
    rational evaluation here and raise ValueError.
    """
    total = Fraction(0)
    for word, coeff in to_words(t).items():
        n = word.weight
        if word.depth != 1 or not word.bits.endswith("1") or n % 2:
            raise ValueError(f"no exact rational value for word {word}")
        total += coeff * bernoulli(n) / (2 * math.factorial(n))
    return total


def exact_generator_value(gen) -> Fraction:
    if isinstance(gen, WedgeGenerator):
        return WEDGE_VALUE
    if isinstance(gen, SyntaxTree):
        return exact_tree_value(gen)
    raise TypeError(f"not a certificate generator: {gen!r}")


@dataclass(frozen=True, slots=True)
class Certificate:
    """A machine-checkable combination of generators with a rational target.

    Kind "Z" requires integer coefficients and target 1/p for a prime p;
    kind "Q" allows arbitrary rational coefficients.
    """

    target: Fraction
    kind: str
    terms: tuple[tuple[Fraction, object], ...]

    def __post_init__(self):
        if self.kind not in ("Z", "Q"):
            raise ValueError(f"certificate kind must be Z or Q: {self.kind!r}")
        if any(not c for c, _ in self.terms):
            raise ValueError("zero coefficients may not be stored")
        if self.kind == "Z":
            if any(c.denominator != 1 for c, _ in self.terms):
                raise ValueError("Z certificates require integer coefficients")
            if self.target.numerator != 1 or not _is_prime(self.target.denominator):
                raise ValueError("Z certificates target 1/p for a prime p")

    def evaluate(self) -> Fraction:
        return sum((c * exact_generator_value(g) for c, g in self.terms), Fraction(0))

    def verify(self) -> bool:
        return self.evaluate() == self.target


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def _chain_tree(k: int) -> SyntaxTree:
    # p^(2k-2)(e): the tree whose single word is 0^(2k-1) 1, value B_2k / (2 (2k)!).
    t: SyntaxTree = RUNG
    for _ in range(2 * k - 2):
        t = Prepend(t)
    return t


def _vsc_primes(n: int) -> list[int]:
    # Primes q with (q - 1) | n, as in the Von Staudt-Clausen denominator.
    return [q for q in range(2, n + 2) if n % (q - 1) == 0 and _is_prime(q)]


def _add_term(acc: dict, gen, coeff: int):
    total = acc.get(gen, 0) + coeff
    if total:
        acc[gen] = total
    else:
        acc.pop(gen, None)


@functools.lru_cache(maxsize=None)
def _unit_fraction_terms(p: int) -> tuple[tuple[object, int], ...]:
    if p == 2:
        return ((WEDGE, -1),)
    # 1/p = m - B_(p-1) - sum over smaller primes q with (q-1) | (p-1) of 1/q,
    # where m = B_(p-1) + sum over all such q (including p) of 1/q is an integer.
    smaller = [q for q in _vsc_primes(p - 1) if q < p]
    m = bernoulli(p - 1) + sum((Fraction(1, q) for q in smaller), Fraction(1, p))
    if m.denominator != 1:
        raise ArithmeticError(f"Von Staudt-Clausen sum for {p} is not an integer: {m}")
    acc: dict = {}
    _add_term(acc, WEDGE, -2 * int(m))  # integer m realized as (-2m) wedges
    _add_term(acc, _chain_tree((p - 1) // 2), -2 * math.factorial(p - 1))
    for q in smaller:
        for gen, coeff in _unit_fraction_terms(q):
            _add_term(acc, gen, -coeff)
    return tuple(acc.items())


def _generator_order(gen):
    if isinstance(gen, WedgeGenerator):
        return (0,)
    return (1,) + tree_key(gen)


def unit_fraction_certificate(p: int) -> Certificate:
    """Integer certificate evaluating exactly to 1/p for a prime p."""
    if not _is_prime(p):
        raise ValueError(f"certificate target must be a prime: {p}")
    terms = tuple(
        (Fraction(coeff), gen)
        for gen, coeff in sorted(_unit_fraction_terms(p), key=lambda kv: _generator_order(kv[0]))
    )
    cert = Certificate(target=Fraction(1, p), kind="Z", terms=terms)
    if not cert.verify():
        raise ArithmeticError(f"certificate for 1/{p} fails its own check")
    return cert


def certificate_json(cert: Certificate) -> str:
    """Stable JSON rendering: {"target","kind","terms":[{"coeff","gen"}...]}."""
    import json

    terms = [
        {"coeff": str(c), "gen": str(g) if isinstance(g, WedgeGenerator) else render(g)}
        for c, g in cert.terms
    ]
    return json.dumps({"target": str(cert.target), "kind": cert.kind, "terms": terms}, separators=(",", ":"))


#: The eight weight-5 generator trees and their expected word expansions.
_WEIGHT5_TABLE: tuple[tuple[str, dict[str, int]], ...] = (
    ("p(p(p(e)))", {"00001": 1}),
    ("p(p(q(e)))", {"00011": 1}),
    ("p(e*e)", {"00101": 2, "00011": 4}),
    ("p(e)*e", {"01001": 1, "00101": 3, "00011": 6}),
    ("q(q(q(e)))", {"01111": 1}),
    ("p(q(q(e)))", {"00111": 1}),
    ("q(e*e)", {"01011": 2, "00111": 4}),
    ("q(e)*e", {"01101": 1, "01011": 3, "00111": 6}),
)

#: Five times the change of basis from the first four generators (zeta(5),
#: zeta(1,4), 2 zeta(2,3) + 4 zeta(1,4), zeta(3,2) + 3 zeta(2,3) + 6 zeta(1,4))
#: to the conjectural weight-5 basis (zeta(2,3), zeta(3,2)).
_WEIGHT5_MATRIX: tuple[tuple[int, int], ...] = ((4, 6), (-1, 1), (6, 4), (9, 11))


@dataclass(frozen=True, slots=True)
class Weight5Report:
    """Recomputed weight-5 generator table and the mod-2 rank obstruction."""

    table: tuple[tuple[SyntaxTree, WordSum], ...]
    matrix: tuple[tuple[int, int], ...]
    matrix_mod2: tuple[tuple[int, int], ...]
    rank_mod2: int
    max_numeric_residual: float


def _rank_mod2(rows: tuple[tuple[int, int], ...]) -> int:
    # Greedy xor basis over F_2, rows packed as 2-bit integers.
    basis: list[int] = []
    for a, b in rows:
        v = (a % 2) << 1 | (b % 2)
        for u in basis:
            v = min(v, v ^ u)
        if v:
            basis.append(v)
    return len(basis)


def weight5_obstruction(tol: float = 1e-6) -> Weight5Report:
    """Recompute the weight-5 table, its mod-2 matrix, and the basis check.

    The four independent generator values are expressed in the conjectural
    basis (zeta(2,3), zeta(3,2)) via the hard-coded integer matrix divided
    by 5, and that expression is verified numerically row by row.
    """
    table = []
    for expr, expected in _WEIGHT5_TABLE:
        tree = parse_tree(expr)
        expansion = to_words(tree)
        wanted = WordSum((Word(bits), Fraction(c)) for bits, c in expected.items())
        if expansion != wanted:
            raise ArithmeticError(f"weight-5 expansion of {expr} disagrees with the table")
        table.append((tree, expansion))

    z23 = eval_mzv(Composition((2, 3)))
    z32 = eval_mzv(Composition((3, 2)))
    z14 = eval_mzv(Composition((1, 4)))
    z5 = eval_mzv(Composition((5,)))
    row_values = (z5, z14, 2 * z23 + 4 * z14, z32 + 3 * z23 + 6 * z14)
    residual = max(
        abs(value - (a * z23 + b * z32) / 5.0)
        for value, (a, b) in zip(row_values, _WEIGHT5_MATRIX)
    )
    if residual > tol:
        raise ArithmeticError(f"weight-5 basis change fails numerically: residual {residual}")

    mod2 = tuple((a % 2, b % 2) for a, b in _WEIGHT5_MATRIX)
    return Weight5Report(
        table=tuple(table),
        matrix=_WEIGHT5_MATRIX,
        matrix_mod2=mod2,
        rank_mod2=_rank_mod2(_WEIGHT5_MATRIX),
        max_numeric_residual=residual,
    )
