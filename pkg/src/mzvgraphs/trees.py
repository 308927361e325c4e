"""Syntax trees for graph recipes and their expansion into binary words.

A tree is built from the generator ``e`` (one ladder rung, weight 2) by the
unary operations ``p`` (prepend a wedge) and ``q`` (append a wedge) and the
commutative, associative binary ``*`` (join), each adding weight 1, 1 and 0
respectively on top of the children.  Canonical form flattens nested joins
into a sorted multiset of children so that equal recipes compare equal.

``to_words`` expands a tree into the Q-combination of admissible binary
words that computes the weight of its graph: ``e`` maps to 01, ``p``/``q``
prepend a 0 / append a 1 bit, and join multiplies by the shuffle product.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .words import Rational, Word, WordSum, append_word, prepend_word, shuffle_sum

_ZERO = Fraction(0)


class SyntaxTree:
    """Base class of tree nodes; concrete nodes are frozen dataclasses."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Rung(SyntaxTree):
    """The generator ``e``: a single ladder rung of weight 2."""


@dataclass(frozen=True, slots=True)
class Prepend(SyntaxTree):
    """``p(t)``: prepend a wedge below the left external node."""

    child: SyntaxTree


@dataclass(frozen=True, slots=True)
class Append(SyntaxTree):
    """``q(t)``: append a wedge below the right external node."""

    child: SyntaxTree


@dataclass(frozen=True, slots=True)
class Join(SyntaxTree):
    """``t_1 * ... * t_k``: a flattened multiset of at least two children."""

    children: tuple[SyntaxTree, ...]


RUNG = Rung()


def tree_key(t: SyntaxTree):
    """Sort key realizing the total order Rung < Prepend < Append < Join."""
    if isinstance(t, Rung):
        return (0,)
    if isinstance(t, Prepend):
        return (1, tree_key(t.child))
    if isinstance(t, Append):
        return (2, tree_key(t.child))
    return (3, len(t.children)) + tuple(tree_key(c) for c in t.children)


def canonicalize(t: SyntaxTree) -> SyntaxTree:
    """Flatten joins and sort their children; idempotent."""
    if isinstance(t, Rung):
        return RUNG
    if isinstance(t, Prepend):
        return Prepend(canonicalize(t.child))
    if isinstance(t, Append):
        return Append(canonicalize(t.child))
    if isinstance(t, Join):
        if len(t.children) < 2:
            raise ValueError("join node needs at least two children")
        flat: list[SyntaxTree] = []
        for child in map(canonicalize, t.children):
            if isinstance(child, Join):
                flat.extend(child.children)
            else:
                flat.append(child)
        return Join(tuple(sorted(flat, key=tree_key)))
    raise TypeError(f"not a syntax tree: {t!r}")


def join_trees(a: SyntaxTree, b: SyntaxTree) -> SyntaxTree:
    """Canonical join of two canonical trees."""
    return canonicalize(Join((a, b)))


def tree_weight(t: SyntaxTree) -> int:
    """Grading: 2 per rung plus 1 per prepend/append node."""
    if isinstance(t, Rung):
        return 2
    if isinstance(t, (Prepend, Append)):
        return 1 + tree_weight(t.child)
    return sum(tree_weight(c) for c in t.children)


def render(t: SyntaxTree) -> str:
    """Minimal-parenthesis expression; reparses to the same canonical tree."""
    if isinstance(t, Rung):
        return "e"
    if isinstance(t, Prepend):
        return f"p({render(t.child)})"
    if isinstance(t, Append):
        return f"q({render(t.child)})"
    return "*".join(render(c) for c in t.children)


class TreeParseError(ValueError):
    """Syntax error in a tree expression, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def parse_tree(expr: str) -> SyntaxTree:
    """Parse ``t ::= e | p(t) | q(t) | t * t | (t)`` into a canonical tree.

    Whitespace is ignored; ``*`` is left-associative (and immaterial after
    canonicalization).
    """
    tokens: list[tuple[str, int]] = []
    for pos, ch in enumerate(expr):
        if ch.isspace():
            continue
        if ch in "epq()*":
            tokens.append((ch, pos))
        else:
            raise TreeParseError(f"unknown token {ch!r}", pos)
    end = len(expr)
    index = 0

    def peek() -> str | None:
        return tokens[index][0] if index < len(tokens) else None

    def position() -> int:
        return tokens[index][1] if index < len(tokens) else end

    def expect(token: str):
        nonlocal index
        if peek() != token:
            raise TreeParseError(f"expected {token!r}", position())
        index += 1

    def parse_term() -> SyntaxTree:
        nonlocal index
        tok = peek()
        if tok == "e":
            index += 1
            return RUNG
        if tok in ("p", "q"):
            index += 1
            expect("(")
            child = parse_expr()
            expect(")")
            return Prepend(child) if tok == "p" else Append(child)
        if tok == "(":
            index += 1
            inner = parse_expr()
            expect(")")
            return inner
        raise TreeParseError("expected 'e', 'p', 'q' or '('", position())

    def parse_expr() -> SyntaxTree:
        nonlocal index
        node = parse_term()
        while peek() == "*":
            index += 1
            node = Join((node, parse_term()))
        return node

    tree = parse_expr()
    if index < len(tokens):
        raise TreeParseError(f"unexpected token {peek()!r}", position())
    return canonicalize(tree)


class TreeSum:
    """A finite Q-linear combination of canonical trees.

    Carries the same ring/module operations as the trees themselves: join
    via ``*`` (bilinear), and linear ``prepended``/``appended`` wrappers.
    Serialization orders terms by tree, greatest first.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[SyntaxTree, Rational] | Iterable[tuple[SyntaxTree, Rational]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[SyntaxTree, Fraction] = {}
        for tree, coeff in items:
            tree = canonicalize(tree)
            c = acc.get(tree, _ZERO) + coeff
            if c:
                acc[tree] = c
            else:
                acc.pop(tree, None)
        self._terms = acc

    @classmethod
    def single(cls, tree: SyntaxTree, coeff: Rational = 1) -> "TreeSum":
        return cls(((tree, Fraction(coeff)),))

    @classmethod
    def zero(cls) -> "TreeSum":
        return cls()

    def items(self) -> list[tuple[SyntaxTree, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: tree_key(kv[0]), reverse=True)

    def trees(self) -> list[SyntaxTree]:
        return [t for t, _ in self.items()]

    def coefficient(self, tree: SyntaxTree) -> Fraction:
        return self._terms.get(canonicalize(tree), _ZERO)

    def is_homogeneous(self) -> bool:
        return len({tree_weight(t) for t in self._terms}) <= 1

    def weight(self) -> int:
        weights = {tree_weight(t) for t in self._terms}
        if len(weights) != 1:
            raise ValueError("sum is empty or not homogeneous")
        return weights.pop()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[SyntaxTree, Fraction]]:
        return iter(self.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TreeSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "TreeSum") -> "TreeSum":
        if not isinstance(other, TreeSum):
            return NotImplemented
        merged = dict(self._terms)
        for tree, coeff in other._terms.items():
            c = merged.get(tree, _ZERO) + coeff
            if c:
                merged[tree] = c
            else:
                merged.pop(tree, None)
        out = TreeSum.zero()
        out._terms = merged
        return out

    def __neg__(self) -> "TreeSum":
        out = TreeSum.zero()
        out._terms = {t: -c for t, c in self._terms.items()}
        return out

    def __sub__(self, other: "TreeSum") -> "TreeSum":
        return self + (-other)

    def __rmul__(self, scalar: Rational) -> "TreeSum":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if not scalar:
            return TreeSum.zero()
        out = TreeSum.zero()
        out._terms = {t: c * scalar for t, c in self._terms.items()}
        return out

    def __mul__(self, other: Union["TreeSum", Rational]) -> "TreeSum":
        if isinstance(other, (int, Fraction)):
            return self.__rmul__(other)
        if not isinstance(other, TreeSum):
            return NotImplemented
        total = TreeSum.zero()
        for t1, c1 in self._terms.items():
            for t2, c2 in other._terms.items():
                total = total + TreeSum.single(join_trees(t1, t2), c1 * c2)
        return total

    def prepended(self) -> "TreeSum":
        return TreeSum((Prepend(t), c) for t, c in self._terms.items())

    def appended(self) -> "TreeSum":
        return TreeSum((Append(t), c) for t, c in self._terms.items())

    def __repr__(self) -> str:
        if not self._terms:
            return "TreeSum()"
        body = " + ".join(f"{c}*{render(t)}" for t, c in self.items())
        return f"TreeSum({body})"

    def render(self) -> str:
        """One term per line, "<rational> <tree-expr>", greatest tree first."""
        return "\n".join(f"{c} {render(t)}" for t, c in self.items())


@functools.lru_cache(maxsize=None)
def _words_of_tree(t: SyntaxTree) -> WordSum:
    if isinstance(t, Rung):
        return WordSum.single(Word("01"))
    if isinstance(t, Prepend):
        return prepend_word(_words_of_tree(t.child))
    if isinstance(t, Append):
        return append_word(_words_of_tree(t.child))
    return functools.reduce(shuffle_sum, (_words_of_tree(c) for c in t.children))


def to_words(t: SyntaxTree | TreeSum) -> WordSum:
    """Expand a tree (or sum of trees) into its word combination.

    The result is homogeneous of the tree weight with every word admissible,
    and turns join into the shuffle product: to_words(a * b) equals
    to_words(a) shuffled with to_words(b).
    """
    if isinstance(t, SyntaxTree):
        return _words_of_tree(canonicalize(t))
    total = WordSum.zero()
    for tree, coeff in t.items():
        total = total + coeff * _words_of_tree(tree)
    return total
