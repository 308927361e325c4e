"""Named invariant suites backing the ``verify`` CLI command.

Each suite runs a batch of exhaustive or randomized checks and returns
(name, ok, detail) triples; randomized checks use a fixed seed so output is
reproducible.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from . import lyndon, numerics
from .decompose import decompose_mzv, decompose_word, unit_fraction_certificate, weight5_obstruction
from .trees import to_words
from .words import (
    Composition,
    Word,
    WordSum,
    admissible_words,
    composition_from_word,
    dual_word,
    shuffle,
    shuffle_sum,
    word_from_composition,
)

Check = tuple[str, bool, str]


def _all_words(length: int) -> list[Word]:
    return [Word("".join(bits)) for bits in itertools.product("01", repeat=length)]


def suite_codec() -> list[Check]:
    checks: list[Check] = []
    ok = True
    for weight in range(2, 11):
        for w in admissible_words(weight):
            c = composition_from_word(w)
            if word_from_composition(c) != w or c.weight != weight or c.depth != w.depth:
                ok = False
    checks.append(("codec round trip on all admissible words of weight <= 10", ok, ""))
    ok = all(
        dual_word(dual_word(w)) == w and w.depth + dual_word(w).depth == weight
        for weight in range(2, 11)
        for w in admissible_words(weight)
    )
    checks.append(("dual involution and depth law up to weight 10", ok, ""))
    examples = word_from_composition(Composition((1, 2, 2))) == Word("01011") and composition_from_word(
        Word("001")
    ) == Composition((3,))
    checks.append(("codec reference values", examples, ""))
    return checks


def suite_shuffle() -> list[Check]:
    checks: list[Check] = []
    ok = True
    for lu in range(0, 6):
        for lv in range(0, 6):
            for u in _all_words(lu):
                for v in _all_words(lv):
                    if shuffle(u, v).mass() != math.comb(lu + lv, lu):
                        ok = False
    checks.append(("coefficient mass binomial(|u|+|v|,|u|) for |u|,|v| <= 5", ok, ""))

    ok = True
    for wu in range(2, 7):
        for wv in range(2, 9 - wu):
            for u in admissible_words(wu):
                for v in admissible_words(wv):
                    s = shuffle(u, v)
                    if not all(t.is_admissible() for t in s.words()):
                        ok = False
    checks.append(("admissible closure of shuffle up to total weight 8", ok, ""))

    rng = random.Random(20250809)
    ok = True
    for _ in range(200):
        u, v, w = (Word("".join(rng.choice("01") for _ in range(rng.randint(0, 5)))) for _ in range(3))
        us, vs, ws = (WordSum.single(x) for x in (u, v, w))
        if shuffle(u, v) != shuffle(v, u):
            ok = False
        if shuffle_sum(shuffle_sum(us, vs), ws) != shuffle_sum(us, shuffle_sum(vs, ws)):
            ok = False
    checks.append(("commutativity and associativity on random triples", ok, ""))
    return checks


def suite_lyndon() -> list[Check]:
    checks: list[Check] = []
    ok = all(
        w.is_admissible()
        for length in range(2, 11)
        for w in _all_words(length)
        if lyndon.is_lyndon(w)
    )
    checks.append(("Lyndon words of length 2..10 start with 0 and end with 1", ok, ""))

    ok = all(
        w.bits.startswith("00") or w.bits.endswith("11")
        for length in range(3, 11)
        for w in _all_words(length)
        if lyndon.is_lyndon(w)
    )
    checks.append(("Lyndon words of length 3..10 start with 00 or end with 11", ok, ""))

    ok = all(
        all(f.weight >= 2 for f, _ in lyndon.chen_fox_lyndon(w).factors)
        for weight in range(2, 11)
        for w in admissible_words(weight)
    )
    checks.append(("factorizations of admissible words avoid the singletons 0 and 1", ok, ""))

    ok = True
    for length in range(1, 9):
        for w in _all_words(length):
            expansion = lyndon.radford_expand(lyndon.chen_fox_lyndon(w))
            items = expansion.items()
            if items[0][0] != w or items[0][1] != 1 or any(c <= 0 for _, c in items):
                ok = False
    checks.append(("Radford triangularity for all words of length <= 8", ok, ""))

    ok = all(
        lyndon.lyndon_basis_decompose(w).expand() == WordSum.single(w)
        for weight in range(2, 9)
        for w in admissible_words(weight)
    )
    checks.append(("basis decomposition reconstructs all admissible words of weight <= 8", ok, ""))
    return checks


def suite_pipeline() -> list[Check]:
    checks: list[Check] = []
    bad: list[str] = []
    count = 0
    for weight in range(2, 9):
        for w in admissible_words(weight):
            count += 1
            trees = decompose_word(w)
            if to_words(trees) != WordSum.single(w) or trees.weight() != weight:
                bad.append(w.bits)
    checks.append(
        (f"word expansion of decompose_word is the identity on all {count} admissible words of weight 2..8",
         not bad, ", ".join(bad[:5]))
    )
    return checks


def suite_weight5() -> list[Check]:
    checks: list[Check] = []
    try:
        report = weight5_obstruction(tol=1e-6)
    except ArithmeticError as exc:
        return [("weight-5 obstruction", False, str(exc))]
    checks.append(("weight-5 generator table recomputed", True, ""))
    ok = report.matrix_mod2 == ((0, 0), (1, 1), (0, 0), (1, 1)) and report.rank_mod2 == 1
    checks.append(("mod-2 matrix ((0,0),(1,1),(0,0),(1,1)) with rank 1", ok, ""))
    checks.append(
        (f"numeric basis change residual {report.max_numeric_residual:.2e} <= 1e-6",
         report.max_numeric_residual <= 1e-6, "")
    )
    return checks


def suite_certificates() -> list[Check]:
    checks: list[Check] = []
    for p in (2, 3, 5, 7, 11, 13):
        try:
            cert = unit_fraction_certificate(p)
            ok = cert.verify() and all(c.denominator == 1 for c, _ in cert.terms)
            detail = "" if ok else f"evaluates to {cert.evaluate()}"
        except (ValueError, ArithmeticError) as exc:
            ok, detail = False, str(exc)
        checks.append((f"integer certificate for 1/{p}", ok, detail))
    return checks


def suite_numeric() -> list[Check]:
    checks: list[Check] = []
    rng = random.Random(13580)
    worst = 0.0
    for _ in range(30):
        wu = rng.randint(2, 6)
        wv = rng.randint(2, 8 - wu)
        u = rng.choice(admissible_words(wu))
        v = rng.choice(admissible_words(wv))
        lhs = numerics.eval_word(u).value * numerics.eval_word(v).value
        rhs = numerics.eval_word_sum(shuffle(u, v)).value
        worst = max(worst, abs(lhs - rhs))
    checks.append((f"shuffle homomorphism on 30 random pairs, residual {worst:.2e} <= 1e-6", worst <= 1e-6, ""))

    worst = 0.0
    for weight in range(2, 7):
        for w in admissible_words(weight):
            lhs = numerics.eval_word(w).value
            rhs = (-1.0) ** weight * numerics.eval_word(dual_word(w)).value
            worst = max(worst, abs(lhs - rhs))
    checks.append((f"duality sign law up to weight 6, residual {worst:.2e} <= 1e-6", worst <= 1e-6, ""))

    ok = True
    for weight in range(2, 7):
        for w in admissible_words(weight):
            value = numerics.eval_word(w).value
            off = abs(value.imag) if weight % 2 == 0 else abs(value.real)
            if off > 1e-9:
                ok = False
    checks.append(("parity law: even weight real, odd weight imaginary", ok, ""))

    worst = 0.0
    for k in range(1, 5):
        # B_2k = -2 (2k)! zeta(2k) / (2 pi i)^(2k); the word value of
        # 0^(2k-1) 1 is the negative of that normalized zeta.
        b = float(numerics.bernoulli(2 * k))
        normalized = (-1.0) ** k * numerics.eval_mzv(Composition((2 * k,))) / (2 * math.pi) ** (2 * k)
        worst = max(worst, abs(-2 * math.factorial(2 * k) * normalized - b))
        word_value = numerics.eval_word(Word("0" * (2 * k - 1) + "1")).value
        worst = max(worst, abs(word_value - b / (2 * math.factorial(2 * k))))
    checks.append((f"Bernoulli cross-check k=1..4, residual {worst:.2e} <= 1e-8", worst <= 1e-8, ""))

    worst = 0.0
    for _ in range(20):
        weight = rng.randint(2, 6)
        word = rng.choice(admissible_words(weight))
        c = composition_from_word(word)
        direct = numerics.eval_word(word).value
        through = numerics.eval_word_sum(to_words(decompose_mzv(c).trees)).value
        worst = max(worst, abs(direct - through))
    checks.append(
        (f"decomposition route matches direct value on 20 random indices, residual {worst:.2e} <= 1e-8",
         worst <= 1e-8, "")
    )
    return checks


SUITES = {
    "codec": suite_codec,
    "shuffle": suite_shuffle,
    "lyndon": suite_lyndon,
    "pipeline": suite_pipeline,
    "weight5": suite_weight5,
    "certificates": suite_certificates,
    "numeric": suite_numeric,
}


def run_suite(name: str) -> list[Check]:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}") from None
    return suite()
