import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mzvgraphs import (
    Composition,
    Word,
    WordSum,
    admissible_words,
    append_word,
    composition_from_word,
    dual_word,
    prepend_word,
    shuffle,
    shuffle_sum,
    word_from_composition,
)
from oracles import all_words, shuffle_brute

words_st = st.text(alphabet="01", max_size=5).map(Word)


def ws(*pairs):
    return WordSum((Word(bits), Fraction(coeff)) for bits, coeff in pairs)


class TestCodec:
    @pytest.mark.parametrize(
        "parts,bits",
        [((2,), "01"), ((1, 2), "011"), ((1, 2, 2), "01011"), ((3,), "001"), ((1, 3), "0011")],
    )
    def test_reference_values(self, parts, bits):
        assert word_from_composition(Composition(parts)) == Word(bits)
        assert composition_from_word(Word(bits)) == Composition(parts)

    def test_rejects_divergent_index(self):
        with pytest.raises(ValueError):
            Composition((1,))
        with pytest.raises(ValueError):
            Composition((2, 1))
        with pytest.raises(ValueError):
            Composition((0, 2))

    def test_rejects_non_admissible_word(self):
        for bits in ("10", "0", "110", "010"):
            with pytest.raises(ValueError):
                composition_from_word(Word(bits))

    def test_round_trip_weight_up_to_10(self):
        for weight in range(2, 11):
            words = admissible_words(weight)
            assert len(words) == 2 ** (weight - 2)
            for w in words:
                c = composition_from_word(w)
                assert word_from_composition(c) == w
                assert c.weight == weight
                assert c.depth == w.depth

    def test_composition_text_round_trip(self):
        c = Composition.from_text("1,2,2")
        assert c == Composition((1, 2, 2))
        assert str(c) == "1,2,2"
        with pytest.raises(ValueError):
            Composition.from_text("1,x")

    def test_word_validation(self):
        with pytest.raises(ValueError):
            Word("012")


class TestShuffle:
    def test_paper_example(self):
        expected = ws(("000111", 9), ("001011", 5), ("001101", 2), ("010011", 2), ("010101", 1), ("011001", 1))
        assert shuffle(Word("011"), Word("001")) == expected

    def test_square_of_01(self):
        assert shuffle(Word("01"), Word("01")) == ws(("0101", 2), ("0011", 4))

    def test_empty_is_unit(self):
        assert shuffle(Word(""), Word("01")) == ws(("01", 1))
        assert shuffle(Word("01"), Word("")) == ws(("01", 1))

    def test_against_brute_force(self):
        for u in [w.bits for length in range(0, 5) for w in all_words(length)]:
            for v in ("", "1", "01", "011", "0011"):
                expected = WordSum((Word(b), Fraction(c)) for b, c in shuffle_brute(u, v).items())
                assert shuffle(Word(u), Word(v)) == expected

    def test_mass_law(self):
        for lu in range(0, 6):
            for lv in range(0, 6):
                for u in all_words(lu):
                    for v in all_words(lv):
                        assert shuffle(u, v).mass() == math.comb(lu + lv, lu)

    def test_homogeneous(self):
        s = shuffle(Word("011"), Word("001"))
        assert s.is_homogeneous()
        assert s.weight() == 6

    @settings(max_examples=150)
    @given(words_st, words_st)
    def test_commutative(self, u, v):
        assert shuffle(u, v) == shuffle(v, u)

    @settings(max_examples=80)
    @given(words_st, words_st, words_st)
    def test_associative(self, u, v, w):
        a = shuffle_sum(shuffle(u, v), WordSum.single(w))
        b = shuffle_sum(WordSum.single(u), shuffle(v, w))
        assert a == b

    def test_admissible_closure(self):
        for wu in range(2, 7):
            for wv in range(2, 9 - wu):
                for u in admissible_words(wu):
                    for v in admissible_words(wv):
                        assert all(t.is_admissible() for t in shuffle(u, v).words())


class TestShuffleSum:
    def test_matches_singleton_shuffle(self):
        assert shuffle_sum(ws(("01", 1)), ws(("01", 1))) == ws(("0101", 2), ("0011", 4))

    def test_zero_absorbs(self):
        assert shuffle_sum(WordSum.zero(), ws(("01", 3))) == WordSum.zero()

    def test_scaled(self):
        half = ws(("01", Fraction(1, 2)))
        assert shuffle_sum(half, ws(("01", 1))) == ws(("0101", 1), ("0011", 2))

    @settings(max_examples=60)
    @given(words_st, words_st, words_st)
    def test_bilinear(self, u, v, w):
        a = WordSum.single(u, 2) + WordSum.single(v, -3)
        b = WordSum.single(w, Fraction(1, 2))
        direct = shuffle_sum(a, b)
        expanded = Fraction(1) * shuffle(u, w) - Fraction(3, 2) * shuffle(v, w)
        assert direct == expanded


class TestModuleActions:
    def test_prepend_example(self):
        assert prepend_word(ws(("01", 1))) == ws(("001", 1))

    def test_append_example(self):
        assert append_word(ws(("01", 1))) == ws(("011", 1))

    def test_weight5_row(self):
        assert prepend_word(ws(("0101", 2), ("0011", 4))) == ws(("00101", 2), ("00011", 4))

    def test_linear_and_weight_increase(self):
        s = ws(("01", 2), ("0011", -1))
        for op, bit_at in ((prepend_word, "start"), (append_word, "end")):
            out = op(s)
            assert len(out) == len(s)
            for w, c in out.items():
                assert w.weight in {3, 5}
            assert out.mass() == s.mass()

    def test_admissibility_preserved(self):
        for weight in range(2, 8):
            for w in admissible_words(weight):
                assert prepend_word(WordSum.single(w)).words()[0].is_admissible()
                assert append_word(WordSum.single(w)).words()[0].is_admissible()


class TestDual:
    @pytest.mark.parametrize("bits,dual", [("00001", "01111"), ("011", "001"), ("01", "01")])
    def test_reference_values(self, bits, dual):
        assert dual_word(Word(bits)) == Word(dual)

    def test_involution_and_depth_law(self):
        for weight in range(2, 11):
            for w in admissible_words(weight):
                d = dual_word(w)
                assert d.is_admissible()
                assert d.weight == w.weight
                assert dual_word(d) == w
                assert w.depth + d.depth == w.weight

    def test_rejects_non_admissible(self):
        with pytest.raises(ValueError):
            dual_word(Word("10"))


class TestWordSum:
    def test_no_zero_coefficients(self):
        s = ws(("01", 1)) - ws(("01", 1))
        assert not s
        assert len(s) == 0
        assert s == WordSum.zero()

    def test_serialization_order_and_format(self):
        s = ws(("00011", 4), ("00101", 2))
        assert s.render() == "2 00101\n4 00011"
        assert [w.bits for w, _ in s.items()] == ["00101", "00011"]

    def test_rational_rendering(self):
        s = ws(("01", Fraction(1, 2)), ("0011", -2))
        assert s.render() == "1/2 01\n-2 0011"

    def test_coefficient_lookup(self):
        s = ws(("01", Fraction(2, 3)))
        assert s.coefficient(Word("01")) == Fraction(2, 3)
        assert s.coefficient(Word("0011")) == 0
