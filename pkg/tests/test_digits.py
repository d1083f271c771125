import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from abjadnum import (
    Alphabet,
    DigitScript,
    InvalidGlyph,
    UnsupportedBase,
    base_digit_set,
    digit_provenance,
    parse_digits,
    render_digits,
    transliterate,
)

W = DigitScript.WESTERN
M = DigitScript.MASHREKI_EASTERN
O = DigitScript.ORIGINAL_MAGHREBI


class TestRenderParse:
    def test_render_examples(self):
        assert render_digits(1810, W) == "1810"
        assert render_digits(1225, M) == "١٢٢٥"
        assert render_digits(45, O) == "54"  # proxy glyphs, 4/5 swapped

    def test_parse_examples(self):
        assert parse_digits("١٢٢٥", M) == 1225
        assert parse_digits("45", O) == 54
        assert parse_digits("1810", W) == 1810

    def test_zero(self):
        assert render_digits(0, W) == "0"
        assert render_digits(0, M) == "٠"
        assert parse_digits("٠", M) == 0

    def test_invalid_glyphs(self):
        with pytest.raises(InvalidGlyph):
            parse_digits("12a", W)
        with pytest.raises(InvalidGlyph):
            parse_digits("1٢", W)  # mixed scripts
        with pytest.raises(InvalidGlyph):
            parse_digits("12", M)

    def test_empty_text_is_a_usage_error(self):
        with pytest.raises(ValueError):
            parse_digits("", W)

    def test_negative_is_a_usage_error(self):
        with pytest.raises(ValueError):
            render_digits(-1, W)

    @pytest.mark.parametrize("script", list(DigitScript))
    def test_round_trip_exhaustive(self, script):
        for n in range(10000):
            assert parse_digits(render_digits(n, script), script) == n


@given(st.integers(min_value=0, max_value=10**6), st.sampled_from(list(DigitScript)))
def test_round_trip_sampled(n, script):
    assert parse_digits(render_digits(n, script), script) == n


class TestGlyphPermutation:
    def test_four_and_five_swap_shapes_only(self):
        assert render_digits(4, O) == render_digits(5, W)
        assert render_digits(5, O) == render_digits(4, W)
        for d in (0, 1, 2, 3, 6, 7, 8, 9):
            assert render_digits(d, O) == render_digits(d, W)

    def test_values_are_preserved_across_scripts(self):
        for d in range(10):
            assert parse_digits(render_digits(d, O), O) == d


class TestTransliterate:
    def test_examples(self):
        assert transliterate("1225", W, M) == "١٢٢٥"
        assert transliterate("45", O, W) == "54"
        assert transliterate("7", W, W) == "7"

    @pytest.mark.parametrize("script", list(DigitScript))
    def test_identity_on_same_script(self, script):
        for n in (0, 7, 45, 1225, 987654):
            text = render_digits(n, script)
            assert transliterate(text, script, script) == text

    @pytest.mark.parametrize("src,dst", list(itertools.product(list(DigitScript), repeat=2)))
    def test_round_trip(self, src, dst):
        for n in (0, 4, 5, 45, 54, 1810, 991225):
            text = render_digits(n, src)
            assert transliterate(transliterate(text, src, dst), dst, src) == text

    def test_value_preserving(self):
        for n in (0, 45, 1225):
            assert parse_digits(transliterate(render_digits(n, W), W, M), M) == n

    def test_separators_pass_through(self):
        assert transliterate("12.5-3/4, 6", W, M) == "١٢.٥-٣/٤, ٦"
        assert transliterate("١٢٢٥-٧٧", M, W) == "1225-77"

    def test_rejects_foreign_glyphs(self):
        with pytest.raises(InvalidGlyph):
            transliterate("12a", W, M)
        with pytest.raises(InvalidGlyph):
            transliterate("١٢", W, M)  # text is not in the from-script


class TestProvenance:
    def test_zero_comes_from_sad(self):
        entry = digit_provenance(0, W)
        assert entry.alphabet is Alphabet.ARABIC
        assert entry.letter.name == "Sad"
        assert entry.letter.codepoint == "ص"
        assert "first letter" in entry.note and "Sifr" in entry.note

    def test_nine_is_a_reversed_letter(self):
        entry = digit_provenance(9, W)
        assert entry.letter.name == "T'aa"
        assert entry.note == "reversed form"

    def test_mashreki_borrows_two_hebrew_letters(self):
        six = digit_provenance(6, M)
        assert six.alphabet is Alphabet.HEBREW
        assert six.letter.name == "Vav"
        zero = digit_provenance(0, M)
        assert zero.alphabet is Alphabet.HEBREW
        assert zero.letter.name == "Yodh"
        assert zero.letter.value == 10

    @pytest.mark.parametrize(
        "script,hebrew_count", [(W, 0), (O, 0), (M, 2)]
    )
    def test_hebrew_source_counts(self, script, hebrew_count):
        sources = [digit_provenance(d, script).alphabet for d in range(10)]
        assert sources.count(Alphabet.HEBREW) == hebrew_count

    @pytest.mark.parametrize("script", [W, O])
    def test_digits_1_to_9_follow_the_letter_order(self, script):
        # digit d descends from the d-th letter of the Arabic order (the
        # 4/5 swap touched the glyphs only), with one exception: the shape
        # of digit 2 was taken from Yaa, the tenth letter, not from Baa
        for d in range(1, 10):
            entry = digit_provenance(d, script)
            assert entry.alphabet is Alphabet.ARABIC
            assert entry.letter.order == (10 if d == 2 else d)

    def test_digit_two_note_carries_the_value_caveat(self):
        # the source letter of digit 2 counts 10 in the letter-value order
        for script in (W, O):
            entry = digit_provenance(2, script)
            assert entry.letter.name == "Yaa"
            assert "10" in entry.note and "not 2" in entry.note

    def test_rejects_out_of_range_digits(self):
        with pytest.raises(ValueError):
            digit_provenance(10, W)
        with pytest.raises(ValueError):
            digit_provenance(-1, M)


class TestBaseDigitSet:
    def test_base_sixteen(self):
        assert base_digit_set(16) == list("0123456789ABCDEF")

    def test_base_ten(self):
        assert base_digit_set(10) == list("0123456789")

    def test_base_two(self):
        assert base_digit_set(2) == ["0", "1"]

    def test_prefix_property(self):
        full = base_digit_set(16)
        for base in range(2, 17):
            assert base_digit_set(base) == full[:base]

    @pytest.mark.parametrize("base", [1, 0, -2, 17, 36])
    def test_unsupported_bases(self, base):
        with pytest.raises(UnsupportedBase):
            base_digit_set(base)
