import random
from fractions import Fraction

import pytest

from braidtwist import BraidWord
from braidtwist.fdtc import fdtc_exact
from braidtwist.quasipositive import (
    Syllable,
    SyllableWord,
    check_qp_bt_bound,
    expand,
    format_syllables,
    parse_syllables,
    qp_report,
)


def random_syllable_word(rng, n, m, max_conj=4):
    gens = [g for g in range(-(n - 1), n) if g]
    syllables = []
    for _ in range(m):
        conj = tuple(rng.choice(gens) for _ in range(rng.randint(0, max_conj)))
        syllables.append(Syllable(conj, rng.randint(1, n - 1), 1))
    return SyllableWord(n, tuple(syllables))


class TestExpand:
    def test_trivial_conjugator(self):
        s = SyllableWord(3, (Syllable((), 1, 1),))
        assert expand(s).letters == (1,)

    def test_conjugated_generator(self):
        s = SyllableWord(3, (Syllable((1,), 2, 1),))
        assert expand(s).letters == (1, 2, -1)

    def test_adjacent_syllables_reduce_freely(self):
        s = SyllableWord(3, (Syllable((), 1, 1), Syllable((1,), 2, 1)))
        assert expand(s).letters == (1, 1, 2, -1)

    def test_negative_syllable(self):
        s = SyllableWord(3, (Syllable((2,), 1, -1),))
        assert expand(s).letters == (2, -1, -2)


class TestValidation:
    def test_generator_out_of_range(self):
        with pytest.raises(ValueError):
            SyllableWord(3, (Syllable((), 3, 1),))

    def test_conjugator_letter_out_of_range(self):
        with pytest.raises(ValueError):
            SyllableWord(3, (Syllable((3,), 1, 1),))

    def test_bad_sign(self):
        with pytest.raises(ValueError):
            SyllableWord(3, (Syllable((), 1, 2),))


class TestQpReport:
    def test_two_positive_bands(self):
        s = SyllableWord(3, (Syllable((), 1, 1), Syllable((), 2, 1)))
        r = qp_report(s)
        assert r.qp_length == 2
        assert r.chi4 == 1
        assert r.g4 == 0
        assert r.bt_upper == 1
        assert r.all_positive
        assert r.closure_is_knot

    def test_single_band_pins_twist_to_zero(self):
        s = SyllableWord(3, (Syllable((2,), 1, 1),))
        r = qp_report(s)
        assert r.bt_upper == 0
        assert fdtc_exact(expand(s)).value == 0

    def test_mixed_sign_bounds(self):
        s = SyllableWord(
            3,
            (
                Syllable((), 1, 1),
                Syllable((1,), 2, 1),
                Syllable((), 2, -1),
            ),
        )
        r = qp_report(s)
        assert r.syllable_sign_bounds == (Fraction(0), Fraction(1))
        assert r.sign_bounds_conditional
        assert not r.all_positive
        assert r.chi4 is None and r.g4 is None and r.bt_upper is None

    def test_non_knot_closure_reported(self):
        s = SyllableWord(3, (Syllable((), 1, 1), Syllable((), 1, 1)))
        assert not qp_report(s).closure_is_knot


class TestCheckBound:
    def test_single_band(self):
        s = SyllableWord(3, (Syllable((2, 1), 2, 1),))
        assert check_qp_bt_bound(s)
        assert fdtc_exact(expand(s)).value == 0

    def test_positive_word_as_bands(self):
        letters = [1, 2, 1, 2]
        s = SyllableWord(3, tuple(Syllable((), g, 1) for g in letters))
        assert check_qp_bt_bound(s)

    def test_random_words_satisfy_bound(self):
        rng = random.Random(41)
        for _ in range(12):
            n = rng.choice((3, 4))
            s = random_syllable_word(rng, n, rng.randint(1, 4))
            assert check_qp_bt_bound(s)

    def test_needs_three_strands(self):
        s = SyllableWord(2, (Syllable((), 1, 1),))
        with pytest.raises(ValueError):
            check_qp_bt_bound(s)

    def test_needs_positive_bands(self):
        s = SyllableWord(3, (Syllable((), 1, -1),))
        with pytest.raises(ValueError):
            check_qp_bt_bound(s)


class TestTextForm:
    def test_parse(self):
        s = parse_syllables("2 | 1 | +; | 2 | +", 3)
        assert s.syllables == (Syllable((2,), 1, 1), Syllable((), 2, 1))

    def test_parse_negative(self):
        s = parse_syllables("1 -2 | 1 | -", 3)
        assert s.syllables == (Syllable((1, -2), 1, -1),)

    def test_round_trip(self):
        rng = random.Random(43)
        for _ in range(10):
            s = random_syllable_word(rng, 4, 3)
            assert parse_syllables(format_syllables(s), 4) == s

    def test_malformed_field_count(self):
        with pytest.raises(ValueError):
            parse_syllables("1 | 2", 3)

    def test_bad_sign_token(self):
        with pytest.raises(ValueError):
            parse_syllables(" | 1 | x", 3)
