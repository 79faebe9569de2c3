import pytest
from hypothesis import given

from holkit.errors import InvalidGenerator, ParseError, RankMismatch
from holkit.models import AB, TATB, Letter, Word
from holkit.models.word import cyclic_decompose, exponent_vector, inv, mul, reduce
from holkit.parsing import MAX_LETTERS, parse_word
from strategies import ab, words


class TestReduce:
    def test_adjacent_cancellation(self):
        assert reduce([1, 2, -2, 1], 2) == Word.reduce([1, 1], 2)
        assert str(reduce([1, 2, -2, 1], AB)) == 'a^2'

    def test_empty(self):
        assert reduce([], 2).is_identity()

    def test_full_cancellation(self):
        assert reduce([1, -1, 2, -2], AB).is_identity()

    def test_accepts_letters(self):
        assert reduce([Letter(1), Letter(2, -1)], AB) == ab('a -b')

    def test_index_out_of_range(self):
        with pytest.raises(InvalidGenerator):
            reduce([1, 3], 2)
        with pytest.raises(InvalidGenerator):
            reduce([0], 2)

    def test_constructor_rejects_unreduced_letters(self):
        with pytest.raises(ValueError):
            Word(AB, (1, -1))

    @given(words(max_size=20))
    def test_idempotent(self, w):
        assert Word.reduce(w.letters, AB) == w


class TestMul:
    def test_seam_cancellation(self):
        assert mul(ab('a b'), ab('-b a')) == ab('a a')

    def test_identity(self):
        w = ab('a b -a')
        assert mul(w, Word.identity(AB)) == w

    def test_no_cancellation(self):
        assert str(ab('a b') * ab('a b')) == 'a b a b'

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatch):
            ab('a') * Word.generator(TATB, 1)

    @given(words(), words(), words())
    def test_associative(self, u, v, w):
        assert (u * v) * w == u * (v * w)

    @given(words(), words())
    def test_agrees_with_reduction_of_concatenation(self, u, v):
        assert u * v == Word.reduce(u.letters + v.letters, AB)


class TestInverse:
    @pytest.mark.parametrize('text, expected', [
        ('a b', '-b -a'),
        ('', ''),
        ('-a', 'a'),
    ])
    def test_examples(self, text, expected):
        assert inv(ab(text)) == ab(expected)

    @given(words())
    def test_two_sided(self, w):
        assert (w * w.inverse()).is_identity()
        assert (w.inverse() * w).is_identity()

    def test_powers(self):
        assert ab('a b') ** 3 == ab('a b a b a b')
        assert ab('a b') ** -1 == ab('-b -a')
        assert (ab('a') ** 0).is_identity()


class TestCyclicDecompose:
    @pytest.mark.parametrize('text, u, c', [
        ('a b -a', 'a', 'b'),
        ('b a -b', 'b', 'a'),
        ('a b', '', 'a b'),
    ])
    def test_examples(self, text, u, c):
        assert cyclic_decompose(ab(text)) == (ab(u), ab(c))

    @given(words(max_size=20))
    def test_reconstructs(self, w):
        u, c = w.cyclic_decompose()
        assert c.is_cyclically_reduced()
        assert u * c * u.inverse() == w


class TestExponentVector:
    def test_examples(self):
        assert exponent_vector(ab('a b b')) == (1, 2)
        assert exponent_vector(Word.identity(AB)) == (0, 0)
        assert exponent_vector(ab('a b -a -b')) == (0, 0)

    @given(words(), words())
    def test_additive(self, u, v):
        total = tuple(x + y for x, y in zip(u.exponent_vector(), v.exponent_vector()))
        assert (u * v).exponent_vector() == total


class TestParseWord:
    def test_powers(self):
        assert parse_word('a b^2', AB) == ab('a b b')

    def test_t_alphabet(self):
        assert parse_word('ta^-1 tb', TATB) == Word(TATB, (-1, 2))

    def test_identity_token(self):
        assert parse_word('1', AB).is_identity()
        assert parse_word('', AB).is_identity()

    def test_reduces_input(self):
        assert parse_word('a b b^-1 a^-1', AB).is_identity()

    def test_unknown_name(self):
        with pytest.raises(InvalidGenerator):
            parse_word('a c', AB)

    def test_malformed_token_reports_position(self):
        with pytest.raises(ParseError) as info:
            parse_word('a b^x', AB)
        assert info.value.position == 2

    def test_huge_exponent(self):
        with pytest.raises(ParseError) as info:
            parse_word('b a^10000000000', AB)
        assert info.value.position == 2
        with pytest.raises(ParseError):
            parse_word('a^' + '9' * 5000, AB)

    def test_length_limit_counts_all_tokens(self):
        with pytest.raises(ParseError):
            parse_word(f'a^{MAX_LETTERS} b', AB)
        assert parse_word(f'a^{MAX_LETTERS // 2} a^-{MAX_LETTERS // 2}', AB).is_identity()

    @given(words(max_size=20))
    def test_reads_its_own_output(self, w):
        assert parse_word(str(w), AB) == w
