import pytest
from hypothesis import given

from holkit.errors import NotCongruent
from holkit.models import A1, A2, SANOV, IntMatrix2, Word
from holkit.models.intmat import Mod2Matrix, mat_mul, mod2_reduce
from holkit.parsing import parse_matrix
from holkit.utils.sanov import eval_sanov, sanov_rewrite
from strategies import sanov_words


def sanov(*names):
    return Word.from_names(SANOV, *names)


class TestArithmetic:
    def test_products(self):
        assert mat_mul(A1, A2) == IntMatrix2(5, 2, 2, 1)
        assert mat_mul(A1, A1) == IntMatrix2(1, 4, 0, 1)
        m = IntMatrix2(3, 2, 4, 3)
        assert IntMatrix2.identity() @ m == m

    def test_mod2(self):
        assert mod2_reduce(A1).is_identity()
        assert mod2_reduce(IntMatrix2(1, 1, 0, 1)) == Mod2Matrix(1, 1, 0, 1)
        assert mod2_reduce(IntMatrix2(3, 2, 4, 5)).is_identity()

    def test_mod2_of_negative_entries(self):
        assert mod2_reduce(IntMatrix2(-1, -2, 0, -1)).is_identity()

    def test_inverse(self):
        m = IntMatrix2(5, 2, 2, 1)
        assert m @ m.inverse() == IntMatrix2.identity()
        with pytest.raises(ValueError):
            IntMatrix2(2, 0, 0, 1).inverse()

    def test_sympy_agrees(self):
        m = IntMatrix2(5, 2, 2, 1) @ IntMatrix2(1, 0, -6, 1)
        assert m.to_sympy().det() == m.det()
        assert IntMatrix2.from_sympy(m.to_sympy()) == m
        assert IntMatrix2.from_sympy(A1.to_sympy() * A2.to_sympy()) == A1 @ A2

    def test_unbounded_entries(self):
        m = eval_sanov(sanov(*(['A1', 'A2'] * 40)))
        assert m.det() == 1
        assert m.max_abs() > 2 ** 64

    def test_parse(self):
        assert parse_matrix('[[5, 2], [2, 1]]') == IntMatrix2(5, 2, 2, 1)
        assert str(IntMatrix2(1, -2, 0, 1)) == '[[1,-2],[0,1]]'


class TestEvalSanov:
    def test_examples(self):
        assert eval_sanov(sanov('A1', 'A2')) == IntMatrix2(5, 2, 2, 1)
        assert eval_sanov(Word.identity(SANOV)) == IntMatrix2.identity()
        assert eval_sanov(sanov('-A1')) == IntMatrix2(1, -2, 0, 1)

    @given(sanov_words(), sanov_words())
    def test_homomorphism(self, u, v):
        assert eval_sanov(u * v) == eval_sanov(u) @ eval_sanov(v)


class TestSanovRewrite:
    def test_product(self):
        certificate = sanov_rewrite(IntMatrix2(5, 2, 2, 1))
        assert certificate.word == sanov('A1', 'A2')
        assert certificate.sign == 1
        assert str(certificate) == 'sign=+1 word=A1 A2'

    def test_identity(self):
        certificate = sanov_rewrite(IntMatrix2.identity())
        assert certificate.word.is_identity() and certificate.sign == 1

    def test_minus_identity(self):
        certificate = sanov_rewrite(-IntMatrix2.identity())
        assert certificate.word.is_identity() and certificate.sign == -1

    def test_negative_exponents(self):
        assert sanov_rewrite(IntMatrix2(1, 0, -2, 1)).word == sanov('-A2')
        assert sanov_rewrite(IntMatrix2(1, -4, 0, 1)).word == sanov('-A1', '-A1')

    @pytest.mark.parametrize('matrix', [
        IntMatrix2(1, 1, 0, 1),
        IntMatrix2(2, 1, 1, 1),
        IntMatrix2(0, 1, -1, 0),
        IntMatrix2(1, 0, 0, -1),
        IntMatrix2(3, 0, 0, 3),
    ])
    def test_not_congruent(self, matrix):
        with pytest.raises(NotCongruent):
            sanov_rewrite(matrix)

    @given(sanov_words(max_size=24))
    def test_roundtrip(self, word):
        matrix = eval_sanov(word)
        assert (sanov_rewrite(matrix).word, sanov_rewrite(matrix).sign) == (word, 1)
        assert (sanov_rewrite(-matrix).word, sanov_rewrite(-matrix).sign) == (word, -1)
