"""
Rewriting level-2 congruence matrices as words in A1 = [[1,2],[0,1]] and
A2 = [[1,0],[2,1]].

The rewrite peels the leftmost syllable off repeatedly. For a matrix of the
free group <A1, A2>, its first column (p, r) satisfies |p| > |r| exactly when
the word starts with a power of A1, and the exponent is the unique n with
|p - 2nr| < |r| (p is odd and r even, so there is no tie). Each step
strictly lowers max(|p|, |r|); the loop ends when r = 0, where the matrix is
+/- A1^n.
"""

import logging

from holkit.errors import NotCongruent, NotInSanov
from holkit.models.intmat import IntMatrix2, SanovCertificate
from holkit.models.word import SANOV, Word

logger = logging.getLogger(__name__)


def _syllable_matrix(index, n):
    if index == 1:
        return IntMatrix2(1, 2 * n, 0, 1)
    return IntMatrix2(1, 0, 2 * n, 1)


def eval_sanov(word: Word) -> IntMatrix2:
    """Left-to-right product of A1^{+-1}, A2^{+-1} along ``word``."""
    if word.alphabet != SANOV:
        raise ValueError(f'expected a word over {{A1,A2}}, got {{{word.alphabet}}}')
    result = IntMatrix2.identity()
    for index, exponent in word.syllables():
        result = result @ _syllable_matrix(index, exponent)
    return result


def _nearest_quotient(numerator, denominator):
    # round(numerator / denominator); callers guarantee no exact halves
    if denominator < 0:
        numerator, denominator = -numerator, -denominator
    return (2 * numerator + denominator) // (2 * denominator)


def sanov_rewrite(matrix: IntMatrix2) -> SanovCertificate:
    """
    Write ``matrix`` as sign * (word in A1, A2).

    Args:
        matrix: Integer matrix with determinant 1, congruent to I mod 2

    Returns:
        SanovCertificate: the unique reduced word and the sign

    Raises:
        NotCongruent: if det != 1 or the matrix is not I mod 2
        NotInSanov: if the reduction stops making progress
    """
    if matrix.det() != 1:
        raise NotCongruent(f'{matrix} has determinant {matrix.det()}, expected 1')
    if not matrix.mod2().is_identity():
        raise NotCongruent(f'{matrix} reduces to {matrix.mod2()} mod 2')

    p, q, r, s = matrix.p, matrix.q, matrix.r, matrix.s
    syllables = []
    while r != 0:
        size = max(abs(p), abs(r))
        if abs(p) > abs(r):
            n = _nearest_quotient(p, 2 * r)
            p, q = p - 2 * n * r, q - 2 * n * s
            syllables.append((1, n))
        else:
            n = _nearest_quotient(r, 2 * p)
            r, s = r - 2 * n * p, s - 2 * n * q
            syllables.append((2, n))
        logger.debug('peeled A%d^%d, remaining first column (%d, %d)', *syllables[-1], p, r)
        if max(abs(p), abs(r)) >= size:
            raise NotInSanov(f'reduction of {matrix} stalled at [[{p},{q}],[{r},{s}]]')

    # now p * s = 1, so the remainder is sign * A1^(q / 2 sign)
    sign = p
    syllables.append((1, (q * sign) // 2))

    letters = []
    for index, n in syllables:
        letters.extend([index if n > 0 else -index] * abs(n))
    return SanovCertificate(Word.reduce(letters, SANOV), sign)
