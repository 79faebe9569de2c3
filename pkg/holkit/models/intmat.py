"""
Exact 2x2 integer matrices and their reduction mod 2.

Entries are Python integers, so products of long Sanov words stay exact no
matter how many bits they need.
"""

from dataclasses import dataclass

from sympy import ImmutableMatrix

from holkit.models.word import SANOV, Word


@dataclass(frozen=True)
class Mod2Matrix:
    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        for entry in (self.p, self.q, self.r, self.s):
            if entry not in (0, 1):
                raise ValueError(f'mod-2 entries must be 0 or 1, got {entry}')

    def is_identity(self):
        return (self.p, self.q, self.r, self.s) == (1, 0, 0, 1)

    def __str__(self):
        return f'[[{self.p},{self.q}],[{self.r},{self.s}]]'


@dataclass(frozen=True)
class IntMatrix2:
    """The matrix [[p, q], [r, s]]."""

    p: int
    q: int
    r: int
    s: int

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows):
        (p, q), (r, s) = rows
        return cls(int(p), int(q), int(r), int(s))

    @classmethod
    def from_sympy(cls, matrix):
        if matrix.shape != (2, 2):
            raise ValueError(f'expected a 2x2 matrix, got shape {matrix.shape}')
        return cls.from_rows(matrix.tolist())

    def to_sympy(self):
        return ImmutableMatrix(self.rows())

    def rows(self):
        return [[self.p, self.q], [self.r, self.s]]

    def det(self):
        return self.p * self.s - self.q * self.r

    def mul(self, other):
        return IntMatrix2(
            self.p * other.p + self.q * other.r,
            self.p * other.q + self.q * other.s,
            self.r * other.p + self.s * other.r,
            self.r * other.q + self.s * other.s,
        )

    __matmul__ = mul

    def __neg__(self):
        return IntMatrix2(-self.p, -self.q, -self.r, -self.s)

    def inverse(self):
        """Inverse over the integers; only defined for determinant +1 or -1."""
        d = self.det()
        if d not in (1, -1):
            raise ValueError(f'matrix with determinant {d} is not invertible over Z')
        return IntMatrix2(d * self.s, -d * self.q, -d * self.r, d * self.p)

    def mod2(self):
        return Mod2Matrix(self.p % 2, self.q % 2, self.r % 2, self.s % 2)

    def is_identity(self):
        return self == IntMatrix2.identity()

    def max_abs(self):
        return max(abs(self.p), abs(self.q), abs(self.r), abs(self.s))

    def __str__(self):
        return f'[[{self.p},{self.q}],[{self.r},{self.s}]]'


A1 = IntMatrix2(1, 2, 0, 1)
A2 = IntMatrix2(1, 0, 2, 1)


@dataclass(frozen=True)
class SanovCertificate:
    """Witness that ``matrix == sign * eval_sanov(word)``."""

    word: Word
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f'sign must be +1 or -1, got {self.sign}')
        if self.word.alphabet != SANOV:
            raise ValueError('certificate words are over {A1, A2}')

    def __str__(self):
        return f"sign={'+1' if self.sign == 1 else '-1'} word={self.word}"


def mat_mul(m, n):
    return m.mul(n)


def mod2_reduce(m):
    return m.mod2()
