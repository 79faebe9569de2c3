"""
Reduced words in finitely generated free groups.

A word stores its letters as signed 1-based generator indices (``2`` is the
second generator, ``-2`` its inverse), left to right as written, and is
always freely reduced. Every word carries the alphabet of its ambient free
group; binary operations refuse operands over different alphabets.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from holkit.errors import InvalidGenerator, RankMismatch


@dataclass(frozen=True)
class Alphabet:
    """Named basis of a free group; the rank is the number of names."""

    names: tuple

    def __post_init__(self):
        if not self.names:
            raise InvalidGenerator('an alphabet needs at least one generator')
        if len(set(self.names)) != len(self.names):
            raise InvalidGenerator(f'repeated generator name in {self.names}')

    @property
    def rank(self):
        return len(self.names)

    def index_of(self, name):
        try:
            return self.names.index(name) + 1
        except ValueError:
            raise InvalidGenerator(
                f"unknown generator '{name}' (alphabet: {', '.join(self.names)})"
            ) from None

    def name_of(self, index):
        return self.names[index - 1]

    def __str__(self):
        return ','.join(self.names)


def generic_alphabet(n):
    """The alphabet ``g1..gn``."""
    return Alphabet(tuple(f'g{i}' for i in range(1, n + 1)))


def embedding_alphabet(m):
    """The alphabet ``a, b, z1..zm`` used by the Aut(F_{2+m}) embedding."""
    return Alphabet(('a', 'b') + tuple(f'z{i}' for i in range(1, m + 1)))


AB = Alphabet(('a', 'b'))
TATB = Alphabet(('ta', 'tb'))
X12 = Alphabet(('x1', 'x2'))
SANOV = Alphabet(('A1', 'A2'))


class Letter(NamedTuple):
    """One generator or its inverse."""

    generator: int
    sign: int = 1

    @property
    def value(self):
        return self.sign * self.generator


def _as_signed(letter):
    if isinstance(letter, Letter):
        if letter.sign not in (1, -1):
            raise ValueError(f'letter sign must be +1 or -1, got {letter.sign}')
        return letter.value
    return int(letter)


def _free_reduce(letters: Iterable[int]) -> tuple:
    stack = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    alphabet: Alphabet
    letters: tuple = ()

    def __post_init__(self):
        rank = self.alphabet.rank
        previous = 0
        for letter in self.letters:
            if letter == 0 or abs(letter) > rank:
                raise InvalidGenerator(f'generator index {letter} outside rank {rank}')
            if letter == -previous:
                raise ValueError('Word letters must be freely reduced; use Word.reduce')
            previous = letter

    @classmethod
    def _trusted(cls, alphabet, letters):
        # letters already reduced and in range
        word = object.__new__(cls)
        object.__setattr__(word, 'alphabet', alphabet)
        object.__setattr__(word, 'letters', letters)
        return word

    # ==================== Constructors ====================

    @classmethod
    def reduce(cls, raw: Sequence, alphabet) -> 'Word':
        """
        Freely reduce a raw letter sequence.

        Args:
            raw: Letters, either ``Letter`` tuples or signed indices
            alphabet: Ambient alphabet, or an integer rank (generic names)

        Returns:
            Word: the unique reduced word freely equal to ``raw``

        Raises:
            InvalidGenerator: if a letter index is outside the rank
        """
        if isinstance(alphabet, int):
            alphabet = generic_alphabet(alphabet)
        rank = alphabet.rank
        signed = [_as_signed(letter) for letter in raw]
        for letter in signed:
            if letter == 0 or abs(letter) > rank:
                raise InvalidGenerator(f'generator index {letter} outside rank {rank}')
        return cls._trusted(alphabet, _free_reduce(signed))

    @classmethod
    def identity(cls, alphabet):
        return cls._trusted(alphabet, ())

    @classmethod
    def generator(cls, alphabet, index, power=1):
        if not 1 <= index <= alphabet.rank:
            raise InvalidGenerator(f'generator index {index} outside rank {alphabet.rank}')
        sign = 1 if power > 0 else -1
        return cls._trusted(alphabet, (sign * index,) * abs(power))

    @classmethod
    def from_names(cls, alphabet, *names):
        """``Word.from_names(AB, 'a', 'b', 'b')`` -> a b^2; a leading ``-`` inverts."""
        raw = []
        for name in names:
            if name.startswith('-'):
                raw.append(-alphabet.index_of(name[1:]))
            else:
                raw.append(alphabet.index_of(name))
        return cls.reduce(raw, alphabet)

    # ==================== Group operations ====================

    @property
    def rank(self):
        return self.alphabet.rank

    def _check_compatible(self, other):
        if self.alphabet.rank != other.alphabet.rank:
            raise RankMismatch(f'rank {self.alphabet.rank} vs rank {other.alphabet.rank}')
        if self.alphabet != other.alphabet:
            raise RankMismatch(f'basis {{{self.alphabet}}} vs basis {{{other.alphabet}}}')

    def mul(self, other: 'Word') -> 'Word':
        self._check_compatible(other)
        left, right = self.letters, other.letters
        i, j, limit = len(left), 0, min(len(left), len(right))
        while j < limit and left[i - 1] == -right[j]:
            i -= 1
            j += 1
        return Word._trusted(self.alphabet, left[:i] + right[j:])

    __mul__ = mul

    def inverse(self) -> 'Word':
        return Word._trusted(self.alphabet, tuple(-letter for letter in reversed(self.letters)))

    __invert__ = inverse

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** -n
        result = Word.identity(self.alphabet)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate_by(self, other: 'Word') -> 'Word':
        """other * self * other^-1"""
        return other * self * other.inverse()

    # ==================== Structure ====================

    def is_identity(self):
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        for letter in self.letters:
            yield Letter(abs(letter), 1 if letter > 0 else -1)

    def syllables(self):
        """Maximal powers of one generator, as ``(index, exponent)`` pairs."""
        result = []
        for letter in self.letters:
            index, sign = abs(letter), (1 if letter > 0 else -1)
            if result and result[-1][0] == index:
                result[-1] = (index, result[-1][1] + sign)
            else:
                result.append((index, sign))
        return result

    def cyclic_decompose(self):
        """
        Split the word as ``u * c * u^-1`` with ``c`` cyclically reduced.

        Returns:
            tuple: ``(u, c)`` with ``u`` the longest possible prefix
        """
        letters = self.letters
        n = len(letters)
        k = 0
        while 2 * k + 1 < n and letters[k] == -letters[n - 1 - k]:
            k += 1
        return (Word._trusted(self.alphabet, letters[:k]),
                Word._trusted(self.alphabet, letters[k:n - k]))

    def is_cyclically_reduced(self):
        return len(self.letters) < 2 or self.letters[0] != -self.letters[-1]

    def exponent_vector(self):
        counts = [0] * self.alphabet.rank
        for letter in self.letters:
            counts[abs(letter) - 1] += 1 if letter > 0 else -1
        return tuple(counts)

    def leading_power(self, index):
        """Exponent of the leading syllable if it is a power of generator ``index``, else 0."""
        syllables = self.syllables()
        if syllables and syllables[0][0] == index:
            return syllables[0][1]
        return 0

    def relabel(self, alphabet, mapping=None):
        """
        Read the same letters over another alphabet of equal rank.

        Args:
            alphabet: Target alphabet
            mapping: Optional dict old index -> new index (a permutation)
        """
        if alphabet.rank != self.alphabet.rank:
            raise RankMismatch(f'cannot relabel rank {self.alphabet.rank} word over rank {alphabet.rank}')
        if mapping is None:
            return Word._trusted(alphabet, self.letters)
        relabelled = tuple(
            mapping[abs(letter)] * (1 if letter > 0 else -1) for letter in self.letters
        )
        return Word._trusted(alphabet, relabelled)

    # ==================== Text ====================

    def __str__(self):
        if not self.letters:
            return '1'
        parts = []
        for index, exponent in self.syllables():
            name = self.alphabet.name_of(index)
            parts.append(name if exponent == 1 else f'{name}^{exponent}')
        return ' '.join(parts)

    def __repr__(self):
        return f'<Word {self} over {{{self.alphabet}}}>'


def reduce(raw, rank):
    """Free reduction of ``raw`` in the free group of the given rank or alphabet."""
    return Word.reduce(raw, rank)


def mul(u, v):
    return u.mul(v)


def inv(w):
    return w.inverse()


def cyclic_decompose(w):
    return w.cyclic_decompose()


def exponent_vector(w):
    return w.exponent_vector()
