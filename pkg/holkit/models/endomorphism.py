"""
Endomorphisms and automorphisms of free groups given by generator images.

Composition applies the right-hand map first: ``phi.compose(psi)`` sends
``g`` to ``phi(psi(g))``. Abelianization places the exponent vector of the
image of generator ``j`` in column ``j``, which makes it a homomorphism for
that composition order. Under this convention x1 abelianizes to
A2 = [[1,0],[2,1]] and x2 to A1 = [[1,2],[0,1]].
"""

from dataclasses import dataclass
from typing import Sequence

from sympy import ImmutableMatrix

from holkit.errors import (GeneratorIndexError, InvalidChi, NotInverse,
                           RankMismatch)
from holkit.models.intmat import IntMatrix2
from holkit.models.word import AB, Alphabet, Word, _free_reduce, generic_alphabet


@dataclass(frozen=True)
class Endomorphism:
    alphabet: Alphabet
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.alphabet.rank:
            raise RankMismatch(
                f'{len(self.images)} images given for rank {self.alphabet.rank}'
            )
        for image in self.images:
            if image.alphabet != self.alphabet:
                raise RankMismatch(
                    f'image {image} is over {{{image.alphabet}}}, expected {{{self.alphabet}}}'
                )

    @classmethod
    def identity(cls, alphabet):
        return cls(alphabet, tuple(Word.generator(alphabet, i) for i in range(1, alphabet.rank + 1)))

    @property
    def rank(self):
        return self.alphabet.rank

    def apply(self, word: Word) -> Word:
        if word.alphabet != self.alphabet:
            raise RankMismatch(
                f'cannot apply a map of {{{self.alphabet}}} to a word over {{{word.alphabet}}}'
            )
        forward = [image.letters for image in self.images]
        backward = [image.inverse().letters for image in self.images]
        raw = []
        for letter in word.letters:
            raw.extend(forward[letter - 1] if letter > 0 else backward[-letter - 1])
        return Word._trusted(self.alphabet, _free_reduce(raw))

    __call__ = apply

    def compose(self, other: 'Endomorphism') -> 'Endomorphism':
        """``self o other``: apply ``other`` first."""
        if other.alphabet != self.alphabet:
            raise RankMismatch(f'cannot compose maps of {{{self.alphabet}}} and {{{other.alphabet}}}')
        return Endomorphism(self.alphabet, tuple(self.apply(image) for image in other.images))

    def is_identity(self):
        return self == Endomorphism.identity(self.alphabet)

    def abelian_matrix(self):
        """Integer matrix with column j the exponent vector of image j."""
        columns = [image.exponent_vector() for image in self.images]
        n = self.rank
        return ImmutableMatrix(n, n, lambda i, j: columns[j][i])

    def abelianize(self):
        """``IntMatrix2`` for rank 2, a sympy integer matrix otherwise."""
        matrix = self.abelian_matrix()
        if self.rank == 2:
            return IntMatrix2.from_sympy(matrix)
        return matrix

    def __str__(self):
        return '; '.join(
            f'{name} -> {image}' for name, image in zip(self.alphabet.names, self.images)
        )

    def __repr__(self):
        return f'<Endomorphism {self}>'


@dataclass(frozen=True, eq=False)
class Automorphism:
    """
    An endomorphism together with a checked two-sided inverse.

    Equality compares the forward maps only (the inverse is then unique).
    """

    forward: Endomorphism
    backward: Endomorphism

    def __post_init__(self):
        if self.forward.alphabet != self.backward.alphabet:
            raise RankMismatch('forward and inverse maps live on different alphabets')
        if not self.forward.compose(self.backward).is_identity():
            raise NotInverse(f'({self.forward}) o ({self.backward}) is not the identity')
        if not self.backward.compose(self.forward).is_identity():
            raise NotInverse(f'({self.backward}) o ({self.forward}) is not the identity')

    @classmethod
    def _trusted(cls, forward, backward):
        # pair already known to be mutually inverse
        automorphism = object.__new__(cls)
        object.__setattr__(automorphism, 'forward', forward)
        object.__setattr__(automorphism, 'backward', backward)
        return automorphism

    @classmethod
    def identity(cls, alphabet):
        identity = Endomorphism.identity(alphabet)
        return cls._trusted(identity, identity)

    @property
    def alphabet(self):
        return self.forward.alphabet

    @property
    def rank(self):
        return self.forward.rank

    @property
    def images(self):
        return self.forward.images

    def apply(self, word):
        return self.forward.apply(word)

    __call__ = apply

    def compose(self, other: 'Automorphism') -> 'Automorphism':
        return Automorphism._trusted(
            self.forward.compose(other.forward),
            other.backward.compose(self.backward),
        )

    __mul__ = compose

    def inverse(self):
        return Automorphism._trusted(self.backward, self.forward)

    __invert__ = inverse

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** -n
        result = Automorphism.identity(self.alphabet)
        for _ in range(n):
            result = result.compose(self)
        return result

    def abelianize(self):
        return self.forward.abelianize()

    def is_identity(self):
        return self.forward.is_identity()

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.forward == other.forward

    def __hash__(self):
        return hash(self.forward)

    def to_text(self, witness=False):
        if witness:
            return f'{self.forward} | {self.backward}'
        return str(self.forward)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f'<Automorphism {self}>'


# ==================== Constructors ====================

def make_endo(images: Sequence[Word]) -> Endomorphism:
    """Endomorphism from generator images; all images must share one alphabet."""
    if not images:
        raise RankMismatch('an endomorphism needs at least one image')
    alphabet = images[0].alphabet
    return Endomorphism(alphabet, tuple(images))


def make_automorphism(images, inverse_images) -> Automorphism:
    """
    Build a verified automorphism from images and inverse images.

    Raises:
        NotInverse: if either composite differs from the identity
    """
    forward = images if isinstance(images, Endomorphism) else make_endo(images)
    backward = inverse_images if isinstance(inverse_images, Endomorphism) else make_endo(inverse_images)
    return Automorphism(forward, backward)


def compose(phi, psi):
    return phi.compose(psi)


def apply(phi, word):
    return phi.apply(word)


def endo_eq(phi, psi):
    phi = getattr(phi, 'forward', phi)
    psi = getattr(psi, 'forward', psi)
    if phi.alphabet.rank != psi.alphabet.rank:
        raise RankMismatch(f'rank {phi.alphabet.rank} vs rank {psi.alphabet.rank}')
    return phi == psi


def abelianize(phi):
    return phi.abelianize()


def _conjugation_images(word):
    alphabet = word.alphabet
    return tuple(Word.generator(alphabet, i).conjugate_by(word) for i in range(1, alphabet.rank + 1))


def inner(word: Word) -> Automorphism:
    """tau_w: z -> w z w^-1, with tau_{w^-1} as its inverse."""
    alphabet = word.alphabet
    return Automorphism._trusted(
        Endomorphism(alphabet, _conjugation_images(word)),
        Endomorphism(alphabet, _conjugation_images(word.inverse())),
    )


def chi(n, k, i, alphabet=None) -> Automorphism:
    """
    Basis-conjugating automorphism x_k -> x_i^-1 x_k x_i fixing the other generators.

    Raises:
        GeneratorIndexError: if k or i is outside 1..n
        InvalidChi: if k == i
    """
    alphabet = alphabet or generic_alphabet(n)
    if alphabet.rank != n:
        raise RankMismatch(f'alphabet {{{alphabet}}} does not have rank {n}')
    for index in (k, i):
        if not 1 <= index <= n:
            raise GeneratorIndexError(f'chi index {index} outside 1..{n}')
    if k == i:
        raise InvalidChi(f'chi({n},{k},{i}) needs k != i')
    x_i = Word.generator(alphabet, i)
    x_k = Word.generator(alphabet, k)
    forward = list(Endomorphism.identity(alphabet).images)
    backward = list(forward)
    forward[k - 1] = x_k.conjugate_by(x_i.inverse())
    backward[k - 1] = x_k.conjugate_by(x_i)
    return Automorphism._trusted(
        Endomorphism(alphabet, tuple(forward)), Endomorphism(alphabet, tuple(backward))
    )


def mccool_generators(n, upper=False, alphabet=None):
    """
    Generators chi_{k,i} of the McCool group M_n (k != i), or of M_n^+ (k < i).

    Returns:
        list: ``(label, Automorphism)`` pairs in lexicographic (k, i) order
    """
    return [
        (f'chi_{k},{i}', chi(n, k, i, alphabet))
        for k in range(1, n + 1)
        for i in range(1, n + 1)
        if k != i and (not upper or k < i)
    ]


def ia2_generators():
    """chi_{2,1} and chi_{1,2} on the basis {a, b}; together they generate IA_2 = Inn(F_2)."""
    return chi(2, 2, 1, AB), chi(2, 1, 2, AB)


def _ab(*names):
    return Word.from_names(AB, *names)


X1 = Automorphism._trusted(
    Endomorphism(AB, (_ab('a', 'b', 'b'), _ab('b'))),
    Endomorphism(AB, (_ab('a', '-b', '-b'), _ab('b'))),
)
X2 = Automorphism._trusted(
    Endomorphism(AB, (_ab('a'), _ab('b', 'a', 'a'))),
    Endomorphism(AB, (_ab('a'), _ab('b', '-a', '-a'))),
)
# a <-> b; outside F since it is not the identity mod 2
SWAP = Automorphism._trusted(
    Endomorphism(AB, (_ab('b'), _ab('a'))),
    Endomorphism(AB, (_ab('b'), _ab('a'))),
)
