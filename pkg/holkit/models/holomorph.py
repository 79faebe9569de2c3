"""
Holomorph and semidirect-product elements.

Hol(F_n) is modelled as pairs (g, phi) with the product
(g1, phi1)(g2, phi2) = (g1 * phi1(g2), phi1 o phi2). With this law the
projection (g, phi) -> phi is a homomorphism and phi g phi^-1 = phi(g), so
conjugation relations such as x1 a x1^-1 = a b^2 can be checked by plain
multiplication.
"""

from dataclasses import dataclass
from typing import Sequence

from holkit.errors import RankMismatch
from holkit.models.endomorphism import Automorphism
from holkit.models.word import Alphabet, Word, generic_alphabet


@dataclass(frozen=True)
class HolElement:
    g: Word
    phi: Automorphism

    def __post_init__(self):
        if self.g.alphabet != self.phi.alphabet:
            raise RankMismatch(
                f'word over {{{self.g.alphabet}}} paired with automorphism of {{{self.phi.alphabet}}}'
            )

    @classmethod
    def identity(cls, alphabet):
        return cls(Word.identity(alphabet), Automorphism.identity(alphabet))

    @classmethod
    def from_word(cls, word):
        return cls(word, Automorphism.identity(word.alphabet))

    @classmethod
    def from_automorphism(cls, phi):
        return cls(Word.identity(phi.alphabet), phi)

    @property
    def alphabet(self):
        return self.g.alphabet

    def mul(self, other: 'HolElement') -> 'HolElement':
        if other.alphabet != self.alphabet:
            raise RankMismatch(f'Hol elements over {{{self.alphabet}}} and {{{other.alphabet}}}')
        return HolElement(self.g * self.phi.apply(other.g), self.phi.compose(other.phi))

    __mul__ = mul

    def inverse(self) -> 'HolElement':
        phi_inv = self.phi.inverse()
        return HolElement(phi_inv.apply(self.g.inverse()), phi_inv)

    __invert__ = inverse

    def is_identity(self):
        return self.g.is_identity() and self.phi.is_identity()

    def to_text(self, witness=False):
        return f'({self.g} ; {self.phi.to_text(witness)})'

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f'<HolElement {self}>'


def hol_mul(p, q):
    return p.mul(q)


def hol_inv(p):
    return p.inverse()


def hol_eq(p, q):
    if p.alphabet.rank != q.alphabet.rank:
        raise RankMismatch(f'rank {p.alphabet.rank} vs rank {q.alphabet.rank}')
    return p.g == q.g and p.phi == q.phi


@dataclass(frozen=True)
class ActionTable:
    """
    Action of a free base group F_k on a free fiber group F_n.

    ``actions[i]`` is the automorphism by which base generator ``i + 1`` acts;
    a base word acts by the composite of its letters, leftmost outermost.
    """

    fiber: Alphabet
    base: Alphabet
    actions: tuple

    def __post_init__(self):
        if len(self.actions) != self.base.rank:
            raise RankMismatch(f'{len(self.actions)} actions for a base of rank {self.base.rank}')
        for action in self.actions:
            if action.alphabet != self.fiber:
                raise RankMismatch(
                    f'action on {{{action.alphabet}}} does not match fiber {{{self.fiber}}}'
                )

    def rho(self, h: Word) -> Automorphism:
        if h.alphabet != self.base:
            raise RankMismatch(f'base word over {{{h.alphabet}}}, expected {{{self.base}}}')
        result = Automorphism.identity(self.fiber)
        for letter in h.letters:
            action = self.actions[abs(letter) - 1]
            result = result.compose(action if letter > 0 else action.inverse())
        return result

    def act(self, h: Word, g: Word) -> Word:
        """rho(h)(g), applying the letters of h right to left."""
        for letter in reversed(h.letters):
            action = self.actions[abs(letter) - 1]
            g = action.apply(g) if letter > 0 else action.inverse().apply(g)
        return g

    def element(self, g, h):
        return SemidirectElement(g, h, self)

    def identity(self):
        return SemidirectElement(Word.identity(self.fiber), Word.identity(self.base), self)


@dataclass(frozen=True)
class SemidirectElement:
    g: Word
    h: Word
    table: ActionTable

    def __post_init__(self):
        if self.g.alphabet != self.table.fiber:
            raise RankMismatch(f'fiber word over {{{self.g.alphabet}}}, expected {{{self.table.fiber}}}')
        if self.h.alphabet != self.table.base:
            raise RankMismatch(f'base word over {{{self.h.alphabet}}}, expected {{{self.table.base}}}')

    def mul(self, other: 'SemidirectElement') -> 'SemidirectElement':
        if other.table != self.table:
            raise RankMismatch('semidirect elements over different action tables')
        return SemidirectElement(
            self.g * self.table.act(self.h, other.g), self.h * other.h, self.table
        )

    __mul__ = mul

    def inverse(self) -> 'SemidirectElement':
        h_inv = self.h.inverse()
        return SemidirectElement(self.table.act(h_inv, self.g.inverse()), h_inv, self.table)

    __invert__ = inverse

    def __str__(self):
        return f'({self.g} ; {self.h})'

    def __repr__(self):
        return f'<SemidirectElement {self}>'


def semidirect_build(action: Sequence[Automorphism], base=None) -> ActionTable:
    """
    Action table for F_n x| F_k from the images of the k base generators.

    Args:
        action: One automorphism of F_n per base generator
        base: Base alphabet; defaults to ``g1..gk``
    """
    if not action:
        raise RankMismatch('a semidirect product needs at least one base generator')
    base = base or generic_alphabet(len(action))
    return ActionTable(action[0].alphabet, base, tuple(action))
