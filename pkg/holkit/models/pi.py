"""
Normal forms for pi, the preimage of F in Hol(F2).

pi = (<a, b> x <ta, tb>) x| <x1, x2> with ta = a^-1 tau_a and tb = b^-1 tau_b.
A triple (u, v, X) stands for u * v * X: the ta/tb letters commute with a
and b, and x-letters act on both free factors through the same substitution
(x1: a -> a b^2, x2: b -> b a^2, read on ta/tb for the second factor).
"""

from dataclasses import dataclass

from holkit.models.fgroup import FElement, act_x
from holkit.models.word import AB, TATB, X12, Word


def t_transcribe(w: Word) -> Word:
    """a -> ta, b -> tb, order preserved."""
    return w.relabel(TATB)


def untranscribe(v: Word) -> Word:
    """ta -> a, tb -> b."""
    return v.relabel(AB)


@dataclass(frozen=True)
class PiElement:
    u: Word
    v: Word
    X: Word

    def __post_init__(self):
        expected = ((self.u, AB, 'u'), (self.v, TATB, 'v'), (self.X, X12, 'X'))
        for word, alphabet, label in expected:
            if word.alphabet != alphabet:
                raise ValueError(f'{label} must be over {{{alphabet}}}, got {{{word.alphabet}}}')

    @classmethod
    def identity(cls):
        return cls(Word.identity(AB), Word.identity(TATB), Word.identity(X12))

    def mul(self, other: 'PiElement') -> 'PiElement':
        """Push X past the second factor, then shuffle t-letters past a, b-letters."""
        moved_u = act_x(self.X, other.u)
        moved_v = t_transcribe(act_x(self.X, untranscribe(other.v)))
        return PiElement(self.u * moved_u, self.v * moved_v, self.X * other.X)

    __mul__ = mul

    def inverse(self) -> 'PiElement':
        X_inv = self.X.inverse()
        return PiElement(
            act_x(X_inv, self.u.inverse()),
            t_transcribe(act_x(X_inv, untranscribe(self.v).inverse())),
            X_inv,
        )

    __invert__ = inverse

    def is_identity(self):
        return self.u.is_identity() and self.v.is_identity() and self.X.is_identity()

    def f1(self) -> FElement:
        """Kill ta, tb."""
        return FElement(self.u, self.X)

    def f2(self) -> FElement:
        """Kill a, b and read ta, tb as a, b."""
        return FElement(untranscribe(self.v), self.X)

    def __str__(self):
        return f'({self.u} ; {self.v} ; {self.X})'

    def __repr__(self):
        return f'<PiElement {self}>'


def pi_mul(*elements):
    result = PiElement.identity()
    for element in elements:
        result = result.mul(element)
    return result


def pi_inv(e):
    return e.inverse()
