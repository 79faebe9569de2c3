"""
Normal forms for the subgroup F of Aut(F2) generated by the inner
automorphisms and x1, x2.

F splits as Inn(F2) x| <x1, x2>, so every element is tau_w o eval_x(X)
for a unique pair (w, X) of reduced words.
"""

from dataclasses import dataclass

from holkit.models.endomorphism import X1, X2, Automorphism, inner
from holkit.models.word import AB, X12, Word

X_GENERATORS = (X1, X2)


def eval_x(X: Word) -> Automorphism:
    """Composite of the letters of X, leftmost applied last."""
    result = Automorphism.identity(AB)
    for letter in X.letters:
        generator = X_GENERATORS[abs(letter) - 1]
        result = result.compose(generator if letter > 0 else generator.inverse())
    return result


def act_x(X: Word, w: Word) -> Word:
    """eval_x(X)(w) without building the composite automorphism."""
    for letter in reversed(X.letters):
        generator = X_GENERATORS[abs(letter) - 1]
        w = generator.apply(w) if letter > 0 else generator.inverse().apply(w)
    return w


@dataclass(frozen=True)
class FElement:
    w: Word
    X: Word

    def __post_init__(self):
        if self.w.alphabet != AB:
            raise ValueError(f'inner part must be over {{a,b}}, got {{{self.w.alphabet}}}')
        if self.X.alphabet != X12:
            raise ValueError(f'x part must be over {{x1,x2}}, got {{{self.X.alphabet}}}')

    @classmethod
    def identity(cls):
        return cls(Word.identity(AB), Word.identity(X12))

    def mul(self, other: 'FElement') -> 'FElement':
        # tau_w1 X1 tau_w2 X2 = tau_{w1 X1(w2)} X1 X2
        return FElement(self.w * act_x(self.X, other.w), self.X * other.X)

    __mul__ = mul

    def inverse(self) -> 'FElement':
        X_inv = self.X.inverse()
        return FElement(act_x(X_inv, self.w.inverse()), X_inv)

    __invert__ = inverse

    def is_identity(self):
        return self.w.is_identity() and self.X.is_identity()

    def to_automorphism(self) -> Automorphism:
        return inner(self.w).compose(eval_x(self.X))

    def __str__(self):
        return f'({self.w} ; {self.X})'

    def __repr__(self):
        return f'<FElement {self}>'


def f_mul(e1, e2):
    return e1.mul(e2)


def f_inv(e):
    return e.inverse()


def f_to_aut(e):
    return e.to_automorphism()
