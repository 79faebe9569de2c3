"""
The relation table of pi, checked by independent evaluators.

Relations are words over the alphabet {a, b, Ta, Tb, ta, tb, x1, x2}
(Ta, Tb standing for tau_a, tau_b). Each relation is evaluated

    - in Hol(F2) by multiplying generator interpretations (``hol``),
    - in Aut(F3) by composing the images of the generators under E (``aut3``),
    - in Aut(F2) by composing automorphisms, when both sides only involve
      x1, x2, Ta, Tb (``aut2``).
"""

from dataclasses import dataclass
from typing import Optional

from holkit.models.endomorphism import X1, X2, Automorphism, inner
from holkit.models.holomorph import hol_eq
from holkit.models.word import AB, Alphabet, Word, embedding_alphabet
from holkit.parsing import parse_word
from holkit.utils.embeddings import embed_e
from holkit.utils.pi_embed import PI_GENERATORS, fold_letters

RELATION_ALPHABET = Alphabet(('a', 'b', 'Ta', 'Tb', 'ta', 'tb', 'x1', 'x2'))
AUTOMORPHISM_LETTERS = {'Ta', 'Tb', 'x1', 'x2'}

# (lhs, rhs) in the order of the summarized table, then the four commutators
RELATION_TABLE = (
    ('x1 a x1^-1', 'a b^2'),
    ('x2 a x2^-1', 'a'),
    ('x1 b x1^-1', 'b'),
    ('x2 b x2^-1', 'b a^2'),
    ('x1 Ta x1^-1', 'Ta Tb^2'),
    ('x2 Ta x2^-1', 'Ta'),
    ('x1 Tb x1^-1', 'Tb'),
    ('x2 Tb x2^-1', 'Tb Ta^2'),
    ('Ta a Ta^-1', 'a'),
    ('Tb a Tb^-1', 'b a b^-1'),
    ('Ta b Ta^-1', 'a b a^-1'),
    ('Tb b Tb^-1', 'b'),
    ('ta a ta^-1 a^-1', '1'),
    ('tb a tb^-1 a^-1', '1'),
    ('ta b ta^-1 b^-1', '1'),
    ('tb b tb^-1 b^-1', '1'),
)

EXTENDED_RELATIONS = (
    ('x1 ta x1^-1', 'ta tb^2'),
    ('x2 ta x2^-1', 'ta'),
    ('x1 tb x1^-1', 'tb'),
    ('x2 tb x2^-1', 'tb ta^2'),
    ('Ta a', 'a Ta'),
    ('Tb b', 'b Tb'),
)

CORRUPTED_RELATION = ('x1 a x1^-1', 'a b')


@dataclass(frozen=True)
class RelationResult:
    lhs: Word
    rhs: Word
    hol: bool
    aut3: bool
    aut2: Optional[bool] = None

    @property
    def passed(self):
        return self.hol and self.aut3 and self.aut2 is not False

    @property
    def label(self):
        return f'{self.lhs} = {self.rhs}'

    def __str__(self):
        return f"{'PASS' if self.passed else 'FAIL'} {self.label}"


def _aut3_generators():
    return {name: embed_e(1, element) for name, element in PI_GENERATORS.items()}


def _aut2_generators():
    a, b = Word.generator(AB, 1), Word.generator(AB, 2)
    return {'Ta': inner(a), 'Tb': inner(b), 'x1': X1, 'x2': X2}


class RelationChecker:
    """
    Evaluates relations of pi with three independent deciders.
    No instance needed - all methods are static.
    """

    AUT3 = _aut3_generators()
    AUT2 = _aut2_generators()

    @staticmethod
    def _compose_along(word, table, identity):
        result = identity
        for letter in word.letters:
            generator = table[word.alphabet.name_of(abs(letter))]
            result = result.compose(generator if letter > 0 else generator.inverse())
        return result

    @staticmethod
    def uses_only_automorphisms(word):
        return all(word.alphabet.name_of(abs(letter)) in AUTOMORPHISM_LETTERS
                   for letter in word.letters)

    @staticmethod
    def check(lhs, rhs):
        """
        Evaluate one relation lhs = rhs.

        Args:
            lhs: Word over RELATION_ALPHABET, or its text form
            rhs: Word over RELATION_ALPHABET, or its text form

        Returns:
            RelationResult: verdict of every applicable evaluator
        """
        if isinstance(lhs, str):
            lhs = parse_word(lhs, RELATION_ALPHABET)
        if isinstance(rhs, str):
            rhs = parse_word(rhs, RELATION_ALPHABET)

        hol = hol_eq(fold_letters(lhs), fold_letters(rhs))

        identity3 = Automorphism.identity(embedding_alphabet(1))
        aut3 = (RelationChecker._compose_along(lhs, RelationChecker.AUT3, identity3)
                == RelationChecker._compose_along(rhs, RelationChecker.AUT3, identity3))

        aut2 = None
        if RelationChecker.uses_only_automorphisms(lhs) and RelationChecker.uses_only_automorphisms(rhs):
            identity2 = Automorphism.identity(AB)
            aut2 = (RelationChecker._compose_along(lhs, RelationChecker.AUT2, identity2)
                    == RelationChecker._compose_along(rhs, RelationChecker.AUT2, identity2))

        return RelationResult(lhs, rhs, hol, aut3, aut2)


def verify_relations(extended=False, extra=()):
    """
    Check the relation table of pi.

    Args:
        extended: Also check the t-generator form of the action and tau_a a = a tau_a, tau_b b = b tau_b
        extra: Additional (lhs, rhs) text pairs, e.g. a negative control

    Returns:
        list: RelationResult per relation, table order first
    """
    relations = list(RELATION_TABLE)
    if extended:
        relations += EXTENDED_RELATIONS
    relations += list(extra)
    return [RelationChecker.check(lhs, rhs) for lhs, rhs in relations]
