"""
The subgroup pi = p^-1(F) of Hol(F2) and its embedding into F x F.

Generators of pi inside Hol(F2):

    a  = (a, id)          b  = (b, id)
    ta = (a^-1, tau_a)    tb = (b^-1, tau_b)
    x1 = (1, x1)          x2 = (1, x2)

More generally t_w := (w^-1, tau_w) is a homomorphism in w whose image
commutes with <a, b>, so tau_w = w * t_w in Hol(F2). That identity is what
turns the inner part of decompose_f into the (u, v) part of the triple.
"""

import logging

from holkit.errors import NotInF, NotInPi
from holkit.models.endomorphism import X1, X2, inner
from holkit.models.fgroup import FElement
from holkit.models.holomorph import HolElement
from holkit.models.pi import PiElement, t_transcribe
from holkit.models.word import AB, Word
from holkit.utils.decomposition import decompose_f

logger = logging.getLogger(__name__)


def t_word(w: Word) -> HolElement:
    """(w^-1, tau_w)"""
    return HolElement(w.inverse(), inner(w))


def _generator_table():
    a = Word.generator(AB, 1)
    b = Word.generator(AB, 2)
    return {
        'a': HolElement.from_word(a),
        'b': HolElement.from_word(b),
        'ta': t_word(a),
        'tb': t_word(b),
        'Ta': HolElement.from_automorphism(inner(a)),
        'Tb': HolElement.from_automorphism(inner(b)),
        'x1': HolElement.from_automorphism(X1),
        'x2': HolElement.from_automorphism(X2),
    }


PI_GENERATORS = _generator_table()


def pi_generator(name) -> HolElement:
    """Hol(F2) interpretation of a, b, ta, tb, x1, x2 (and Ta, Tb for tau_a, tau_b)."""
    return PI_GENERATORS[name]


def fold_letters(word: Word) -> HolElement:
    """Product in Hol(F2) of the generator interpretations along ``word``."""
    result = HolElement.identity(AB)
    for letter in word.letters:
        generator = PI_GENERATORS[word.alphabet.name_of(abs(letter))]
        result = result * (generator if letter > 0 else generator.inverse())
    return result


def pi_member(p: HolElement) -> bool:
    if p.alphabet != AB:
        return False
    try:
        decompose_f(p.phi)
    except NotInF:
        return False
    return True


def pi_normal_form(p: HolElement) -> PiElement:
    """
    Triple (u, v, X) with p = u * v * X.

    Raises:
        NotInPi: if the automorphism part of p lies outside F
    """
    try:
        f_element = decompose_f(p.phi)
    except NotInF as exc:
        raise NotInPi(f'{p} is not in pi: {exc}') from exc
    # (g, tau_w X) = g * tau_w * X = (g w) * t_w * X
    return PiElement(p.g * f_element.w, t_transcribe(f_element.w), f_element.X)


def pi_from_normal_form(e: PiElement) -> HolElement:
    return fold_letters(e.u) * fold_letters(e.v) * fold_letters(e.X)


def pi_mul_via_hol(*elements: PiElement) -> PiElement:
    """Multiply through Hol(F2) and read the normal form back."""
    product = HolElement.identity(AB)
    for element in elements:
        product = product * pi_from_normal_form(element)
    return pi_normal_form(product)


def map_f1(e: PiElement) -> FElement:
    return e.f1()


def map_f2(e: PiElement) -> FElement:
    return e.f2()


def embed_pi(e: PiElement):
    """(f1(e), f2(e)) in F x F."""
    return map_f1(e), map_f2(e)


def unembed_pi(first: FElement, second: FElement) -> PiElement:
    """
    Left inverse of ``embed_pi`` on its image.

    Raises:
        ValueError: if the two coordinates have different x-parts (not in the image)
    """
    if first.X != second.X:
        raise ValueError(f'{first} and {second} do not share an x-part')
    return PiElement(first.w, t_transcribe(second.w), first.X)


def map_f2_via_hol(e: PiElement) -> FElement:
    """f2 = p: project to the automorphism part and decompose."""
    return decompose_f(pi_from_normal_form(e).phi)


def kernel_element(e: PiElement) -> bool:
    """True when both coordinates of the embedding are trivial."""
    first, second = embed_pi(e)
    trivial = first.is_identity() and second.is_identity()
    if trivial:
        logger.debug('%s lies in ker f1 and ker f2', e)
    return trivial

