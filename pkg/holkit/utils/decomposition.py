"""
Membership and normal forms in F < Aut(F2).

Membership is decided through the abelianization: the matrix must rewrite
as a positive word in A1, A2; that word names the x-part (A2 -> x1,
A1 -> x2, compensating for the column convention of ``abelianize``), and
what remains after removing the x-part must be an inner automorphism.
"""

import logging

from holkit.errors import NotCongruent, NotInF, NotInner, NotInverse, RankMismatch
from holkit.models.endomorphism import Automorphism, Endomorphism, inner
from holkit.models.fgroup import FElement, eval_x
from holkit.models.word import AB, X12, Word
from holkit.utils.sanov import sanov_rewrite

logger = logging.getLogger(__name__)

SANOV_TO_X = {1: 2, 2: 1}


def _endomorphism(phi) -> Endomorphism:
    return phi.forward if isinstance(phi, Automorphism) else phi


def is_inner(phi) -> Word:
    """
    Recover the conjugator of an inner automorphism of a rank-2 free group.

    Args:
        phi: Automorphism (or bare endomorphism) of F2

    Returns:
        Word: the unique w with phi = tau_w

    Raises:
        NotInner: if phi is not conjugation by a word
    """
    endo = _endomorphism(phi)
    alphabet = endo.alphabet
    if alphabet.rank != 2:
        raise RankMismatch(f'inner recovery works in rank 2, got rank {alphabet.rank}')
    if not endo.abelianize().is_identity():
        raise NotInner(f'abelianization {endo.abelianize()} is not the identity')

    a = Word.generator(alphabet, 1)
    image_a, image_b = endo.images
    u, core = image_a.cyclic_decompose()
    if core != a:
        raise NotInner(f'image of {a} is conjugate to {core}, not to {a}')

    # phi(b) = (u a^k) b (u a^k)^-1 for the unknown k
    k = (u.inverse() * image_b * u).leading_power(1)
    w = u * a ** k
    if inner(w).forward != endo:
        raise NotInner(f'conjugation by {w} does not reproduce {endo}')
    return w


def decompose_f(phi) -> FElement:
    """
    Normal form (w, X) with phi = tau_w o eval_x(X).

    Raises:
        NotInF: with reason NotCongruent, MinusSign or NotInner
    """
    endo = _endomorphism(phi)
    if endo.alphabet != AB:
        raise RankMismatch(f'F lives in Aut(F2) over {{a,b}}, got {{{endo.alphabet}}}')

    matrix = endo.abelianize()
    try:
        certificate = sanov_rewrite(matrix)
    except NotCongruent as exc:
        raise NotInF('NotCongruent', str(exc)) from exc
    if certificate.sign == -1:
        raise NotInF('MinusSign', f'{matrix} is minus a Sanov matrix')

    X = certificate.word.relabel(X12, SANOV_TO_X)
    logger.debug('x-part of %s is %s', endo, X)
    remainder = endo.compose(eval_x(X).backward)
    try:
        w = is_inner(remainder)
    except NotInner as exc:
        raise NotInF('NotInner', str(exc)) from exc
    return FElement(w, X)


def as_automorphism(endo: Endomorphism) -> Automorphism:
    """
    Attach an inverse witness to an endomorphism of F2 that lies in F or is an involution.

    Raises:
        NotInverse: if no witness can be derived
    """
    if endo.compose(endo).is_identity():
        return Automorphism(endo, endo)
    if endo.alphabet == AB:
        try:
            return decompose_f(endo).to_automorphism()
        except NotInF:
            pass
    raise NotInverse(f'no inverse witness for {endo}; supply one after a "|"')
