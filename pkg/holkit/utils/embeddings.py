"""
Embeddings out of holomorphs and semidirect products.

``embed_e`` sends Hol(F_n) into Aut(F_{n+m}): automorphisms act on the first
n generators and fix the last m, group elements fix the first n generators
and send each of the last m to g^-1 z g. A general pair (g, phi) goes to
E(g) o E(phi), and E(p q) = E(p) o E(q) for the Hol product.

``corollary_injection`` sends an element of F2 x| F_k into Hol(F2) x F_k.
"""

from holkit.errors import InvalidGenerator, RankMismatch
from holkit.models.endomorphism import X1, X2, Automorphism, Endomorphism, inner
from holkit.models.holomorph import HolElement, SemidirectElement, semidirect_build
from holkit.models.word import AB, Alphabet, Word, embedding_alphabet


def _extended_alphabet(alphabet, m):
    if alphabet == AB:
        return embedding_alphabet(m)
    extra = tuple(f'z{i}' for i in range(1, m + 1))
    clash = [name for name in extra if name in alphabet.names]
    if clash:
        raise InvalidGenerator(
            f"alphabet {{{alphabet}}} already uses {', '.join(clash)}; "
            f'the embedding adds z1..z{m} as new generators'
        )
    return Alphabet(alphabet.names + extra)


def _lift(word: Word, target: Alphabet) -> Word:
    """Read a word of F_n inside F_{n+m} on the first n generators."""
    return Word._trusted(target, word.letters)


def _extend_endomorphism(endo: Endomorphism, target: Alphabet) -> Endomorphism:
    n = endo.rank
    images = [_lift(image, target) for image in endo.images]
    images += [Word.generator(target, j) for j in range(n + 1, target.rank + 1)]
    return Endomorphism(target, tuple(images))


def _conjugating_endomorphism(g: Word, target: Alphabet) -> Endomorphism:
    n = g.rank
    conjugator = _lift(g, target).inverse()
    images = [Word.generator(target, j) for j in range(1, n + 1)]
    images += [Word.generator(target, j).conjugate_by(conjugator)
               for j in range(n + 1, target.rank + 1)]
    return Endomorphism(target, tuple(images))


def embed_automorphism(phi: Automorphism, m: int) -> Automorphism:
    """E(phi): phi on the first n generators, identity on z1..zm."""
    target = _extended_alphabet(phi.alphabet, m)
    return Automorphism._trusted(
        _extend_endomorphism(phi.forward, target), _extend_endomorphism(phi.backward, target)
    )


def embed_word(g: Word, m: int) -> Automorphism:
    """E(g): identity on the first n generators, z -> g^-1 z g on z1..zm."""
    target = _extended_alphabet(g.alphabet, m)
    return Automorphism._trusted(
        _conjugating_endomorphism(g, target), _conjugating_endomorphism(g.inverse(), target)
    )


def embed_e(m: int, p: HolElement) -> Automorphism:
    """
    Image of a Hol(F_n) element in Aut(F_{n+m}).

    Args:
        m: Number of extra free generators, at least 1
        p: Element of Hol(F_n)

    Returns:
        Automorphism: E(g) o E(phi) over the alphabet of F_n followed by z1..zm
    """
    if m < 1:
        raise ValueError(f'embedding needs at least one extra generator, got m={m}')
    return embed_word(p.g, m).compose(embed_automorphism(p.phi, m))


def corollary_injection(e: SemidirectElement):
    """
    (g, h) -> ((g, rho(h)), h), the map G -> Hol(F2) x F_k.

    Returns:
        tuple: (HolElement, base Word)
    """
    if e.table.fiber.rank != 2:
        raise RankMismatch(f'fiber must have rank 2, got rank {e.table.fiber.rank}')
    return HolElement(e.g, e.table.rho(e.h)), e.h


def semidirect_standard_tables():
    """
    The two action tables the injection suite runs on.

    ``z``: F2 x| Z with the generator t acting by tau_b.
    ``x``: F2 x| F2 with s1, s2 acting by x1, x2.
    """
    b = Word.generator(AB, 2)
    return {
        'z': semidirect_build([inner(b)], Alphabet(('t',))),
        'x': semidirect_build([X1, X2], Alphabet(('s1', 's2'))),
    }
