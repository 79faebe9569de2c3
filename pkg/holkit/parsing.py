"""
Text grammars for every value type.

These functions are the input-validation layer: anything typed on the
command line or stored in a certificate goes through here.

    word            tokens NAME or NAME^EXP separated by whitespace; ``1`` is the identity
    matrix          [[p,q],[r,s]]
    endomorphism    a -> a b^2; b -> b      (unlisted generators are fixed; ``1`` is the identity)
    automorphism    <endomorphism> [| <inverse endomorphism>]
    hol element     (<word> ; <automorphism>)
    F element       (<word over a,b> ; <word over x1,x2>)
    pi element      (<u over a,b> ; <v over ta,tb> ; <X over x1,x2>)
"""

import re

from holkit.errors import ParseError
from holkit.models.endomorphism import Automorphism, Endomorphism, make_automorphism
from holkit.models.fgroup import FElement
from holkit.models.holomorph import HolElement, SemidirectElement
from holkit.models.intmat import IntMatrix2
from holkit.models.pi import PiElement
from holkit.models.word import AB, TATB, X12, Alphabet, Word
from holkit.utils.decomposition import as_automorphism

TOKEN = re.compile(r'\S+')
GENERATOR = re.compile(r'([A-Za-z][A-Za-z0-9]*)(?:\^([+-]?\d+))?$')
NAME = re.compile(r'[A-Za-z][A-Za-z0-9]*$')
MATRIX = re.compile(
    r'\s*\[\s*\[\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\]\s*,'
    r'\s*\[\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\]\s*\]\s*$'
)
IDENTITY_TOKENS = ('1', 'id')

# unreduced letters accepted in one word
MAX_LETTERS = 10 ** 6


def parse_alphabet(text):
    """'a,b' or 'a b' -> Alphabet(('a', 'b'))"""
    if isinstance(text, Alphabet):
        return text
    names = tuple(name for name in re.split(r'[\s,]+', text.strip()) if name)
    for name in names:
        if not NAME.match(name):
            raise ParseError(f"invalid generator name '{name}'")
    if not names:
        raise ParseError('empty alphabet')
    return Alphabet(names)


def parse_word(text, alphabet, offset=0):
    """
    Parse a word over a named alphabet.

    Args:
        text: e.g. 'a b^2 a^-1'
        alphabet: Alphabet or list of generator names
        offset: Position of ``text`` inside a larger input, for error messages

    Returns:
        Word: the reduced word

    Raises:
        ParseError: malformed token, or more than MAX_LETTERS letters
        InvalidGenerator: name outside the alphabet
    """
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(tuple(alphabet))
    raw = []
    for match in TOKEN.finditer(text):
        token = match.group()
        if token == '1':
            continue
        parsed = GENERATOR.match(token)
        if not parsed:
            raise ParseError(f"malformed token '{token}'", offset + match.start())
        name, exponent = parsed.group(1), parsed.group(2)
        index = alphabet.index_of(name)
        digits = exponent.lstrip('+-') if exponent is not None else '1'
        if len(digits) > len(str(MAX_LETTERS)) or len(raw) + int(digits) > MAX_LETTERS:
            raise ParseError(f'word longer than {MAX_LETTERS} letters', offset + match.start())
        power = int(exponent) if exponent is not None else 1
        raw.extend([index if power > 0 else -index] * abs(power))
    return Word.reduce(raw, alphabet)


def parse_matrix(text):
    match = MATRIX.match(text)
    if not match:
        raise ParseError(f"expected [[p,q],[r,s]], got '{text.strip()}'", 0)
    return IntMatrix2(*(int(group) for group in match.groups()))


def parse_endomorphism(text, alphabet=AB, offset=0):
    alphabet = parse_alphabet(alphabet)
    if text.strip() in IDENTITY_TOKENS:
        return Endomorphism.identity(alphabet)
    images = list(Endomorphism.identity(alphabet).images)
    seen = set()
    position = offset
    for assignment in text.split(';'):
        if not assignment.strip():
            position += len(assignment) + 1
            continue
        if '->' not in assignment:
            raise ParseError(f"expected 'name -> word', got '{assignment.strip()}'", position)
        name, image = assignment.split('->', 1)
        name = name.strip()
        if name in seen:
            raise ParseError(f"generator '{name}' assigned twice", position)
        seen.add(name)
        index = alphabet.index_of(name)
        images[index - 1] = parse_word(image, alphabet, position + assignment.index('->') + 2)
        position += len(assignment) + 1
    return Endomorphism(alphabet, tuple(images))


def parse_automorphism(text, alphabet=AB, offset=0):
    """
    Parse an automorphism, with or without an explicit inverse after '|'.

    Without a witness the inverse is derived when the map is an involution
    or lies in F; otherwise NotInverse is raised.
    """
    alphabet = parse_alphabet(alphabet)
    if '|' in text:
        forward, backward = text.split('|', 1)
        return make_automorphism(
            parse_endomorphism(forward, alphabet, offset),
            parse_endomorphism(backward, alphabet, offset + len(forward) + 1),
        )
    endo = parse_endomorphism(text, alphabet, offset)
    if endo.is_identity():
        return Automorphism.identity(alphabet)
    return as_automorphism(endo)


def _split_tuple(text, parts):
    stripped = text.strip()
    if not (stripped.startswith('(') and stripped.endswith(')')):
        raise ParseError(f"expected a parenthesized tuple, got '{stripped}'", 0)
    inner_text = stripped[1:-1]
    pieces = inner_text.split(';', parts - 1)
    if len(pieces) != parts:
        raise ParseError(f"expected {parts} ';'-separated parts in '{stripped}'", 0)
    offsets = []
    position = text.index('(') + 1
    for piece in pieces:
        offsets.append(position)
        position += len(piece) + 1
    return pieces, offsets


def parse_hol(text, alphabet=AB):
    alphabet = parse_alphabet(alphabet)
    (word, automorphism), (word_at, automorphism_at) = _split_tuple(text, 2)
    return HolElement(
        parse_word(word, alphabet, word_at),
        parse_automorphism(automorphism, alphabet, automorphism_at),
    )


def parse_f(text):
    (w, X), (w_at, X_at) = _split_tuple(text, 2)
    return FElement(parse_word(w, AB, w_at), parse_word(X, X12, X_at))


def parse_pi(text):
    pieces, offsets = _split_tuple(text, 3)
    if any(';' in piece for piece in pieces):
        raise ParseError(f"expected exactly 3 parts in '{text.strip()}'", 0)
    u, v, X = (
        parse_word(piece, alphabet, at)
        for piece, alphabet, at in zip(pieces, (AB, TATB, X12), offsets)
    )
    return PiElement(u, v, X)


def parse_semidirect(text, table):
    (g, h), (g_at, h_at) = _split_tuple(text, 2)
    return SemidirectElement(
        parse_word(g, table.fiber, g_at), parse_word(h, table.base, h_at), table
    )

