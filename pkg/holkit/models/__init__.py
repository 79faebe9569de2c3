# Import all models to make them available
from .word import AB, SANOV, TATB, X12, Alphabet, Letter, Word, embedding_alphabet, generic_alphabet
from .intmat import A1, A2, IntMatrix2, Mod2Matrix, SanovCertificate
from .endomorphism import SWAP, X1, X2, Automorphism, Endomorphism, chi, inner
from .holomorph import ActionTable, HolElement, SemidirectElement, semidirect_build
from .fgroup import FElement, eval_x
from .pi import PiElement

__all__ = [
    'AB', 'SANOV', 'TATB', 'X12', 'Alphabet', 'Letter', 'Word', 'embedding_alphabet',
    'generic_alphabet', 'A1', 'A2', 'IntMatrix2', 'Mod2Matrix', 'SanovCertificate', 'SWAP',
    'X1', 'X2', 'Automorphism', 'Endomorphism', 'chi', 'inner', 'ActionTable', 'HolElement',
    'SemidirectElement', 'semidirect_build', 'FElement', 'eval_x', 'PiElement',
]
