from .sanov import eval_sanov, sanov_rewrite
from .decomposition import as_automorphism, decompose_f, is_inner
from .embeddings import corollary_injection, embed_e, semidirect_standard_tables
from .pi_embed import embed_pi, map_f1, map_f2, pi_from_normal_form, pi_member, pi_normal_form

__all__ = [
    'eval_sanov', 'sanov_rewrite', 'as_automorphism', 'decompose_f', 'is_inner',
    'corollary_injection', 'embed_e', 'semidirect_standard_tables', 'embed_pi', 'map_f1',
    'map_f2', 'pi_from_normal_form', 'pi_member', 'pi_normal_form',
]
