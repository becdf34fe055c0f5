"""Partition and abacus combinatorics for level-rank duality.

Beta-sets and runner abaci, the core-quotient and runner-exchange bijections,
residue blocks of Ariki-Koike algebras at roots of unity, and the GL_n
Harish-Chandra dictionary, with brute-force verifiers.
"""
from .abacus import (Abacus, BetaSet, ChargedMultipartition, beta_set, big_upsilon,
                     big_upsilon_ml, from_beta, m_core, m_quotient, render_abacus,
                     upsilon, upsilon_inv, upsilon_ml)
from .affine import (AffinePermutation, act_on_abacus, act_on_charges, compose,
                     enumerate_bounded, invert, parse_affine)
from .blocks import (BlockKey, UglovDatum, block_key, blocks_of, residues, uglov_image,
                     verify_uglov)
from .gln import (b_vector, chi, effective_charge, hc_series, hecke_spec,
                  series_intersection, verify_duality)
from .partition import (Multipartition, Partition, conjugate, enum_partitions, hook_lengths,
                        is_core, parse_partition)

__version__ = "0.1.0"

__all__ = [
    "Abacus", "BetaSet", "ChargedMultipartition", "beta_set", "big_upsilon",
    "big_upsilon_ml", "from_beta", "m_core", "m_quotient", "render_abacus",
    "upsilon", "upsilon_inv", "upsilon_ml",
    "AffinePermutation", "act_on_abacus", "act_on_charges", "compose",
    "enumerate_bounded", "invert", "parse_affine",
    "BlockKey", "UglovDatum", "block_key", "blocks_of", "residues", "uglov_image",
    "verify_uglov",
    "b_vector", "chi", "effective_charge", "hc_series", "hecke_spec",
    "series_intersection", "verify_duality",
    "Multipartition", "Partition", "conjugate", "enum_partitions", "hook_lengths",
    "is_core", "parse_partition",
]
