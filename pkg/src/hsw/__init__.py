"""Exact computations in the extended affine Hecke algebra, its spherical
module, graded weight multiplicities, and an independent graded-module
oracle for Hom ranks.

Everything is integer/Laurent exact; no floating point anywhere.
"""

from .affine import (AffineElt, SimpleReflection, affine_identity, coset_decompose,
                     min_rep, omega_elements, parse_weight, parse_word, reduced_word,
                     simple_reflections, translation, word_elt)
from .hecke import (HeckeElt, hecke_bar, hecke_inv_T, hecke_mul, hecke_T,
                    hecke_theta, verify_bernstein, verify_quadratic_affine)
from .laurent import LaurentPoly
from .mpoly import MPoly
from .qanalogue import (dominant_weights_by_length, freudenthal_mult, kato_check,
                        kato_grid, kostant_q, lusztig_q, weights_of_irrep, weyl_dim)
from .rootdata import RootDatum, datum_from_file, datum_preset, load_datum, product_datum
from .soergel import (CutoffError, GradedCModule, atom_D_affine, atom_D_finite,
                      atom_E, atom_for, bs_module, fundamental_invariants,
                      hom_graded_rank, modules_equal, oracle_vs_hecke, tensor)
from .spherical import (SphElt, bs_char, canonical_basis, decompose_bs, fl_bs_char,
                        hom_rank, m_zero, sph_act, sph_bar, sph_pairing, sph_project)
from .verify import run_suite

__version__ = "0.1.0"

__all__ = [
    "AffineElt", "CutoffError", "GradedCModule", "HeckeElt", "LaurentPoly",
    "MPoly", "RootDatum", "SimpleReflection", "SphElt",
    "affine_identity", "atom_D_affine", "atom_D_finite", "atom_E", "atom_for",
    "bs_char",
    "bs_module", "canonical_basis", "coset_decompose", "datum_from_file",
    "datum_preset", "decompose_bs", "dominant_weights_by_length", "fl_bs_char",
    "freudenthal_mult", "fundamental_invariants", "hecke_T", "hecke_bar",
    "hecke_inv_T", "hecke_mul", "hecke_theta", "hom_graded_rank", "hom_rank",
    "kato_check", "kato_grid", "kostant_q", "load_datum", "lusztig_q", "m_zero",
    "min_rep", "modules_equal", "omega_elements", "oracle_vs_hecke",
    "parse_weight", "parse_word",
    "product_datum", "reduced_word", "run_suite", "simple_reflections", "sph_act",
    "sph_bar", "sph_pairing", "sph_project", "tensor", "translation",
    "verify_bernstein", "verify_quadratic_affine", "weights_of_irrep", "weyl_dim",
    "word_elt",
]
