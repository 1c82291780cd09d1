"""Exact graded commutative algebra over F_p: Frobenius pushforwards, Veronese summands, MCM modules."""
from .errors import *  # noqa: F401,F403
from .polynomial import Polynomial, PolynomialRing, parse_polynomial, print_polynomial
from .monomial import Grading, MonomialOrder, monomial_compare, weighted_degree
from .groebner import (Ideal, fedder_test, frobenius_power, groebner_basis, ideal_quotient,
                       intersection, normal_form)
from .hilbert import HilbertSeries
from .modules import Presentation, subquotient
from .resolutions import (FreeResolution, LocalCohomologyTable, canonical_module, depth,
                          ext_module, ext_self_canonical, hilbert_series, hom_module,
                          is_regular_sequence, krull_dimension, local_cohomology_lengths,
                          minimal_free_resolution, syzygies)
from .rings import GradedRing
from .frobenius import (FrobeniusPushforward, VeronesePresentation, frobenius_pushforward,
                        frobenius_splitting_complement, poly_ext_quotient_iso, poly_ext_summand,
                        veronese_submodule, verify_decomposition, verify_poly_ext_decomposition)
from .mcm import (HypothesisReport, MCMCertificate, certify_mcm, construct_omega_syzygy,
                  corollary_trivial_deformation, find_cm_veronese, find_deformation_element,
                  is_generalized_cm, is_quasi_buchsbaum, is_quasi_gorenstein,
                  splitting_complement_mcm, theorem_A_hypotheses, theorem_A_pipeline)

__version__ = "0.1.0"
