"""Exact characterizations of classical moment sequences via Hankel matrices."""

from .characterize import (DerivedBasis, EigenReport, FirstStructure, RodriguesReport,
                           SecondStructure, bochner_verify, derived_norm_closed_form,
                           derived_norms, first_structure, hahn_basis, hahn_verify, ngn_check,
                           rodrigues_verify, second_structure)
from .errors import (ClassicalSeqError, DegenerateRecurrence, DimensionMismatch, InputError,
                     InvalidPhi, QuasiDefiniteViolation, StructureViolation, TooShort, ZeroMu0)
from .hankel import (CholeskyState, GramMatrix, bareiss_determinant, bilinear, build_gram,
                     cholesky_extend, cholesky_init, det_ratio_check, factorize,
                     hankel_determinants, verify_factorization)
from .moments import (DELTA, FIXTURES, HERMITE, LAGUERRE, LEGENDRE, Family, FamilyTag,
                      MomentSequence, PearsonData, bessel, classify_family, derive_sigma,
                      generate_moments, jacobi, laguerre, pearson_shift, sigma_chain,
                      validate_pearson, verify_recurrence)
from .operators import (StructuredMatrix, build_D, build_D_recursive, build_N, build_Phi,
                        build_R, check_moment_kernel, check_self_adjoint)
from .poly import (Polynomial, apply_D, derivative_family, evaluate, extract_polynomials,
                   format_polynomial, format_rational, pochhammer)

__version__ = "0.1.0"
