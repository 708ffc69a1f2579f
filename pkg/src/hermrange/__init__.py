"""Ranges of matrices over F_{q^2} under the conjugate-transpose pairing.

The library enumerates constrained vector cones to compute the exact
range sets, predicts the same sets from closed-form rules keyed by
matrix shape, and cross-checks the two answers over whole matrix
spaces.  Everything runs on plain integers through lookup-table field
contexts; no third-party packages are needed.
"""

from .classify import (CLAIM_EMPTY, CLAIM_EXACT_CARD, CLAIM_EXACT_SET,
                       CLAIM_LINE, CLAIM_LOWER_BOUND, CLAIM_MEMBER,
                       CLAIM_SUPERSET, CLAIM_UPPER_BOUND, FAIL, INAPPLICABLE,
                       IRREDUCIBLE, PASS, REPEATED, SCOPE_FIBER_ZERO,
                       TWO_DISTINCT, EigenData2, Prediction, check_prediction,
                       eigen2, predict_direct_sum, predict_full_field,
                       predict_subfield, predict_unitary_diagonal,
                       scalar_fiber_formula, unitarily_diagonalizable_2x2)
from .fields import (FieldCtx, FieldElem, FieldSpec, build_tower,
                     ctx_from_spec, frobenius, is_square, norm,
                     norm_minus_one_roots, norm_preimages, sqrt_subfield,
                     two_square_rep)
from .hermitian import (DEFAULT_CAPACITY, FULL_FIELD, SUBFIELD, CapacityError,
                        ConeSlice, HermMatrix, Vector, block_diag,
                        cone_encs, cone_upper_bound, conj_by_unitary, dagger,
                        enumerate_cone, inner, is_unitary, iter_cone_encs,
                        naive_cone_encs, random_unitary_2x2, sample_cone_encs)
from .ranges import (EXHAUSTIVE, KIND_NUM0_PRIME, KIND_NUM0_PRIME_SUBFIELD,
                     KIND_NUM_K, KIND_NUM_K_SUBFIELD, SAMPLED, FiberCount,
                     RangeSet, fiber_count, fiber_table, num0_prime,
                     num0_prime_subfield, num_k, num_k_subfield, range_naive,
                     resolve_affine_shift, scaling_law_check)
from .verify import (SCOPE_DIRECT_SUMS, SCOPE_EXHAUSTIVE_2X2,
                     SCOPE_RANDOM_NXN, SCOPE_SCALAR_FIBERS, VERIFY_SCOPES,
                     run_direct_sums, run_exhaustive_2x2, run_random_nxn,
                     run_scalar_fibers, run_scope)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
