"""lrckit: optimal (r, delta) locally repairable codes.

Exact GF(p^m) arithmetic, exact linear algebra, minimum-distance and
locality certification, every closed-form length bound for the
2*delta+1 <= d <= 3*delta regime, the projective plane PG(2, q), and the
pencil (sunflower) construction of optimal locality-2 codes.
"""

from .bounds import (bounds_report, global_parity_count,
                     incidence_length_bound, is_singleton_optimal,
                     johnson_constant_weight_bound, johnson_length_bounds,
                     max_group_count, r2_length_bound,
                     singleton_distance_bound, subspace_count_length_bound,
                     vector_count_length_bound)
from .code import (DEFAULT_BUDGET, LinearCode, LrcProfile, StandardFormParts,
                   assemble_standard_form, check_disjoint_locality,
                   distance_at_least, min_distance, min_distance_with_witness)
from .construct import (Certificate, GroupGeometry, certify_optimal,
                        family_to_code, mds_column_pair,
                        select_group_geometry, sunflower_code)
from .errors import (BudgetExceededError, ConditionNotSatisfiedError,
                     DegenerateCodeError, InfeasibleParametersError,
                     LocalityError, LrcError, SearchLimitExceededError)
from .geometry import (ConstantWeightCode, LineFamily, ProjectivePlane,
                       enumerate_lines, enumerate_max_families,
                       enumerate_points, extract_constant_weight,
                       incidence_matrix, intersect, intersection_counts,
                       is_sunflower, projective_plane,
                       satisfies_intersection_condition, search_max_family,
                       sunflower_family)
from .gf import GF, build_field, field_with_order
from .linalg import matmul, matvec, null_space, rank, rref, submatrix_nonsingular

__version__ = "0.1.0"
