"""Second-gradient equivalent continuum constants for dilute two-phase composites.

A dilute suspension of inclusions in an elastic matrix is equivalent, at
first order in the volume fraction f, to a strain-gradient continuum whose
sixth-order constitutive tensor is assembled from the fourth-order stiffness
discrepancy of the composite and the radius of inertia of the RVE.  This
package provides the tensor algebra, the closed-form inclusion cases, the
definiteness and symmetry analysis, and the RVE geometry.
"""

from .admissibility import (SpectralVerdict, cubic_nd_check, iso_nd_check,
                            ortho_nd_check, pd_threshold, spectral_nd_tensor4,
                            spectral_pd_tensor6)
from .assembly import (CompositeCase, HigherOrderConstants, assemble_from_constants,
                       assemble_generic, cubic_constants,
                       cubic_higher_order_constants, invert_to_discrepancy,
                       iso_constants, ortho_constants)
from .cases import (CASE_NAMES, ORTHO_REFERENCE, ConfigError, DomainError,
                    classify_symmetry, reproduce_tables, run_case, run_sweep,
                    sweep_csv)
from .dilute import (CubicDiscrepancy, IsoDiscrepancy, OrthoAux,
                     POLYGON_CONSTANTS, PolygonConstants,
                     SQUARE_RANDOM_CONSTANTS, cylindrical_inclusion,
                     effective_local_tensor, ortho_circular_hole,
                     polygonal_hole, spherical_inclusion, square_hole_aligned,
                     square_hole_random)
from .moduli import (IsotropicModuli, OrthoDiscrepancyConstants,
                     OrthotropicModuli2D, Regime, bulk_modulus, cubic_tensor4,
                     from_poisson, iso_tensor4, ortho_tensor4, poisson_ratio)
from .rve import (Circle, ConvexPolygon, Cube, McMoment, RegularPolygon,
                  RveShape, Sphere, TruncatedOctahedron, mc_second_moment,
                  radius_of_inertia, rve_ratio)
from .tensors import (OrthogonalMap, Tensor4, Tensor6, chi_basis,
                      chi_matrix_of_tensor6, is_invariant_under,
                      min_eigenvalue_sym, rotate_tensor4, rotate_tensor6,
                      sym_matrix_basis, sym_matrix_of_tensor4)

__version__ = "0.1.0"
