"""Exact computer algebra for factorization cubes over q-commuting rings.

Capabilities: exact scalar and polynomial arithmetic (rationals and prime
fields), matrices over the q-commuting ring, n-dimensional factorization
cubes with verification / trivial objects / twists / homotopy solving /
projectivity, total complexes and total cokernels over the finite quotient
algebra, the twisted 2x2 matrix ring with its module correspondence, and
layered two-term factorization extraction.  A JSON-file CLI wraps it all.
"""

from .scalars import Field, KMat, k_solve
from .qring import (Ring, QPoly, DiagonalAut, TypeData, canonical_type,
                    check_type_axioms, commutative_ring, quantum_ring,
                    qp_add, qp_apply_aut, qp_mul, qp_sub, quotient_normal_form)
from .polymat import PolyMatrix, pm_grade_infer, pm_mul, pm_sigma, pm_to_linear
from .cube import (Cube, CubeMorphism, HomotopyCertificate,
                   UnsupportedConfiguration, direct_sum, facet,
                   homotopy_solve, identity_morphism, mf0_membership,
                   projective_test, shift_1d, theta_cube, twist_cube,
                   verify_cube, verify_morphism)
from .homology import (QuotientModule, TotalComplex, check_exactness_truncated,
                       cok0, module_invariants, tcok, total_complex)
from .twisted_ring import (GammaContext, GammaElement, gamma_add, gamma_mul,
                           gamma_one, phi_psi_roundtrip, sigma_tilde)
from .hmf import HigherMF, check_hmf_conditions, extract_hmf, hmf_module_dim

__version__ = "0.1.0"
