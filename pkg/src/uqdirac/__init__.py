"""Exact computations with U_q(sl2), its Dirac operator and Dirac cohomology.

Scalars live in Q(q) (``FieldMode.generic()``) or in the cyclotomic field
Q(zeta_N) (``FieldMode.root_of_unity(N)``); every identity is checked by exact
equality.
"""

from .scalars import (CyclotomicNumber, FieldMode, GENERIC, LaurentPoly, RationalFunction,
                      parse_scalar, q_integer, specialize)
from .uq import (E, F, K, UqElement, UqKElement, antipode, casimir_k, casimir_q,
                 casimir_q_prime, central_generators, coproduct, counit, hc_gamma, hc_mu,
                 hc_sigma, hopf_checks, is_central, multiply, one, parse_uq)
from .clifford import (CliffordElement, SpinVector, alpha, alpha_h, alpha_k, c_e, c_f,
                       cl_multiply, s_minus, s_plus, spin_act)
from .tensoralg import (TensorElement, d_squared_rhs, delta, delta_k, dirac, verification_suite,
                        verify_d_squared, verify_k_invariance, verify_vogan, vogan_witness, zeta)
from .linalg import ExactMatrix, image, kernel, quotient_basis
from .repmod import (FiniteModule, GradedWindowModule, ModuleDescriptor, check_relations,
                     is_irreducible, make_T_abl, make_T_omega_k, make_verma, parse_descriptor)
from .cohomology import (DiracCohomologyReport, dirac_cohomology, infinitesimal_character_check,
                         tensor_action_matrix)
from .verification import Verification

__version__ = "0.1.0"
