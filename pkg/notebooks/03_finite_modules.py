"""Dirac cohomology of finite-dimensional modules.

The cohomology is Ker F/(Ker F ∩ Im E) ⊗ s_-1 plus Ker E/(Ker E ∩ Im F) ⊗ s_1,
computed weight space by weight space with exact elimination.
"""

# %% Generic q: T_(omega,k) always has a two-dimensional answer
from uqdirac import (FieldMode, dirac_cohomology, infinitesimal_character_check, is_irreducible,
                     make_T_abl, make_T_omega_k)

report = dirac_cohomology(make_T_omega_k(1, 4))
print(report.to_table())
print(infinitesimal_character_check(make_T_omega_k(-1, 3)).ok)

# %% Roots of unity: the p-dimensional family T_(a,b,lambda)
r5 = FieldMode.root_of_unity(5)
q = r5.q
for a, b, lam in [(1, 1, q), (0, 0, 2), (0, 1, 2), (1, 0, 2)]:
    m = make_T_abl(a, b, lam, r5)
    verdict, reason = is_irreducible(m)
    print(f"\n{m.descriptor}  irreducible={verdict} ({reason})")
    print(dirac_cohomology(m).to_table())

# %% Eigenvalue on the nilpotent family is lambda*q
m = make_T_abl(0, 0, q ** 4 + 2, r5)
for c in dirac_cohomology(m).sMinus + dirac_cohomology(m).sPlus:
    print(c.vector, c.eigenvalue)

# %% The reducible indecomposable example at q^3 = 1
print(dirac_cohomology(make_T_abl(0, 0, 1, FieldMode.root_of_unity(3))).to_table())
