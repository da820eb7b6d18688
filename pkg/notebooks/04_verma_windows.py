"""Verma modules on a finite weight window.

At a cube root of unity the q-integers [3], [6], ... vanish and the Verma
module V_2 picks up infinitely many cohomology classes.  The window makes the
pattern visible; the report states which indices are certified.
"""

# %%
import numpy as np

from uqdirac import FieldMode, dirac_cohomology, make_verma
from uqdirac.cohomology import exact_classes

r3 = FieldMode.root_of_unity(3)
for lam in (0, 1, 2):
    print(dirac_cohomology(make_verma(lam, 20, r3)).to_table(), "\n")

# %% Which window indices carry a class?  (1 = s_1, -1 = s_-1)
v2 = make_verma(2, 20, r3)
pattern = np.zeros(v2.window + 1, dtype=int)
for c in exact_classes(v2):
    pattern[c.position] = 1 if c.spin else -1
print(pattern)

# %% Generic q: only the highest weight vector survives
for lam in (-2, 5):
    print(dirac_cohomology(make_verma(lam, 20)).to_table(), "\n")
