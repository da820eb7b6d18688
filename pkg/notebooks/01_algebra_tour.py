"""A short tour of U_q(sl2) in PBW normal form.

Run with ``python3 notebooks/01_algebra_tour.py``.  Cells are separated by
``# %%`` markers, so the file also opens as a notebook in editors that
understand the percent format.
"""

# %% Generic q: elements live over Q(q)
from uqdirac import E, F, K, FieldMode, GENERIC, casimir_q, is_central, parse_uq
from uqdirac.uq import antipode, central_generators, coproduct, hc_gamma

print("F E      =", F() * E())
print("K E K^-1 =", K() * E() * K(GENERIC, -1))

# %% The Casimir is central; E is not
cas = casimir_q()
print("Cas      =", cas)
print("central?", is_central(cas), is_central(E()))

# %% Text syntax round-trips through the printer
x = parse_uq("2*E^2 K^-1 F + (q - q^-1) K")
print(x, "|", parse_uq(str(x)) == x)

# %% Hopf structure
print("Delta(E) =", coproduct(E()))
print("S(S(E))  =", antipode(antipode(E())))

# %% At a primitive cube root of unity the center grows
r3 = FieldMode.root_of_unity(3)
for name, z in central_generators(r3).items():
    print(f"{name:5s} central: {is_central(z)}")

# %% Harish-Chandra image of the Casimir
print("gamma(Cas) =", hc_gamma(cas))
