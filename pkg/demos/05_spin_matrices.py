"""The 2^floor((n-1)/2)-dimensional matrix representation of the covers.

Step 1: the standard tensor construction gives n-1 pairwise anticommuting
matrices over Q(zeta_8) squaring to +-identity.  Step 2: unit vectors in
their span meeting at 120 degrees represent the cover generators; the
central element lands on -identity.  The mixing coefficients involve
sqrt(k(k+1)/2), so step 2 works over Q(i, sqrt 2, sqrt 3, ...).
"""

from schur_ed import basic_spin_matrices, spin_representation, verify_spin_representation
from schur_ed.clifford import Cyclotomic8, _mat_eq, _mat_identity, _mat_mul, _mat_scale

n = 6
gammas = basic_spin_matrices(n, sign=1)
dim = len(gammas[0])
print(f"n = {n}: {len(gammas)} gamma matrices of size {dim} x {dim}")

ident = _mat_identity(dim)
print("gamma_1^2 == I:", _mat_eq(_mat_mul(gammas[0], gammas[0]), ident))
anti = _mat_eq(_mat_mul(gammas[0], gammas[1]),
               _mat_scale(Cyclotomic8(-1), _mat_mul(gammas[1], gammas[0])))
print("gamma_1 gamma_2 == -gamma_2 gamma_1:", anti)

# The group generators and the full relation check:
gens = spin_representation(n, "minus")
print(f"\ncover generators: {len(gens)} matrices of size {len(gens[0])}")
for relation, ok in verify_spin_representation(n, "minus"):
    print(f"  {relation:28s} {'ok' if ok else 'FAILED'}")
