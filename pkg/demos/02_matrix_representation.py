"""The isomorphism with 4x4 complex matrices, in both directions.

The Weyl (chiral) representation sends each generator to a
block-antidiagonal matrix built from Pauli blocks; every multivector
then becomes a dense matrix, and the trace form inverts the map.
"""

import numpy as np

from spinorlab import (
    dirac_dagger_dual,
    from_matrix,
    gamma,
    gamma5_chiral,
    hermitian_blade,
    random_multivector,
    scalar,
    to_matrix,
    weyl_gamma,
)

np.set_printoptions(precision=3, suppress=True)

print("gamma^0 in the Weyl representation:")
print(weyl_gamma(0).real)
print("\ngamma^3 (Pauli blocks on the antidiagonal):")
print(weyl_gamma(3).real)

# The chiral element lands on the chirality projector's diagonal form.
print("\nmatrix of i*e0123:", np.diag(to_matrix(gamma5_chiral())).real)

# to_matrix is an algebra homomorphism and from_matrix inverts it.
rng = np.random.default_rng(0)
a = random_multivector(rng)
b = random_multivector(rng)
hom = abs(to_matrix(a * b) - to_matrix(a) @ to_matrix(b)).max()
print("\nhomomorphism residual on a random pair:", hom)
roundtrip = from_matrix(to_matrix(a))
print("roundtrip recovers the multivector:", all(
    abs(roundtrip.coefficient(m) - v) < 1e-12 for m, v in a.items()
))

# The gamma0-adjoint a -> g0 a^dag g0 fixes exactly the real span of the
# self-adjoint blades (plain blades on grades 0, 1, 4; i times the blades
# on grades 2 and 3).
fixed = random_multivector(rng, hermitian=True)
moved = scalar(1j) + gamma(1)
print("\nadjoint fixes a self-adjoint combination:",
      dirac_dagger_dual(fixed) == fixed)
print("adjoint moves i+gamma1 to:", dirac_dagger_dual(moved))
print("self-adjoint bivector blade:", hermitian_blade(0b0110))
