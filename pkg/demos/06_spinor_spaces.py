"""Algebraic spinor spaces: ideals over idempotents and the beta product.

A primitive idempotent f carves out a minimal left ideal Cl·f (the spinor
space); f·Cl·f is its ring of scalars, and a compatible involution alpha
with element h defines the inner product beta(psi, phi) = h alpha(psi) phi f.
"""

import numpy as np

from spinorlab import (
    Idempotent,
    beta_inner_product,
    canonical_idempotent,
    division_ring_identify,
    find_adjoint_element,
    gamma,
    ideal_basis,
    project_onto_ideal,
    random_multivector,
    ring_membership_residual,
    scalar,
    to_matrix,
    verify_involution_conditions,
)

fc = canonical_idempotent("complex")
fr = canonical_idempotent("real")
print("complex idempotent:", fc.value)
print("is a rank-1 projector:",
      np.linalg.matrix_rank(to_matrix(fc.value), tol=1e-9) == 1)
print("real idempotent:   ", fr.value)

# Ideal dimensions: 4 over C for the rank-1 projector, 8 over R for the
# real idempotent.
print("\ndim_C Cl*fc =", ideal_basis(fc, "left", "complex").dimension)
print("dim_C fc*Cl =", ideal_basis(fc, "right", "complex").dimension)
print("dim_R Cl*fr =", ideal_basis(fr, "left", "real").dimension)

# Left multiplication keeps you inside the ideal.
rng = np.random.default_rng(0)
basis = ideal_basis(fc, "left", "complex")
a = random_multivector(rng)
psi = random_multivector(rng) * fc.value
print("residual of a*psi outside the ideal:", project_onto_ideal(a * psi, basis))

# The spinor scalars: C for the complex idempotent, quaternions for the
# real one, and the unit element is not primitive at all.
print("\nring of fc over C:", division_ring_identify(fc, "complex").name)
ring = division_ring_identify(fr, "real")
print("ring of fr over R:", ring.name, "(dimension", ring.dimension, ")")
print("f = 1 over R:     ", division_ring_identify(Idempotent(scalar(1)), "real").name)

# Adjoint involutions: reversion pairs with h = 1 or h = gamma0 for the
# real idempotent; the grade involution needs a nontrivial h, found by a
# linear search.
one = scalar(1)
print("\n(reversion, h=1) compatible:", verify_involution_conditions("reversion", one, fr))
print("(grade, h=1) compatible:    ", verify_involution_conditions("grade", one, fr))
h = find_adjoint_element("grade", fr)
print("search found h for grade:   ", h)

# beta lands in the scalar ring and reduces to psi^dag h phi f in the
# matrix picture for the gamma0-adjoint.
psi = random_multivector(rng) * fr.value
phi = random_multivector(rng) * fr.value
b = beta_inner_product(psi, phi, "dirac_dagger", gamma(0), fr)
print("\nbeta value:", b)
print("distance from the scalar ring:", ring_membership_residual(b, fr))
matrix_side = (
    to_matrix(psi).conj().T @ to_matrix(gamma(0)) @ to_matrix(phi) @ to_matrix(fr.value)
)
print("matches psi^dag h phi f in matrices:",
      abs(to_matrix(b) - matrix_side).max())
