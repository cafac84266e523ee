"""The quaternionic picture: Cl(1,3) as 2x2 quaternionic matrices.

Quaternions embed in M2(C), quaternionic 2x2 matrices embed in M4(C),
and real multivectors have a faithful quaternionic image.  A single
change of basis relates that image to the Weyl representation.
"""

import numpy as np

from spinorlab import (
    Q_I,
    Q_J,
    Q_ONE,
    QuatMatrix2,
    Quaternion,
    gamma,
    gl2h_embed,
    intertwiner,
    is_quaternionic_pattern,
    mv_to_m2h,
    pattern_dof,
    quat_to_m2c,
    quaternionic_gamma,
    random_multivector,
    scalar,
    to_matrix,
)

np.set_printoptions(precision=3, suppress=True)

# The scalar embedding H -> M2(C).
print("i ->"); print(quat_to_m2c(Q_I))
print("j ->"); print(quat_to_m2c(Q_J))
q1 = Quaternion(0.5, -1.0, 2.0, 0.25)
q2 = Quaternion(1.5, 0.5, -0.5, 1.0)
hom = abs(quat_to_m2c(q1 * q2) - quat_to_m2c(q1) @ quat_to_m2c(q2)).max()
print("multiplicativity residual:", hom)

# Blockwise, GL(2,H) lands inside GL(4,C) with a conjugate-pair pattern.
a = QuatMatrix2(q1, q2, Q_ONE, Q_I)
embedded = gl2h_embed(a)
print("\nembedded quaternionic matrix:")
print(embedded)
print("matches the conjugate-pair pattern:", bool(is_quaternionic_pattern(embedded)))
print("pattern degrees of freedom:", pattern_dof())

# Real multivectors map to M2(H) through generator images
# g0 -> diag(1,-1), gk -> offdiag(i/j/k); the relations hold exactly.
print("\nquaternionic gamma0:", quaternionic_gamma(0).entries())
x = random_multivector(np.random.default_rng(0), real=True)
y = random_multivector(np.random.default_rng(1), real=True)
lhs = mv_to_m2h(x * y)
rhs = mv_to_m2h(x) * mv_to_m2h(y)
worst = max(
    max(abs(p - q) for p, q in zip(qa.as_list(), qb.as_list()))
    for qa, qb in zip(lhs.entries(), rhs.entries())
)
print("quaternionic image is multiplicative, residual:", worst)

# Invertibility transports across the embedding; zero divisors stay singular.
zero_divisor = scalar(1) + gamma(0)
print("\ndet of (1 + gamma0) in M4(C):",
      abs(np.linalg.det(to_matrix(zero_divisor))))
print("det of its quaternionic image:",
      abs(np.linalg.det(gl2h_embed(mv_to_m2h(zero_divisor)))))

# One fixed change of basis aligns the two 4x4 pictures.
s = intertwiner()
residual = abs(
    s @ gl2h_embed(mv_to_m2h(x)) @ np.linalg.inv(s) - to_matrix(x)
).max()
print("\nintertwiner residual on a random real multivector:", residual)
