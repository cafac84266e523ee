"""A first walk through the spacetime algebra Cl(1,3).

Multivectors are dictionaries of blade coefficients; the geometric product
handles signs and the metric automatically.  Run this file directly.
"""

from fractions import Fraction

from spinorlab import (
    Multivector,
    blade,
    gamma,
    gamma5_chiral,
    grade_projection,
    involution,
    pseudoscalar,
    scalar,
)

# Generators square to the metric signs (+1, -1, -1, -1).
for mu in range(4):
    print(f"gamma{mu}^2 =", gamma(mu) * gamma(mu))

# Orthogonal generators anticommute, so their product is a bivector blade.
print("\ngamma0 * gamma1 =", gamma(0) * gamma(1))
print("gamma1 * gamma0 =", gamma(1) * gamma(0))

# The algebra is happy with exact rational coefficients.
x = scalar(Fraction(1, 2)) + Fraction(3, 4) * blade((0, 1))
print("\nexact element:", x)
print("its square:   ", x * x)

# Grade structure: project out each piece of a mixed element.
mixed = scalar(2) + gamma(1) + 5 * blade((0, 3)) + pseudoscalar()
for k in range(5):
    part = grade_projection(mixed, k)
    if part != Multivector():
        print(f"grade {k} part of mixed:", part)

# The three canonical involutions flip signs grade by grade.
b = blade((0, 1))
print("\nreversion(e01)      =", involution("reversion", b))
print("grade_involution(e2) =", involution("grade", gamma(2)))
print("clifford_conj(e0123) =", involution("clifford_conj", pseudoscalar()))

# Two square roots of +-1 at the top grade: the volume element squares to
# -1, the chiral element i*e0123 squares to +1.
print("\npseudoscalar^2 =", pseudoscalar() * pseudoscalar())
print("chiral^2       =", gamma5_chiral() * gamma5_chiral())
