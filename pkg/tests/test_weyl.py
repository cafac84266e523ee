"""The matrix representation: gamma matrices, the isomorphism, the adjoint."""

import numpy as np
import pytest

from spinorlab.multivector import (
    BLADE_COUNT,
    Multivector,
    basis_blade,
    coefficient_distance,
    gamma,
    gamma5_chiral,
    hermitian_coefficients,
    random_multivector,
    scalar,
)
from spinorlab.weyl import (
    GAMMA0,
    blade_matrix,
    dirac_dagger_dual,
    from_matrix,
    multivector_inverse,
    to_matrix,
    weyl_gamma,
)

ETA = np.diag([1.0, -1.0, -1.0, -1.0])
SIGMA3 = np.diag([1.0, -1.0])


def test_weyl_gamma0_entries():
    expected = np.array(
        [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]], dtype=complex
    )
    assert np.array_equal(weyl_gamma(0), expected)


def test_weyl_gamma3_pauli_blocks():
    g3 = weyl_gamma(3)
    assert np.array_equal(g3[0:2, 2:4], SIGMA3)
    assert np.array_equal(g3[2:4, 0:2], -SIGMA3)
    assert np.array_equal(g3[0:2, 0:2], np.zeros((2, 2)))


def test_gamma0_squares_to_identity():
    assert np.array_equal(weyl_gamma(0) @ weyl_gamma(0), np.eye(4))


def test_invalid_index_rejected():
    with pytest.raises(ValueError):
        weyl_gamma(4)


def test_anticommutation_all_pairs_exact():
    for mu in range(4):
        for nu in range(4):
            anti = weyl_gamma(mu) @ weyl_gamma(nu) + weyl_gamma(nu) @ weyl_gamma(mu)
            assert np.array_equal(anti, 2 * ETA[mu, nu] * np.eye(4))


def test_to_matrix_identity_and_chiral():
    assert np.array_equal(to_matrix(scalar(1)), np.eye(4))
    assert np.array_equal(
        to_matrix(gamma5_chiral()), np.diag([-1.0, -1.0, 1.0, 1.0]).astype(complex)
    )


def test_to_matrix_homomorphism_on_blade():
    assert np.array_equal(
        to_matrix(gamma(0) * gamma(1)), weyl_gamma(0) @ weyl_gamma(1)
    )


def test_to_matrix_homomorphism_random_pairs():
    rng = np.random.default_rng(0)
    worst = 0.0
    for _ in range(1000):
        a = random_multivector(rng)
        b = random_multivector(rng)
        worst = max(worst, abs(to_matrix(a * b) - to_matrix(a) @ to_matrix(b)).max())
    assert worst < 1e-10


def test_blade_matrices_linearly_independent():
    # Gram matrix of trace pairings must be invertible (injectivity).
    gram = np.zeros((BLADE_COUNT, BLADE_COUNT), dtype=complex)
    for i in range(BLADE_COUNT):
        for j in range(BLADE_COUNT):
            gram[i, j] = np.trace(blade_matrix(i).conj().T @ blade_matrix(j))
    assert abs(np.linalg.det(gram)) > 1.0


def test_from_matrix_basics():
    assert from_matrix(np.eye(4)) == scalar(1)
    assert from_matrix(weyl_gamma(2)) == gamma(2)


def test_from_matrix_rejects_bad_shape():
    with pytest.raises(ValueError):
        from_matrix(np.eye(3))


def test_roundtrip_random():
    rng = np.random.default_rng(1)
    for _ in range(200):
        x = random_multivector(rng)
        assert coefficient_distance(from_matrix(to_matrix(x)), x) < 1e-12


def test_dirac_dagger_dual_fixes_gamma1():
    # Oracle: direct matrix computation of g0 gamma1^dag g0.
    g1 = weyl_gamma(1)
    expected = from_matrix(GAMMA0 @ g1.conj().T @ GAMMA0)
    assert expected == gamma(1)
    assert dirac_dagger_dual(gamma(1)) == gamma(1)


def test_dirac_dagger_dual_conjugates_scalars():
    assert dirac_dagger_dual(scalar(1j)) == scalar(-1j)


def test_dirac_dagger_dual_matches_algebraic_route():
    # Independent route: reversion composed with complex conjugation.
    rng = np.random.default_rng(2)
    for _ in range(200):
        x = random_multivector(rng)
        assert coefficient_distance(
            dirac_dagger_dual(x), x.hermitian_conjugate()
        ) < 1e-12


def test_dirac_dagger_dual_fixes_selfadjoint_basis_combinations():
    rng = np.random.default_rng(3)
    for _ in range(200):
        x = random_multivector(rng, hermitian=True)
        assert coefficient_distance(dirac_dagger_dual(x), x) < 1e-12


def test_fixed_point_equivalence():
    # fixed within 1e-12  <=>  self-adjoint coefficients real within 1e-12
    rng = np.random.default_rng(4)
    for _ in range(200):
        x = random_multivector(rng)
        fixed = coefficient_distance(dirac_dagger_dual(x), x) <= 1e-12
        max_imag = max(abs(c.imag) for c in hermitian_coefficients(x))
        assert fixed == (max_imag <= 1e-12)
    for _ in range(50):
        x = random_multivector(rng, hermitian=True)
        assert coefficient_distance(dirac_dagger_dual(x), x) <= 1e-12
        assert max(abs(c.imag) for c in hermitian_coefficients(x)) <= 1e-12


def test_multivector_inverse():
    rng = np.random.default_rng(5)
    x = random_multivector(rng)
    xi = multivector_inverse(x)
    assert coefficient_distance(x * xi, scalar(1)) < 1e-10
    with pytest.raises(ZeroDivisionError):
        multivector_inverse(scalar(1) + gamma(0))
