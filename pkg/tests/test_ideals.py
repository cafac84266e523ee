"""Algebraic spinor spaces: idempotents, ideals, division rings, beta."""

import numpy as np
import pytest

from spinorlab.ideals import (
    Idempotent,
    InvolutionConditionError,
    apply_involution,
    beta_inner_product,
    canonical_idempotent,
    division_ring_identify,
    find_adjoint_element,
    ideal_basis,
    project_onto_ideal,
    ring_membership_residual,
    verify_involution_conditions,
)
from spinorlab.multivector import (
    Multivector,
    blade,
    coefficient_distance,
    gamma,
    random_multivector,
    scalar,
)
from spinorlab.weyl import to_matrix

FC = canonical_idempotent("complex")
FR = canonical_idempotent("real")
ONE = scalar(1)


def test_canonical_idempotents_are_idempotent():
    assert FC.value * FC.value == FC.value
    assert FR.value * FR.value == FR.value


def test_complex_idempotent_has_rank_one():
    assert np.linalg.matrix_rank(to_matrix(FC.value), tol=1e-9) == 1


def test_real_idempotent_expands_to_half_one_plus_gamma0():
    assert FR.value == 0.5 * (ONE + gamma(0))


def test_idempotency_survives_matrix_representation():
    for f in (FC, FR):
        m = to_matrix(f.value)
        assert abs(m @ m - m).max() < 1e-12


def test_idempotent_constructor_rejects_non_idempotent():
    with pytest.raises(ValueError):
        Idempotent(gamma(1))
    with pytest.raises(ValueError):
        canonical_idempotent("split")


def test_ideal_dimensions():
    assert ideal_basis(FC, "left", "complex").dimension == 4
    assert ideal_basis(FC, "right", "complex").dimension == 4
    assert ideal_basis(FR, "left", "real").dimension == 8


def test_ideal_generators_absorb_the_idempotent():
    for basis in (ideal_basis(FC, "left", "complex"), ideal_basis(FC, "right", "complex")):
        for g in basis.generators:
            prod = g * FC.value if basis.side == "left" else FC.value * g
            assert coefficient_distance(prod, g) < 1e-12


def test_left_ideal_closed_under_left_multiplication():
    rng = np.random.default_rng(0)
    basis = ideal_basis(FC, "left", "complex")
    for _ in range(25):
        a = random_multivector(rng)
        psi = random_multivector(rng) * FC.value
        assert project_onto_ideal(a * psi, basis) < 1e-9


def test_bad_side_or_scalars_rejected():
    with pytest.raises(ValueError):
        ideal_basis(FC, "middle")
    with pytest.raises(ValueError):
        ideal_basis(FC, "left", "rationals")


# -- division rings --------------------------------------------------------------


def test_complex_idempotent_ring_is_c():
    report = division_ring_identify(FC, "complex")
    assert report.name == "C"
    assert report.dimension == 1
    assert report.primitive


def test_real_idempotent_ring_is_h():
    # Oracle on top of dimension: the pure units square to -f and
    # anticommute, the signature of quaternions.
    report = division_ring_identify(FR, "real")
    assert report.name == "H"
    assert report.dimension == 4
    assert report.primitive and report.profile_ok


def test_unit_idempotent_is_not_primitive():
    report = division_ring_identify(Idempotent(ONE), "real")
    assert report.name == "not_division_ring"
    assert report.dimension == 16
    assert not report.primitive


# -- involution conditions --------------------------------------------------------


def test_involution_conditions_examples():
    assert verify_involution_conditions("reversion", ONE, FR)
    assert not verify_involution_conditions("grade", ONE, FR)
    assert verify_involution_conditions("reversion", gamma(0), FR)


def test_involution_conditions_need_invertible_h():
    with pytest.raises(ZeroDivisionError):
        verify_involution_conditions("reversion", ONE + gamma(0), FR)


def test_find_adjoint_element_for_grade_involution():
    h = find_adjoint_element("grade", FR)
    assert h is not None
    assert verify_involution_conditions("grade", h, FR)


def test_find_adjoint_element_for_dagger_on_complex_idempotent():
    h = find_adjoint_element("dirac_dagger", FC)
    assert h is not None
    assert verify_involution_conditions("dirac_dagger", h, FC)


def test_find_adjoint_element_reports_failure_as_none():
    # No real reversion-symmetric h conjugates the complex canonical f;
    # the search must say so rather than fabricate one.
    assert find_adjoint_element("reversion", FC) is None


def test_apply_involution_dagger_is_reversion_plus_conjugation():
    rng = np.random.default_rng(1)
    x = random_multivector(rng)
    assert apply_involution("dirac_dagger", x) == x.reversion().complex_conjugate()


# -- beta ----------------------------------------------------------------------------


def test_beta_on_the_idempotent_itself():
    # f^3 = f, so beta(f, f) with alpha = reversion and h = 1 is f again.
    b = beta_inner_product(FR.value, FR.value, "reversion", ONE, FR)
    assert coefficient_distance(b, FR.value) < 1e-14


def test_beta_zero_argument():
    b = beta_inner_product(Multivector(), FR.value, "reversion", ONE, FR)
    assert b == Multivector()


def test_beta_lands_in_the_scalar_ring():
    rng = np.random.default_rng(2)
    for _ in range(50):
        psi = random_multivector(rng, real=True) * FR.value
        phi = random_multivector(rng, real=True) * FR.value
        b = beta_inner_product(psi, phi, "reversion", ONE, FR)
        assert ring_membership_residual(b, FR) < 1e-10


def test_beta_is_additive_in_both_arguments():
    rng = np.random.default_rng(3)
    psi1 = random_multivector(rng) * FR.value
    psi2 = random_multivector(rng) * FR.value
    phi1 = random_multivector(rng) * FR.value
    phi2 = random_multivector(rng) * FR.value
    lhs = beta_inner_product(psi1 + psi2, phi1, "reversion", ONE, FR)
    rhs = beta_inner_product(psi1, phi1, "reversion", ONE, FR) + beta_inner_product(
        psi2, phi1, "reversion", ONE, FR
    )
    assert coefficient_distance(lhs, rhs) < 1e-12
    lhs = beta_inner_product(psi1, phi1 + phi2, "reversion", ONE, FR)
    rhs = beta_inner_product(psi1, phi1, "reversion", ONE, FR) + beta_inner_product(
        psi1, phi2, "reversion", ONE, FR
    )
    assert coefficient_distance(lhs, rhs) < 1e-12


def test_beta_right_module_linearity():
    # Oracle: multiply phi by a ring scalar s in f Cl f on the right.
    rng = np.random.default_rng(4)
    psi = random_multivector(rng) * FR.value
    phi = random_multivector(rng) * FR.value
    s = FR.value * random_multivector(rng) * FR.value
    lhs = beta_inner_product(psi, phi * s, "reversion", ONE, FR)
    rhs = beta_inner_product(psi, phi, "reversion", ONE, FR) * s
    assert coefficient_distance(lhs, rhs) < 1e-10


def test_beta_with_gamma0_reduces_to_matrix_adjoint_product():
    # In the matrix picture, beta with alpha = h^-1 (.)^dag h and h = g0
    # is psi^dag h phi f.
    rng = np.random.default_rng(5)
    g0 = gamma(0)
    for _ in range(25):
        psi = random_multivector(rng) * FR.value
        phi = random_multivector(rng) * FR.value
        b = beta_inner_product(psi, phi, "dirac_dagger", g0, FR)
        matrix_side = (
            to_matrix(psi).conj().T
            @ to_matrix(g0)
            @ to_matrix(phi)
            @ to_matrix(FR.value)
        )
        assert abs(to_matrix(b) - matrix_side).max() < 1e-10


def test_beta_rejects_incompatible_involution():
    with pytest.raises(InvolutionConditionError) as err:
        beta_inner_product(FR.value, FR.value, "grade", ONE, FR)
    assert "alpha(f)" in str(err.value)


def test_beta_rejects_singular_h():
    with pytest.raises(InvolutionConditionError) as err:
        beta_inner_product(FR.value, FR.value, "reversion", ONE + gamma(0), FR)
    assert "invertible" in str(err.value)


def test_beta_rejects_asymmetric_h():
    # h = e01 satisfies the conjugation condition for the grade involution
    # but grade(e01) = e01 holds, so use reversion where rev(e01) = -e01.
    h = blade((0, 1))
    with pytest.raises(InvolutionConditionError) as err:
        beta_inner_product(FR.value, FR.value, "reversion", h, FR)
    assert "alpha(h)" in str(err.value) or "alpha(f)" in str(err.value)
