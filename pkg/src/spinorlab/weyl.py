"""Weyl (chiral) representation: the isomorphism C ⊗ Cl(1,3) ≅ M4(C).

Block placement puts sigma^mu in the upper-right corner,
``gamma^mu = [[0, sigma^mu], [sigmabar^mu, 0]]`` with sigma^mu = (I, s)
and sigmabar^mu = (I, -s).  This is the placement for which the chiral
element i*e0123 maps to diag(-1, -1, 1, 1).
"""

from __future__ import annotations

import numpy as np

from .multivector import (
    BLADE_COUNT,
    DIMENSION,
    Multivector,
    gamma,
)

_Z2 = np.zeros((2, 2), dtype=complex)
_I2 = np.eye(2, dtype=complex)
_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def _build_gammas() -> tuple[np.ndarray, ...]:
    mats = [np.block([[_Z2, _I2], [_I2, _Z2]])]
    for s in _PAULI:
        mats.append(np.block([[_Z2, s], [-s, _Z2]]))
    return tuple(mats)


_GAMMAS = _build_gammas()


def weyl_gamma(mu: int) -> np.ndarray:
    """4x4 matrix of the generator gamma^mu, mu in 0..3."""
    if mu not in range(DIMENSION):
        raise ValueError(f"gamma index {mu} out of range")
    return _GAMMAS[mu].copy()


def _build_blade_matrices() -> np.ndarray:
    mats = np.zeros((BLADE_COUNT, 4, 4), dtype=complex)
    for mask in range(BLADE_COUNT):
        m = np.eye(4, dtype=complex)
        for mu in range(DIMENSION):
            if mask & (1 << mu):
                m = m @ _GAMMAS[mu]
        mats[mask] = m
    return mats


_BLADE_MATS = _build_blade_matrices()

# Every blade squares to +I or -I, so its inverse is itself up to that sign.
_BLADE_INV = np.zeros_like(_BLADE_MATS)
for _mask in range(BLADE_COUNT):
    _sq = (_BLADE_MATS[_mask] @ _BLADE_MATS[_mask])[0, 0].real
    _BLADE_INV[_mask] = _BLADE_MATS[_mask] / _sq

GAMMA0 = _GAMMAS[0]


def blade_matrix(mask: int) -> np.ndarray:
    return _BLADE_MATS[mask].copy()


def to_matrix(a: Multivector) -> np.ndarray:
    """Matrix image of a multivector; an algebra homomorphism."""
    m = np.zeros((4, 4), dtype=complex)
    for mask, c in a.items():
        m += complex(c) * _BLADE_MATS[mask]
    return m


def from_matrix(m: np.ndarray) -> Multivector:
    """Inverse of :func:`to_matrix`.

    The coefficient of blade G_I is trace(M @ G_I^{-1}) / 4; the 16 blades
    are trace-orthogonal so the extraction is exact up to rounding.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    coeffs = {}
    for mask in range(BLADE_COUNT):
        c = np.trace(m @ _BLADE_INV[mask]) / 4.0
        if c != 0:
            coeffs[mask] = complex(c)
    return Multivector(coeffs)


def dirac_dagger_dual(a: Multivector) -> Multivector:
    """The gamma0-adjoint a -> g0 M(a)^dagger g0 pulled back to the algebra.

    Coincides with ``a.hermitian_conjugate()``; its fixed points are the
    real combinations of the self-adjoint basis blades.
    """
    m = to_matrix(a)
    return from_matrix(GAMMA0 @ m.conj().T @ GAMMA0)


def multivector_inverse(a: Multivector, det_tol: float = 1e-12) -> Multivector:
    """Inverse under the geometric product, via the matrix representation."""
    m = to_matrix(a)
    if abs(np.linalg.det(m)) <= det_tol:
        raise ZeroDivisionError("multivector is not invertible")
    return from_matrix(np.linalg.inv(m))
