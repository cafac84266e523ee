"""Algebraic spinor machinery: idempotents, minimal ideals, division rings,
and the beta inner product with its adjoint-involution conditions.

A spinor space here is a left ideal Cl·f over a primitive idempotent f; the
ring of spinor scalars is f·Cl·f.  The beta product
``beta(psi, phi) = h alpha(psi) phi f`` lands in that ring whenever the
adjoint involution alpha and the element h satisfy alpha(f) = h^-1 f h and
alpha(h) = h.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .multivector import (
    BLADE_COUNT,
    Multivector,
    basis_blade,
    blade,
    coefficient_distance,
    gamma,
    involution,
    scalar,
)
from .weyl import multivector_inverse, to_matrix

RANK_TOL = 1e-9

BETA_INVOLUTION_KINDS = (
    "grade",
    "reversion",
    "clifford_conj",
    "complex_conj",
    "dirac_dagger",
)


class InvolutionConditionError(ValueError):
    """The (alpha, h, f) triple fails an adjoint-involution condition."""


def apply_involution(kind: str, a: Multivector) -> Multivector:
    """The four canonical involutions plus the gamma0-adjoint composite."""
    if kind == "dirac_dagger":
        return a.hermitian_conjugate()
    return involution(kind, a)


@dataclass(frozen=True)
class Idempotent:
    """Multivector f with f*f = f (within 1e-12 on coefficients)."""

    value: Multivector

    def __post_init__(self):
        residual = coefficient_distance(self.value * self.value, self.value)
        if residual > 1e-12:
            raise ValueError(f"not idempotent: residual {residual:.3e}")


def canonical_idempotent(mode: str = "complex") -> Idempotent:
    """Reference idempotents.

    complex: f = 1/4 (1 + g0)(1 + i e12), a rank-1 projector in the Weyl
    representation (primitive over C).  real: f = 1/2 (1 + g0), primitive
    over the reals with quaternionic spinor scalars.
    """
    if mode == "complex":
        f = 0.25 * ((scalar(1) + gamma(0)) * (scalar(1) + 1j * blade((1, 2))))
    elif mode == "real":
        f = 0.5 * (scalar(1) + gamma(0))
    else:
        raise ValueError(f"unknown idempotent mode {mode!r}")
    return Idempotent(f)


# -- coefficient-space linear algebra ------------------------------------------


def _mv_to_vec(a: Multivector) -> np.ndarray:
    return np.array([complex(a.coefficient(m)) for m in range(BLADE_COUNT)])


def _real_vec(v: np.ndarray) -> np.ndarray:
    return np.concatenate([v.real, v.imag])


def _independent_subset(vectors, scalars: str):
    """Greedy basis of a vector list over C or over R, by rank growth."""
    basis_rows: list[np.ndarray] = []
    chosen: list[int] = []
    for i, v in enumerate(vectors):
        row = v if scalars == "complex" else _real_vec(v)
        trial = np.array(basis_rows + [row])
        if np.linalg.matrix_rank(trial, tol=RANK_TOL) > len(basis_rows):
            basis_rows.append(row)
            chosen.append(i)
    return chosen


@dataclass(frozen=True)
class IdealBasis:
    """Independent generators of Cl·f (or f·Cl) over the chosen scalars."""

    generators: list
    side: str
    scalars: str

    @property
    def dimension(self) -> int:
        return len(self.generators)


def ideal_basis(f: Idempotent, side: str = "left", scalars: str = "complex") -> IdealBasis:
    """Maximal independent set among the 16 products blade·f (or f·blade)."""
    if side not in ("left", "right"):
        raise ValueError(f"unknown side {side!r}")
    if scalars not in ("complex", "real"):
        raise ValueError(f"unknown scalar field {scalars!r}")
    products = []
    for mask in range(BLADE_COUNT):
        b = basis_blade(mask)
        products.append(b * f.value if side == "left" else f.value * b)
    chosen = _independent_subset([_mv_to_vec(p) for p in products], scalars)
    return IdealBasis([products[i] for i in chosen], side, scalars)


def project_onto_ideal(a: Multivector, basis: IdealBasis) -> float:
    """Residual of a outside the span of the ideal basis (least squares)."""
    cols = [_mv_to_vec(g) for g in basis.generators]
    target = _mv_to_vec(a)
    if basis.scalars == "real":
        cols = [_real_vec(c) for c in cols]
        target = _real_vec(target)
    mat = np.column_stack(cols)
    coeffs, *_ = np.linalg.lstsq(mat, target, rcond=None)
    return float(abs(mat @ coeffs - target).max())


# -- division rings ---------------------------------------------------------------


@dataclass(frozen=True)
class RingReport:
    """Identification of the spinor scalar ring f·Cl·f."""

    name: str
    dimension: int
    primitive: bool
    profile_ok: bool
    basis: list


def division_ring_identify(f: Idempotent, scalars: str = "real") -> RingReport:
    """Identify f·Cl·f over the chosen scalars by dimension and unit profile.

    Dimension 1 means the scalars themselves; over the reals dimension 2
    with a negative-square unit is C and dimension 4 with anticommuting
    negative-square units is H.  Anything bigger is not a division ring and
    marks f as non-primitive for that scalar field.
    """
    if scalars not in ("complex", "real"):
        raise ValueError(f"unknown scalar field {scalars!r}")
    products = [f.value * basis_blade(mask) * f.value for mask in range(BLADE_COUNT)]
    chosen = _independent_subset([_mv_to_vec(p) for p in products], scalars)
    basis = [products[i] for i in chosen]
    dim = len(basis)

    if scalars == "complex":
        if dim == 1:
            return RingReport("C", 1, True, True, basis)
        return RingReport("not_division_ring", dim, False, False, basis)

    if dim == 1:
        return RingReport("R", 1, True, True, basis)
    if dim in (2, 4):
        units, profile_ok = _pure_units(f.value, basis)
        if dim == 2:
            return RingReport("C", 2, True, profile_ok, basis)
        # quaternions additionally need a noncommuting pair
        noncomm = any(
            coefficient_distance(u * v, v * u) > 1e-9
            for i, u in enumerate(units)
            for v in units[i + 1:]
        )
        return RingReport("H", 4, True, profile_ok and noncomm, basis)
    return RingReport("not_division_ring", dim, False, False, basis)


def _pure_units(f: Multivector, basis: list) -> tuple[list, bool]:
    """Split off the ring-scalar part of each basis element and normalize.

    The ring-scalar component of w in f·Cl·f is trace(W)/trace(F) in the
    matrix picture; what remains must square to a negative multiple of f if
    the ring is a division ring, and distinct units must anticommute up to
    a scalar multiple of f.
    """
    f_trace = complex(np.trace(to_matrix(f)))
    units = []
    ok = True
    for w in basis:
        lam = complex(np.trace(to_matrix(w))) / f_trace
        pure = w - lam * f
        if pure.max_abs() <= 1e-9:
            continue
        sq = pure * pure
        coeff = complex(np.trace(to_matrix(sq))) / f_trace
        if coefficient_distance(sq, coeff * f) > 1e-9 or coeff.real >= 0:
            ok = False
            continue
        units.append((1.0 / np.sqrt(-coeff.real)) * pure)
    for i, u in enumerate(units):
        for v in units[i + 1:]:
            anti = u * v + v * u
            lam = complex(np.trace(to_matrix(anti))) / f_trace
            if coefficient_distance(anti, lam * f) > 1e-8:
                ok = False
    return units, ok


# -- adjoint involutions and beta ---------------------------------------------------


def verify_involution_conditions(
    kind: str, h: Multivector, f: Idempotent, tol: float = 1e-10
) -> bool:
    """Check alpha(f) = h^-1 f h and alpha(h) = h; h must be invertible."""
    hinv = multivector_inverse(h)  # raises ZeroDivisionError if singular
    cond1 = coefficient_distance(apply_involution(kind, f.value), hinv * f.value * h)
    cond2 = coefficient_distance(apply_involution(kind, h), h)
    return cond1 <= tol and cond2 <= tol


def beta_inner_product(
    psi: Multivector,
    phi: Multivector,
    kind: str,
    h: Multivector,
    f: Idempotent,
    tol: float = 1e-10,
) -> Multivector:
    """beta(psi, phi) = h alpha(psi) phi f, valued in the ring f·Cl·f.

    Raises :class:`InvolutionConditionError` when the (alpha, h, f) triple
    fails its compatibility conditions, naming the violated one.
    """
    try:
        hinv = multivector_inverse(h)
    except ZeroDivisionError as exc:
        raise InvolutionConditionError("h is not invertible") from exc
    r1 = coefficient_distance(apply_involution(kind, f.value), hinv * f.value * h)
    if r1 > tol:
        raise InvolutionConditionError(
            f"alpha(f) != h^-1 f h (residual {r1:.3e})"
        )
    r2 = coefficient_distance(apply_involution(kind, h), h)
    if r2 > tol:
        raise InvolutionConditionError(f"alpha(h) != h (residual {r2:.3e})")
    return h * apply_involution(kind, psi) * phi * f.value


def ring_membership_residual(b: Multivector, f: Idempotent) -> float:
    """Distance of b from f·Cl·f, measured as |b - f b f|."""
    return coefficient_distance(b, f.value * b * f.value)


def find_adjoint_element(
    kind: str, f: Idempotent, tries: int = 32, seed: int = 0
) -> Multivector | None:
    """Search the real 16-dimensional span for h with alpha(f) = h^-1 f h,
    alpha(h) = h, and h invertible.

    Both conditions are linear in h (the first in the equivalent form
    alpha(f) h = h f), so candidates come from a null space; the first
    invertible combination is returned, or None when the search fails.
    The returned h is one solution among many, not a canonical choice.
    """
    alpha_f = apply_involution(kind, f.value)
    rows = []
    for mask in range(BLADE_COUNT):
        e = basis_blade(mask)
        cond1 = alpha_f * e - e * f.value
        cond2 = apply_involution(kind, e) - e
        rows.append(np.concatenate([_real_vec(_mv_to_vec(cond1)),
                                    _real_vec(_mv_to_vec(cond2))]))
    system = np.array(rows).T  # columns indexed by blade, rows by condition
    null = scipy.linalg.null_space(system, rcond=1e-10)
    if null.shape[1] == 0:
        return None
    rng = np.random.default_rng(seed)
    candidates = [null[:, i] for i in range(null.shape[1])]
    candidates += [null @ rng.uniform(-1, 1, null.shape[1]) for _ in range(tries)]
    for coeffs in candidates:
        h = Multivector({m: c for m, c in enumerate(coeffs) if abs(c) > 1e-12})
        if h.is_zero(1e-9):
            continue
        try:
            if verify_involution_conditions(kind, h, f):
                return h
        except ZeroDivisionError:
            continue
    return None
