"""Group machinery for dual mappings and the Clifford group hierarchy.

Covers closure checking for sets of Omega operators, finite group
generation with Cayley tables, orbit partitions of dual spinors, and
membership tests for the Lipschitz / Pin / Spin chain.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .duals import DualSpinor, KinematicPoint, validate_omega
from .multivector import Multivector, gamma
from .weyl import from_matrix, multivector_inverse, to_matrix

GENERATION_CAP = 1024
DEDUP_TOL = 1e-8

_MINKOWSKI = np.diag([1.0, -1.0, -1.0, -1.0])


class CapExceeded(RuntimeError):
    """Closure passed the element cap; evidence the group is not finite."""

    def __init__(self, cap: int, count: int):
        super().__init__(f"group generation exceeded cap {cap} ({count} elements found)")
        self.cap = cap
        self.count = count


# -- closure of Omega sets -----------------------------------------------------


@dataclass(frozen=True)
class ClosureReport:
    """Pairwise commutation scan result; truthy iff every pair commutes."""

    commutes: bool
    worst_norm: float
    worst_pair: tuple[int, int] | None
    tolerance: float

    def __bool__(self) -> bool:
        return self.commutes


def check_abelian_closure(
    candidates, k: KinematicPoint, tol: float = 1e-9
) -> ClosureReport:
    """Decide whether a set of valid Omega operators can close into a group.

    Closure holds iff every pair commutes; equivalently every product again
    satisfies the Omega validity condition.  Invalid candidates are rejected
    before the scan.
    """
    mats = [np.asarray(m, dtype=complex) for m in candidates]
    for i, m in enumerate(mats):
        check = validate_omega(m, k)
        if not check:
            raise ValueError(
                f"candidate {i} is not a valid Omega "
                f"(residual {check.residual:.3e}, |det| {abs(check.det):.3e})"
            )
    worst = 0.0
    worst_pair = None
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            norm = float(abs(mats[i] @ mats[j] - mats[j] @ mats[i]).max())
            if norm > worst:
                worst, worst_pair = norm, (i, j)
    return ClosureReport(worst <= tol, worst, worst_pair, tol)


# -- finite matrix groups --------------------------------------------------------


@dataclass
class FiniteMatrixGroup:
    """Deduplicated element list with its Cayley table (index-valued)."""

    elements: list
    labels: list
    table: np.ndarray

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity_index(self) -> int:
        for i in range(self.order):
            if all(self.table[i, j] == j and self.table[j, i] == j for j in range(self.order)):
                return i
        raise ValueError("group has no identity element")

    def inverse_index(self, i: int) -> int:
        e = self.identity_index
        for j in range(self.order):
            if self.table[i, j] == e:
                return j
        raise ValueError(f"element {i} has no inverse")

    def element_order(self, i: int) -> int:
        e = self.identity_index
        j, n = i, 1
        while j != e:
            j = self.table[j, i]
            n += 1
            if n > self.order:
                raise ValueError("element order exceeds group order; table is broken")
        return n

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow([""] + list(self.labels))
        for i in range(self.order):
            writer.writerow([self.labels[i]] + [self.labels[j] for j in self.table[i]])
        return out.getvalue()

    def to_json_obj(self) -> dict:
        return {
            "labels": list(self.labels),
            "table": [[int(j) for j in row] for row in self.table],
        }


def _find_element(elements, m, tol: float) -> int:
    for i, e in enumerate(elements):
        if abs(e - m).max() <= tol:
            return i
    return -1


def _build_table(elements, tol: float) -> np.ndarray:
    n = len(elements)
    table = np.zeros((n, n), dtype=int)
    for i in range(n):
        for j in range(n):
            idx = _find_element(elements, elements[i] @ elements[j], tol)
            if idx < 0:
                raise ValueError("element set is not closed under products")
            table[i, j] = idx
    return table


def group_from_elements(elements, labels=None, tol: float = 1e-9) -> FiniteMatrixGroup:
    """Build a group from an explicit closed element list, verifying closure."""
    mats = [np.asarray(m, dtype=complex) for m in elements]
    if labels is None:
        labels = [f"g{i}" for i in range(len(mats))]
    group = FiniteMatrixGroup(mats, list(labels), _build_table(mats, tol))
    group.identity_index  # raises if missing
    for i in range(group.order):
        group.inverse_index(i)
    return group


def generate_group(
    generators,
    cap: int = GENERATION_CAP,
    labels=None,
    tol: float = DEDUP_TOL,
) -> FiniteMatrixGroup:
    """Close a generator set under products and inverses.

    Deduplication matches entries rounded at ``tol`` resolution.  Raises
    :class:`CapExceeded` once more than ``cap`` distinct elements appear,
    which is the cheap certificate that the generated group is not small.
    """
    gens = [np.asarray(m, dtype=complex) for m in generators]
    for i, g in enumerate(gens):
        if abs(np.linalg.det(g)) <= 1e-12:
            raise ValueError(f"generator {i} is not invertible")
    if labels is None:
        labels = [f"g{i}" for i in range(len(gens))]

    elements = [np.eye(4, dtype=complex)]
    names = ["I"]
    keys = {_round_key(elements[0], tol)}

    def add(m, name) -> bool:
        key = _round_key(m, tol)
        if key in keys or _find_element(elements, m, 10 * tol) >= 0:
            return False
        elements.append(m)
        names.append(name)
        keys.add(key)
        if len(elements) > cap:
            raise CapExceeded(cap, len(elements))
        return True

    for g, name in zip(gens, labels):
        add(g, name)
        add(np.linalg.inv(g), f"{name}^-1")

    changed = True
    while changed:
        changed = False
        n = len(elements)
        for i in range(n):
            for j in range(n):
                prod = elements[i] @ elements[j]
                if add(prod, _compose_label(names[i], names[j])):
                    changed = True
        for i in range(len(elements)):
            if add(np.linalg.inv(elements[i]), f"({names[i]})^-1"):
                changed = True

    return FiniteMatrixGroup(elements, names, _build_table(elements, 10 * tol))


def _round_key(m: np.ndarray, tol: float) -> bytes:
    scaled = np.round(np.concatenate([m.real.ravel(), m.imag.ravel()]) / tol)
    # normalize -0.0 so equal values share a key
    scaled = scaled + 0.0
    return scaled.tobytes()


def _compose_label(a: str, b: str) -> str:
    if a == "I":
        return b
    if b == "I":
        return a
    return f"{a}·{b}"


@dataclass(frozen=True)
class GroupIdentification:
    """Cayley table plus a small-group name (orders <= 4 resolved exactly)."""

    name: str
    order: int
    element_orders: tuple
    labels: tuple
    table: np.ndarray


def identify_group(group: FiniteMatrixGroup) -> GroupIdentification:
    """Name the group: trivial/Z2/Z3 by order, K4 vs Z4 at order 4, and an
    element-order profile beyond that."""
    n = group.order
    orders = tuple(sorted(group.element_order(i) for i in range(n)))
    if n == 1:
        name = "trivial"
    elif n == 2:
        name = "Z2"
    elif n == 3:
        name = "Z3"
    elif n == 4:
        # Klein group iff every non-identity element is its own inverse.
        name = "K4" if all(o <= 2 for o in orders) else "Z4"
    else:
        name = f"order-{n} profile {list(orders)}"
    return GroupIdentification(name, n, orders, tuple(group.labels), group.table.copy())


# -- orbits of dual spinors --------------------------------------------------------


@dataclass(frozen=True)
class OrbitPartition:
    """Partition of supplied duals into orbit classes."""

    classes: list
    representatives: list
    orbit_sizes: list

    def to_json_obj(self) -> dict:
        return {str(i): cls for i, cls in enumerate(self.classes)}


def orbit_partition(
    group: FiniteMatrixGroup, duals, tol: float = 1e-9, action: str = "right"
) -> OrbitPartition:
    """Group the supplied dual spinors into orbit classes.

    Duals are row covectors, so the default action composes on the right,
    ``psi -> psi @ g``; ``action="transpose"`` applies the transposed
    convention ``psi -> psi @ g.T`` instead.  ``orbit_sizes`` counts the
    distinct images of each representative, which divides the group order.
    """
    if action not in ("right", "transpose"):
        raise ValueError(f"unknown action {action!r}")
    rows = [
        d.components if isinstance(d, DualSpinor) else np.asarray(d, complex).reshape(4)
        for d in duals
    ]
    apply = (lambda r, g: r @ g) if action == "right" else (lambda r, g: r @ g.T)

    classes: list[list[int]] = []
    sizes: list[int] = []
    assigned = [False] * len(rows)
    for i in range(len(rows)):
        if assigned[i]:
            continue
        images = [apply(rows[i], g) for g in group.elements]
        members = []
        for j in range(i, len(rows)):
            if assigned[j]:
                continue
            if any(abs(img - rows[j]).max() <= tol for img in images):
                members.append(j)
                assigned[j] = True
        distinct = []
        for img in images:
            if not any(abs(img - d).max() <= tol for d in distinct):
                distinct.append(img)
        classes.append(members)
        sizes.append(len(distinct))
    return OrbitPartition(classes, [cls[0] for cls in classes], sizes)


# -- Clifford group hierarchy ---------------------------------------------------------


@dataclass(frozen=True)
class MembershipRecord:
    """Flags for the chain Spin+ ⊂ Pin ⊂ Lipschitz ⊂ units of Cl(1,3)."""

    even: bool
    invertible: bool
    in_gamma: bool
    in_pin: bool
    in_spin: bool
    in_spin_plus: bool
    norm: complex


def membership(x: Multivector, tol: float = 1e-10) -> MembershipRecord:
    """Classify x within the Clifford group hierarchy.

    in_gamma requires conjugation x e_mu x^-1 to land on grade 1 with real
    coefficients for all four generators; in_pin additionally pins the
    reversion norm x * rev(x) to a +-1 scalar; in_spin adds evenness and
    in_spin_plus picks the +1 norm sheet.
    """
    odd = sum(
        abs(v) for m, v in x.items() if m.bit_count() & 1
    )
    even = odd <= tol

    norm_mv = x * x.reversion()
    norm = complex(norm_mv.scalar_part())

    m = to_matrix(x)
    invertible = abs(np.linalg.det(m)) > 1e-12
    if not invertible:
        return MembershipRecord(even, False, False, False, False, False, norm)

    xinv = from_matrix(np.linalg.inv(m))
    in_gamma = True
    for mu in range(4):
        y = x * gamma(mu) * xinv
        stray = sum(abs(v) for mk, v in y.items() if mk.bit_count() != 1)
        imag = max((abs(complex(v).imag) for mk, v in y.items() if mk.bit_count() == 1),
                   default=0.0)
        if stray > tol or imag > tol:
            in_gamma = False
            break

    off_scalar = sum(abs(v) for mk, v in norm_mv.items() if mk != 0)
    unit = off_scalar <= tol and (abs(norm - 1) <= tol or abs(norm + 1) <= tol)
    in_pin = in_gamma and unit
    in_spin = in_pin and even
    in_spin_plus = in_spin and abs(norm - 1) <= tol
    return MembershipRecord(even, True, in_gamma, in_pin, in_spin, in_spin_plus, norm)


def twisted_adjoint(x: Multivector, tol: float = 1e-8) -> np.ndarray:
    """Lorentz matrix of a Pin element via grade-twisted conjugation.

    Returns Lambda with hat(x) e_nu x^-1 = Lambda[mu, nu] e_mu, where hat is
    the grade involution (so odd elements act with the extra sign).  x and -x
    produce the same Lambda, and Lambda^T g Lambda = g.
    """
    record = membership(x)
    if not record.in_pin:
        raise ValueError("twisted_adjoint requires a Pin element")
    xh = x.grade_involution()
    xinv = multivector_inverse(x)
    lam = np.zeros((4, 4))
    for nu in range(4):
        y = xh * gamma(nu) * xinv
        for mu in range(4):
            lam[mu, nu] = complex(y.coefficient(1 << mu)).real
        residual = sum(abs(v) for mk, v in y.items() if mk.bit_count() != 1)
        if residual > tol:
            raise ValueError(f"conjugation left grade 1 by {residual:.3e}")
    return lam


def minkowski_metric() -> np.ndarray:
    return _MINKOWSKI.copy()


def exp_bivector(b: Multivector) -> Multivector:
    """Exponential of a pure bivector, the generator of rotors.

    Computed as the matrix exponential in the Weyl representation and
    mapped back; real bivectors land in Spin+(1,3).
    """
    if any(m.bit_count() != 2 for m, _ in b.items()):
        raise ValueError("exp_bivector requires a pure grade-2 argument")
    return from_matrix(scipy.linalg.expm(to_matrix(b)))
