"""Finite LU stabilizers of symmetric states with no continuous symmetry.

Every stabilizer element of such a state has the form ``e^{i phi} g^{(x)n}``
and ``g`` only matters up to sign, so the group embeds in SO(3). Since the
Majorana points of ``g^{(x)n} psi`` are the Majorana points of ``psi``
rotated by the image of ``g``, the search reduces to the rotational
symmetries of the Majorana configuration, each lifted back and checked
against the state.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial.transform import Rotation

from .algebra import stabilizer_algebra
from .core import DEFAULT_TOL, I2, X, Y, Z, apply_local, as_state, num_qubits, so3_image
from .majorana import MajoranaConfiguration, majorana_roots

GEOMETRY_TOL = 1e-6
DEDUP_TOL = 1e-6


class DegenerateConfiguration(ValueError):
    """All Majorana points lie on one axis, so the symmetry group is continuous."""


class UnrecognizedGroup(RuntimeError):
    pass


@dataclass(frozen=True)
class StabilizerElement:
    phase: complex
    g: np.ndarray = field(repr=False)
    rotation: np.ndarray = field(repr=False)

    @property
    def axis_angle(self) -> tuple[np.ndarray, float]:
        return rotation_axis_angle(self.rotation)


@dataclass(frozen=True)
class FiniteStabilizerReport:
    elements: list[StabilizerElement] = field(repr=False)
    label: str

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def rotations(self) -> list[np.ndarray]:
        return [e.rotation for e in self.elements]


def is_rotation(R, tol: float = 1e-10) -> bool:
    R = np.asarray(R, dtype=float)
    return bool(np.linalg.norm(R.T @ R - np.eye(3)) < tol and abs(np.linalg.det(R) - 1) < tol)


def rotation_axis_angle(R) -> tuple[np.ndarray, float]:
    """Axis (unit vector) and angle in ``[0, pi]``; the axis is arbitrary for the identity."""
    rotvec = Rotation.from_matrix(np.asarray(R, dtype=float)).as_rotvec()
    angle = float(np.linalg.norm(rotvec))
    if angle < 1e-12:
        return np.array([0.0, 0.0, 1.0]), 0.0
    return rotvec / angle, angle


def rotation_from_axis_angle(axis, angle: float) -> np.ndarray:
    axis = np.asarray(axis, dtype=float)
    return Rotation.from_rotvec(angle * axis / np.linalg.norm(axis)).as_matrix()


def lift_rotation(R) -> np.ndarray:
    """One of the two SU(2) elements covering ``R``."""
    # the quaternion route stays accurate near half turns, where arccos of the trace does not
    x, y, z, w = Rotation.from_matrix(np.asarray(R, dtype=float)).as_quat()
    return w * I2 - 1j * (x * X + y * Y + z * Z)


def _frame(p, q) -> np.ndarray:
    u = q - np.dot(p, q) * p
    u /= np.linalg.norm(u)
    return np.stack([p, u, np.cross(p, u)], axis=1)


def _matches(config: MajoranaConfiguration, R, tol: float) -> bool:
    image = config.points @ R.T
    used = np.zeros(len(config.points), dtype=bool)
    for v, m in zip(image, config.multiplicities):
        dist = np.linalg.norm(config.points - v, axis=1)
        dist[used | (config.multiplicities != m)] = np.inf
        j = int(np.argmin(dist))
        if dist[j] > tol:
            return False
        used[j] = True
    return True


def dedup_rotations(rotations, tol: float = DEDUP_TOL) -> list[np.ndarray]:
    out: list[np.ndarray] = []
    for R in rotations:
        if all(np.linalg.norm(R - Q) >= tol for Q in out):
            out.append(R)
    return out


def rotation_candidates(config: MajoranaConfiguration, tol: float = GEOMETRY_TOL) -> list[np.ndarray]:
    """All rotations carrying the point multiset onto itself, multiplicities included.

    A rotation is fixed by the images of two non-collinear points, so the
    search picks such a reference pair and tries every image pair with the
    same multiplicities and angular separation.
    """
    pts, mult = config.points, config.multiplicities
    if len(pts) < 2:
        raise DegenerateConfiguration("all Majorana points coincide")
    p = pts[0]
    ref = next((j for j in range(1, len(pts)) if np.linalg.norm(np.cross(p, pts[j])) > 10 * tol), None)
    if ref is None:
        raise DegenerateConfiguration("all Majorana points lie on one axis")
    q = pts[ref]
    cos_pq = np.dot(p, q)
    F = _frame(p, q)
    out = [np.eye(3)]
    for i in range(len(pts)):
        if mult[i] != mult[0]:
            continue
        for j in range(len(pts)):
            if j == i or mult[j] != mult[ref] or abs(np.dot(pts[i], pts[j]) - cos_pq) > 10 * tol:
                continue
            R = _frame(pts[i], pts[j]) @ F.T
            if _matches(config, R, 10 * tol):
                out.append(R)
    return dedup_rotations(out)


def lift_and_verify(psi, R, tol: float = DEFAULT_TOL):
    """Return ``(phase, g)`` with ``phase * g^{(x)n} psi = psi`` and ``g`` covering ``R``, or None."""
    psi = as_state(psi)
    n = num_qubits(psi)
    g = lift_rotation(R)
    v = apply_local([g] * n, psi)
    norm2 = np.vdot(psi, psi).real
    lam = np.vdot(psi, v) / norm2
    if abs(abs(lam) - 1) > tol or np.linalg.norm(v - lam * psi) > tol * np.sqrt(norm2):
        return None
    lam /= abs(lam)
    return np.conj(lam), g


def stabilizer_residual(psi, phase, g) -> float:
    """``||phase g^{(x)n} psi - psi|| / ||psi||``."""
    psi = np.asarray(psi, dtype=complex)
    n = num_qubits(psi)
    return float(np.linalg.norm(phase * apply_local([g] * n, psi) - psi) / np.linalg.norm(psi))


def rotation_order(R, max_order: int = 120, tol: float = 1e-6) -> int:
    P = np.eye(3)
    for k in range(1, max_order + 1):
        P = P @ R
        if np.linalg.norm(P - np.eye(3)) < tol:
            return k
    raise UnrecognizedGroup("rotation of infinite or excessive order")


def closure_defect(rotations) -> float:
    """Distance from the worst product ``R_i R_j`` to the set; also covers inverses."""
    worst = 0.0
    for R in rotations:
        for Q in rotations:
            P = R @ Q
            worst = max(worst, min(np.linalg.norm(P - S) for S in rotations))
    has_identity = min(np.linalg.norm(R - np.eye(3)) for R in rotations)
    return max(worst, has_identity)


_POLYHEDRAL = {
    "tetrahedral": {1: 1, 2: 3, 3: 8},
    "octahedral": {1: 1, 2: 9, 3: 8, 4: 6},
    "icosahedral": {1: 1, 2: 15, 3: 20, 5: 24},
}


def identify_group(rotations) -> str:
    """Label a finite rotation group: trivial, cyclic(k), dihedral(k) or a polyhedral group."""
    N = len(rotations)
    orders = [rotation_order(R) for R in rotations]
    census = dict(Counter(orders))
    if N == 1:
        return "trivial"
    if N in orders:
        return f"cyclic({N})"
    for name, expected in _POLYHEDRAL.items():
        if census == expected:
            return name
    if N % 2 == 0:
        k = N // 2
        main = [R for R, o in zip(rotations, orders) if o == k]
        if k == 2 and census == {1: 1, 2: 3}:
            return "dihedral(2)"
        if main:
            axis, _ = rotation_axis_angle(main[0])
            flips = [
                R for R, o in zip(rotations, orders)
                if o == 2 and abs(np.dot(rotation_axis_angle(R)[0], axis)) < 1e-6
            ]
            if len(flips) == k:
                return f"dihedral({k})"
    raise UnrecognizedGroup(f"order {N} with element orders {census}")


def finite_stabilizer(psi, tol: float = DEFAULT_TOL, geometry_tol: float = GEOMETRY_TOL) -> FiniteStabilizerReport:
    """The full LU stabilizer of a symmetric state whose stabilizer algebra is zero."""
    psi = as_state(psi)
    dim = stabilizer_algebra(psi).dim
    if dim:
        raise DegenerateConfiguration(f"stabilizer algebra has dimension {dim}, so the group is continuous")
    config = majorana_roots(psi, tol)
    elements = []
    for R in rotation_candidates(config, geometry_tol):
        lifted = lift_and_verify(psi, R, tol)
        if lifted is not None:
            phase, g = lifted
            elements.append(StabilizerElement(phase, g, so3_image(g)))
    rotations = [e.rotation for e in elements]
    if closure_defect(rotations) > 1e-6:
        raise UnrecognizedGroup("verified rotations are not closed under composition")
    return FiniteStabilizerReport(elements, identify_group(rotations))
