"""Majorana representation: symmetric states as multisets of Bloch-sphere points.

A symmetric state with Dicke coefficients ``d_k`` corresponds to the
polynomial ``p(z) = sum_k d_k z^k / (k! (n-k)!)``, which factors as
``prod_j (alpha_j + beta_j z)`` over the 1-qubit states
``alpha_j |0> + beta_j |1>`` being symmetrized. A root ``z`` therefore
gives the 1-qubit state ``-z |0> + |1>``, and every degree the polynomial
falls short of ``n`` gives a ``|0>`` (north pole) factor.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from math import factorial

import numpy as np

from .core import DEFAULT_TOL, dicke_expand, dicke_reconstruct, is_symmetric, NotSymmetric

LEADING_TOL = 1e-10
CLUSTER_TOL = 1e-6


@dataclass(frozen=True)
class MajoranaConfiguration:
    """Distinct Bloch vectors with their multiplicities."""

    points: np.ndarray = field(repr=False)  # (p, 3)
    multiplicities: np.ndarray

    @property
    def n(self) -> int:
        return int(np.sum(self.multiplicities))

    def expanded(self) -> np.ndarray:
        """All ``n`` points, repeated according to multiplicity."""
        return np.repeat(self.points, self.multiplicities, axis=0)

    def rotated(self, R) -> "MajoranaConfiguration":
        return MajoranaConfiguration(self.points @ np.asarray(R).T, self.multiplicities)

    def to_text(self) -> str:
        return "".join(
            f"{x:.12g} {y:.12g} {z:.12g} {m}\n" for (x, y, z), m in zip(self.points, self.multiplicities)
        )

    @classmethod
    def from_text(cls, text: str) -> "MajoranaConfiguration":
        rows = [line.split() for line in text.splitlines() if line.strip() and not line.startswith("#")]
        pts = np.array([[float(v) for v in r[:3]] for r in rows])
        mult = np.array([int(r[3]) for r in rows])
        return cls(pts, mult)


def bloch_vector(phi) -> np.ndarray:
    alpha, beta = np.asarray(phi, dtype=complex)
    norm2 = abs(alpha) ** 2 + abs(beta) ** 2
    if norm2 == 0:
        raise ValueError("the zero vector has no Bloch vector")
    ab = np.conj(alpha) * beta
    return np.array([2 * ab.real, 2 * ab.imag, abs(alpha) ** 2 - abs(beta) ** 2]) / norm2


def qubit_from_bloch(v) -> np.ndarray:
    """A unit 1-qubit state with Bloch vector ``v`` (phase convention: real ``alpha >= 0``)."""
    x, y, z = np.asarray(v, dtype=float) / np.linalg.norm(v)
    theta = np.arccos(np.clip(z, -1, 1))
    return np.array([np.cos(theta / 2), np.exp(1j * np.arctan2(y, x)) * np.sin(theta / 2)])


def symmetrize(phis) -> np.ndarray:
    """``sum_pi pi[phi_1 (x) ... (x) phi_n]`` over all ``n!`` qubit permutations.

    Uses the weight-class formula: the amplitude at any weight-``k`` string is
    ``k! (n-k)!`` times the ``z^k`` coefficient of ``prod_j (alpha_j + beta_j z)``.
    """
    phis = np.asarray(phis, dtype=complex).reshape(-1, 2)
    n = len(phis)
    poly = np.array([1.0 + 0j])
    for alpha, beta in phis:
        poly = np.convolve(poly, [alpha, beta])
    d = np.array([factorial(k) * factorial(n - k) * poly[k] for k in range(n + 1)])
    return dicke_reconstruct(d)


def symmetrize_bruteforce(phis) -> np.ndarray:
    """The literal ``n!``-term sum; only for checking :func:`symmetrize`."""
    phis = np.asarray(phis, dtype=complex).reshape(-1, 2)
    out = 0
    for perm in permutations(range(len(phis))):
        v = np.array([1.0 + 0j])
        for j in perm:
            v = np.kron(v, phis[j])
        out = out + v
    return out


def majorana_polynomial(d) -> np.ndarray:
    """Coefficients of ``p`` in increasing degree."""
    d = np.asarray(d, dtype=complex)
    n = len(d) - 1
    return np.array([d[k] / (factorial(k) * factorial(n - k)) for k in range(n + 1)])


def _polish(coeffs_desc: np.ndarray, z: complex) -> complex:
    dp = np.polyder(coeffs_desc)
    deriv = np.polyval(dp, z)
    if abs(deriv) < 1e-14 * np.max(np.abs(coeffs_desc)):
        return z
    step = np.polyval(coeffs_desc, z) / deriv
    return z - step if np.isfinite(step) else z


def chordal_distance(u, v) -> float:
    return float(np.linalg.norm(np.asarray(u) - np.asarray(v)))


def _single_linkage(vectors: np.ndarray, tol: float):
    labels = -np.ones(len(vectors), dtype=int)
    groups: list[list[int]] = []
    for i in range(len(vectors)):
        if labels[i] >= 0:
            continue
        labels[i] = len(groups)
        members, frontier = [i], [i]
        while frontier:
            j = frontier.pop()
            for k in range(len(vectors)):
                if labels[k] < 0 and chordal_distance(vectors[j], vectors[k]) < tol:
                    labels[k] = labels[i]
                    members.append(k)
                    frontier.append(k)
        groups.append(members)
    return vectors, labels, groups


def cluster_points(vectors: np.ndarray, tol: float = CLUSTER_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Group unit vectors closer than ``tol``; return mean directions and counts."""
    vectors = np.asarray(vectors, dtype=float)
    _, _, groups = _single_linkage(vectors, tol)
    pts = []
    for members in groups:
        mean = vectors[members].mean(axis=0)
        pts.append(mean / np.linalg.norm(mean))
    return np.array(pts).reshape(-1, 3), np.array([len(g) for g in groups])


def _root_qubit(z: complex) -> tuple[complex, complex]:
    return (1.0, 0.0) if np.isinf(z) else (-z, 1.0)


MERGE_RADII = (1e-6, 1e-4, 1e-2, 1e-1)


def _merge_multiple_roots(roots: list[complex], psi, radii=MERGE_RADII) -> list[complex]:
    """Replace each numerically split multiple root by its centroid.

    A ``k``-fold root comes back from the eigenvalue solver as ``k`` points
    spread over roughly ``eps**(1/k)``. Groups are formed by single linkage at
    increasing radii, and a group is merged only if the symmetrized state stays
    as close to ``psi`` as before, so genuinely distinct close roots survive.
    """
    roots = list(roots)

    def deficit(rs):
        return 1 - fidelity(symmetrize([_root_qubit(z) for z in rs]), psi)

    base = deficit(roots)
    for radius in radii:
        vecs = np.array([bloch_vector(_root_qubit(z)) for z in roots])
        _, _, groups = _single_linkage(vecs, radius)
        for members in groups:
            zs = np.array([roots[j] for j in members])
            if len(members) < 2 or np.any(np.isinf(zs)) or np.all(zs == zs[0]):
                continue
            # average in whichever stereographic chart keeps the cluster bounded
            if np.mean(np.abs(zs)) <= 1:
                centre = np.mean(zs)
            else:
                centre = 1 / np.mean(1 / zs)
            trial = list(roots)
            for j in members:
                trial[j] = centre
            new = deficit(trial)
            if new <= max(10 * base, 1e-12):
                roots, base = trial, min(base, new)
    return roots


def majorana_qubits(psi, tol: float = DEFAULT_TOL, merge: bool = True) -> np.ndarray:
    """The ``n`` 1-qubit states ``(alpha, beta)`` whose symmetrization is proportional to ``psi``.

    Roots of the Majorana polynomial come from companion-matrix eigenvalues
    with one Newton step. Multiple roots, which the eigenvalue solver splits
    into small clusters, are re-merged unless ``merge`` is false.
    """
    if not is_symmetric(psi, tol):
        raise NotSymmetric("the Majorana representation needs a symmetric state")
    psi = np.asarray(psi, dtype=complex)
    d = dicke_expand(psi, tol)
    n = len(d) - 1
    coeffs = majorana_polynomial(d)
    scale = np.max(np.abs(coeffs))
    nz = np.nonzero(np.abs(coeffs) > LEADING_TOL * scale)[0]
    degree = int(nz[-1])
    low = int(nz[0])
    # zero roots are exact, the rest come from the trimmed polynomial
    desc = coeffs[low : degree + 1][::-1]
    roots = np.roots(desc) if len(desc) > 1 else np.array([], dtype=complex)
    roots = [_polish(desc, z) for z in roots]
    roots = [0j] * low + roots + [complex(np.inf)] * (n - degree)
    if merge and n > 1:
        roots = _merge_multiple_roots(roots, psi)
    return np.array([_root_qubit(z) for z in roots], dtype=complex)


def majorana_roots(psi, tol: float = DEFAULT_TOL, cluster_tol: float = CLUSTER_TOL) -> MajoranaConfiguration:
    """Majorana points of a symmetric state, with repeated points merged."""
    vecs = np.array([bloch_vector(q) for q in majorana_qubits(psi, tol)])
    pts, mult = cluster_points(vecs, cluster_tol)
    return MajoranaConfiguration(pts, mult)


def state_from_configuration(config: MajoranaConfiguration) -> np.ndarray:
    return symmetrize([qubit_from_bloch(v) for v in config.expanded()])


def fidelity(psi, phi) -> float:
    """``|<psi|phi>|^2 / (||psi||^2 ||phi||^2)``."""
    psi, phi = np.asarray(psi), np.asarray(phi)
    return float(abs(np.vdot(psi, phi)) ** 2 / (np.vdot(psi, psi).real * np.vdot(phi, phi).real))
