"""LU classification of symmetric states by their stabilizer algebra.

A symmetric ``n``-qubit state with a positive-dimensional stabilizer is LU
equivalent to exactly one of

* the product state ``|0...0>`` (``dim K = n``),
* a generalized GHZ state ``cos(pi t/4)|0...0> + sin(pi t/4)|1...1>`` with
  ``0 < t <= 1`` (``dim K = n - 1``),
* the two-qubit state ``|01> + |10>`` (``dim K = 3``),
* a Dicke state ``|D_n^(k)>`` with ``1 <= k <= n/2`` (``dim K = 1``).

States with ``dim K = 0`` have a finite stabilizer, see :mod:`symstab.discrete`.

The Dicke stabilizer is generated by ``i(2k - n) + A^(1) + ... + A^(n)``.
Note the sign of the phase term: ``A = iZ`` acts on a weight-``k`` string
as ``i(n - 2k)``, so the phase must be ``i(2k - n)`` to cancel it.

For ``n = 2`` every entangled but not maximally entangled symmetric state has
a one-dimensional stabilizer; these are reported as generalized GHZ states
with ``0 < t < 1``, since the Schmidt form ``a|00> + b|11>`` is exactly that
family.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .algebra import RANK_TOL, stabilizer_algebra
from .core import (
    DEFAULT_TOL,
    I2,
    LocalUnitaryElement,
    NotSymmetric,
    SU2_BASIS,
    X,
    Y,
    Z,
    apply_group,
    as_state,
    dicke_state,
    is_symmetric,
    num_qubits,
    weights,
)

# SU(2) element exchanging |0> and |1> up to sign
FLIP = np.array([[0, -1], [1, 0]], dtype=complex)


class ClassificationError(RuntimeError):
    """The computed stabilizer does not fit any allowed type (usually a tolerance problem)."""


class DegenerateGHZ(ClassificationError):
    pass


class StateType(str, Enum):
    PRODUCT = "Product"
    GHZ = "GeneralizedGHZ"
    SINGLET = "Singlet"
    DICKE = "Dicke"
    DISCRETE = "Discrete"


@dataclass(frozen=True)
class ClassificationReport:
    type: StateType
    stabilizer_dim: int
    canonicalizer: LocalUnitaryElement | None = field(default=None, repr=False)
    ghz_t: float | None = None
    dicke_k: int | None = None


def ghz_representative(n: int, t: float) -> np.ndarray:
    psi = np.zeros(2**n, dtype=complex)
    psi[0] = np.cos(np.pi * t / 4)
    psi[-1] = np.sin(np.pi * t / 4)
    return psi


def canonical_representative(report: ClassificationReport, n: int) -> np.ndarray | None:
    if report.type is StateType.PRODUCT:
        return dicke_state(n, 0)
    if report.type is StateType.GHZ:
        return ghz_representative(n, report.ghz_t)
    if report.type is StateType.SINGLET:
        return dicke_state(2, 1)
    if report.type is StateType.DICKE:
        return dicke_state(n, report.dicke_k)
    return None


def _diagonalizer(N) -> np.ndarray:
    """``g`` in SU(2) with ``g N g^dag = alpha A`` and ``alpha > 0``, for ``N`` in su(2)."""
    H = -1j * np.asarray(N)  # Hermitian, traceless
    vals, vecs = np.linalg.eigh(H)
    # eigh sorts ascending; A = iZ wants the +|N| eigenvector first
    V = vecs[:, ::-1]
    V = V / np.sqrt(np.linalg.det(V))
    return V.conj().T


def _fix_global_phase(U: LocalUnitaryElement, psi) -> LocalUnitaryElement:
    """Rescale ``U``'s phase so the largest amplitude of ``U psi`` is real and positive."""
    v = apply_group(U, psi)
    j = int(np.argmax(np.abs(v)))
    return LocalUnitaryElement(U.phase * np.exp(-1j * np.angle(v[j])), U.gates)


def _uniform(g, n: int) -> LocalUnitaryElement:
    return LocalUnitaryElement.uniform(g, n)


def _product_canonicalizer(psi, n: int) -> LocalUnitaryElement:
    mat = psi.reshape(2, -1)
    u, _, _ = np.linalg.svd(mat)
    a, b = u[:, 0]
    g = np.array([[np.conj(a), np.conj(b)], [-b, a]])
    return _fix_global_phase(_uniform(g, n), psi)


def _singlet_canonicalizer(psi) -> LocalUnitaryElement:
    # (g1 (x) g2) acts on the coefficient matrix as g1 Psi g2^T
    W = psi.reshape(2, 2)
    W = W / np.sqrt(abs(np.linalg.det(W)))
    h_t = np.linalg.inv(W) @ np.array([[0, 1], [1, 0]])
    h_t = h_t / np.sqrt(np.linalg.det(h_t))
    U = LocalUnitaryElement(1.0, np.stack([I2, h_t.T]))
    return _fix_global_phase(U, psi)


def ghz_parameter(psi, K=None, tol: float = DEFAULT_TOL) -> tuple[float, LocalUnitaryElement]:
    """The parameter ``t`` of a generalized GHZ state and an LU element reaching the representative.

    The stabilizer algebra is spanned by ``N^(1) - N^(j)``; diagonalizing ``N``
    with ``g`` puts ``g^{(x)n} psi`` on ``|0...0>`` and ``|1...1>``. Local phases
    then make both amplitudes real and positive, and a global flip orders them.
    """
    psi = as_state(psi)
    n = num_qubits(psi)
    K = stabilizer_algebra(psi) if K is None else K
    slots = K.basis[:, 1:].reshape(K.dim, n, 3)
    j, k = np.unravel_index(np.argmax(np.linalg.norm(slots, axis=2)), slots.shape[:2])
    N = np.einsum("b,bij->ij", slots[j, k], SU2_BASIS)
    g = _diagonalizer(N)
    v = apply_group(_uniform(g, n), psi)
    norm = np.linalg.norm(v)
    off = np.linalg.norm(v[1:-1])
    if off > 1e-6 * norm:
        raise ClassificationError("diagonalized state is not supported on |0...0> and |1...1>")
    if abs(v[0]) < abs(v[-1]):
        g = FLIP @ g
        v = apply_group(_uniform(g, n), psi)
    a, b = v[0], v[-1]
    if abs(b) < tol * norm:
        raise DegenerateGHZ("state is a product state")
    # diag(e^{i theta}, e^{-i theta})^{(x)n} shifts the relative phase by 2 n theta
    theta = (np.angle(a) - np.angle(b)) / (2 * n)
    D = np.diag([np.exp(-1j * theta), np.exp(1j * theta)])
    U = _fix_global_phase(_uniform(D @ g, n), psi)
    t = 4 / np.pi * np.arctan2(abs(b), abs(a))
    return float(t), U


def canonicalize_dicke(psi, K=None, tol: float = DEFAULT_TOL) -> tuple[int, LocalUnitaryElement]:
    """The Dicke class ``k <= n/2`` of a state with a one-dimensional stabilizer.

    The generator ``(it, N, ..., N)`` is diagonalized to ``alpha (i t' + A + ... + A)``,
    which annihilates exactly the basis strings of weight ``(n + t') / 2``.
    """
    psi = as_state(psi)
    n = num_qubits(psi)
    K = stabilizer_algebra(psi) if K is None else K
    if K.dim != 1:
        raise ClassificationError(f"expected a one-dimensional stabilizer, got {K.dim}")
    # the generator is defined up to sign; fixing a >= 0 keeps diagonal inputs on the identity
    gen = K.basis[0] if K.basis[0, 1] >= 0 else -K.basis[0]
    t = gen[0]
    slots = gen[1:].reshape(n, 3)
    if np.max(np.abs(slots - slots[0])) > 1e-6 * np.linalg.norm(slots[0]):
        raise ClassificationError("stabilizer generator is not uniform across qubits")
    N = np.einsum("b,bij->ij", slots[0], SU2_BASIS)
    alpha = np.linalg.norm(slots[0])
    g = _diagonalizer(N)
    k_real = (n + t / alpha) / 2
    k = int(round(k_real))
    if abs(k - k_real) > 1e-6 or not 0 < k < n:
        raise ClassificationError(f"annihilated weight {k_real} is not an interior integer")
    if k > n / 2:
        g = FLIP @ g
        k = n - k
    U = _fix_global_phase(_uniform(g, n), psi)
    v = apply_group(U, psi)
    target = dicke_state(n, k)
    overlap = abs(np.vdot(target, v)) / (np.linalg.norm(target) * np.linalg.norm(v))
    if 1 - overlap > 1e-8:
        raise ClassificationError(f"canonicalized state is not proportional to D_{n}^({k})")
    return k, U


def classify(psi, tol: float = DEFAULT_TOL, rank_tol: float = RANK_TOL) -> ClassificationReport:
    """Decide the LU type of a symmetric state from the dimension of its stabilizer algebra."""
    psi = as_state(psi)
    n = num_qubits(psi)
    if not is_symmetric(psi, tol):
        raise NotSymmetric("classification applies to symmetric states only")
    K = stabilizer_algebra(psi, rank_tol)
    dim = K.dim
    if dim == n:
        return ClassificationReport(StateType.PRODUCT, dim, _product_canonicalizer(psi, n))
    if dim == 3 and n == 2:
        return ClassificationReport(StateType.SINGLET, dim, _singlet_canonicalizer(psi))
    if dim == n - 1 and n >= 2:
        t, U = ghz_parameter(psi, K, tol)
        return ClassificationReport(StateType.GHZ, dim, U, ghz_t=t)
    if dim == 1 and n > 2:
        k, U = canonicalize_dicke(psi, K, tol)
        return ClassificationReport(StateType.DICKE, dim, U, dicke_k=k)
    if dim == 0:
        return ClassificationReport(StateType.DISCRETE, 0)
    raise ClassificationError(f"stabilizer dimension {dim} is impossible for a symmetric {n}-qubit state")


def canonical_fidelity(report: ClassificationReport, psi) -> float:
    """Fidelity of ``canonicalizer psi`` with the class representative."""
    psi = as_state(psi)
    rep = canonical_representative(report, num_qubits(psi))
    v = apply_group(report.canonicalizer, psi)
    return float(abs(np.vdot(rep, v)) ** 2 / (np.vdot(rep, rep).real * np.vdot(v, v).real))


# -- Pauli stabilizer ------------------------------------------------------------

_PAULI_PHASES = {1: "+", -1: "-", 1j: "+i", -1j: "-i"}


def pauli_stabilizer(psi, tol: float = DEFAULT_TOL, max_n: int = 8) -> list[tuple[complex, str]]:
    """All signed Pauli words ``s W`` with ``s W psi = psi``.

    A word is ``i^{|f & z|} X^f Z^z`` for bit masks ``f`` (flips) and ``z``.
    Only flip masks that map the support of ``psi`` onto itself are examined.
    """
    psi = as_state(psi)
    n = num_qubits(psi)
    if n > max_n:
        raise ValueError(f"Pauli enumeration limited to {max_n} qubits")
    norm = np.linalg.norm(psi)
    idx = np.arange(2**n)
    support = np.abs(psi) > tol * norm
    # parity[z, I] = (-1)^{popcount(z & I)}
    parity = 1 - 2 * (weights(n)[idx[:, None] & idx[None, :]] % 2)
    zpsi = parity * psi[None, :]
    out = []
    for f in range(2**n):
        if not np.array_equal(support[idx ^ f], support):
            continue
        # (W psi)[I ^ f] = i^{|f&z|} (-1)^{z.I} psi[I]
        ys = weights(n)[idx & f]
        flipped = (1j ** ys)[:, None] * zpsi[:, idx ^ f]
        lam = flipped @ psi.conj() / norm**2
        ok = np.linalg.norm(flipped - lam[:, None] * psi[None, :], axis=1) <= tol * norm
        for z in np.nonzero(ok)[0]:
            phase = complex(np.round(1 / lam[z]))
            if abs(abs(lam[z]) - 1) > tol or abs(phase - 1 / lam[z]) > 1e-6:
                continue
            out.append((phase, _pauli_word(f, int(z), n)))
    return sorted(out, key=lambda item: item[1])


def _pauli_word(f: int, z: int, n: int) -> str:
    letters = []
    for k in range(n):
        bit = 1 << (n - 1 - k)
        letters.append({(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}[(bool(f & bit), bool(z & bit))])
    return "".join(letters)


def format_pauli(phase: complex, word: str) -> str:
    return _PAULI_PHASES.get(phase, str(phase)) + word


def pauli_matrix(word: str) -> np.ndarray:
    mats = {"I": I2, "X": X, "Y": Y, "Z": Z}
    out = np.array([[1.0 + 0j]])
    for ch in word:
        out = np.kron(out, mats[ch])
    return out
