"""Multiqubit state vectors, Dicke expansions and the local unitary actions.

States are plain complex numpy vectors of length ``2**n``. Amplitudes are
indexed by bit strings in binary order with qubit 1 as the most significant
bit, so ``psi[0b011]`` is the amplitude of ``|011>``. States are never
normalized implicitly; every tolerance is relative to ``||psi||``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_TOL = 1e-9

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)

# su(2) basis used for algebra coordinates
A = 1j * Z
B = 1j * Y
C = 1j * X
SU2_BASIS = np.stack([A, B, C])


class NotSymmetric(ValueError):
    """Raised when an operation needs a permutation-invariant state."""


def num_qubits(psi) -> int:
    size = np.shape(psi)[0]
    n = size.bit_length() - 1
    if size < 2 or 1 << n != size:
        raise ValueError(f"state length {size} is not a power of two >= 2")
    return n


def as_state(psi, n: int | None = None) -> np.ndarray:
    """Validate and return ``psi`` as a complex vector.

    Rejects the zero vector and lengths that are not a power of two. If ``n``
    is given the qubit count must match.
    """
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    m = num_qubits(psi)
    if n is not None and m != n:
        raise ValueError(f"expected a {n}-qubit state, got {m} qubits")
    if not np.any(psi):
        raise ValueError("the zero vector is not a state")
    return psi


# -- multi-indices ----------------------------------------------------------

def bits_to_index(bits: str | tuple | list) -> int:
    if isinstance(bits, str):
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"not a bit string: {bits!r}")
        return int(bits, 2)
    return int("".join(str(int(b)) for b in bits), 2)


def index_to_bits(index: int, n: int) -> str:
    return format(index, f"0{n}b")


def weight(bits) -> int:
    """Number of ones in a multi-index (a bit string or sequence of bits)."""
    if isinstance(bits, str):
        return bits.count("1")
    return int(sum(int(b) for b in bits))


def complement(bits: str) -> str:
    return bits.translate(str.maketrans("01", "10"))


def weights(n: int) -> np.ndarray:
    """Hamming weight of every basis index, in binary order."""
    idx = np.arange(2**n)
    w = np.zeros(2**n, dtype=int)
    for k in range(n):
        w += (idx >> k) & 1
    return w


# -- Dicke basis -------------------------------------------------------------

def dicke_state(n: int, k: int) -> np.ndarray:
    """Unnormalized Dicke state: the sum of all basis strings of weight ``k``."""
    if not 0 <= k <= n:
        raise ValueError(f"Dicke weight {k} outside 0..{n}")
    return (weights(n) == k).astype(complex)


def dicke_reconstruct(d) -> np.ndarray:
    d = np.asarray(d, dtype=complex)
    n = len(d) - 1
    return d[weights(n)]


def is_symmetric(psi, tol: float = DEFAULT_TOL) -> bool:
    """True if ``psi`` is invariant under every adjacent qubit transposition."""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    n = num_qubits(psi)
    scale = tol * np.linalg.norm(psi)
    tensor = psi.reshape((2,) * n)
    for k in range(n - 1):
        swapped = np.swapaxes(tensor, k, k + 1)
        if np.linalg.norm(swapped - tensor) > scale:
            return False
    return True


def dicke_expand(psi, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Coefficients ``d_k`` with ``psi = sum_k d_k |D_n^(k)>``.

    Each ``d_k`` is read off the first basis string of weight ``k``; the
    remaining amplitudes of that weight must agree to ``tol * ||psi||``,
    otherwise :class:`NotSymmetric` is raised.
    """
    psi = as_state(psi)
    n = num_qubits(psi)
    w = weights(n)
    first = np.array([int(np.argmax(w == k)) for k in range(n + 1)])
    d = psi[first]
    if np.max(np.abs(psi - d[w])) > tol * np.linalg.norm(psi):
        raise NotSymmetric("amplitudes within a weight class differ")
    return d


# -- LU group and algebra ------------------------------------------------------

def apply_local(ops, psi) -> np.ndarray:
    """Apply ``ops[0] (x) ops[1] (x) ... (x) ops[n-1]`` to ``psi``.

    ``None`` entries are treated as the identity.
    """
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    n = num_qubits(psi)
    if len(ops) != n:
        raise ValueError(f"{len(ops)} single-qubit operators for {n} qubits")
    tensor = psi.reshape((2,) * n)
    for k, op in enumerate(ops):
        if op is None:
            continue
        tensor = np.moveaxis(np.tensordot(op, tensor, axes=([1], [k])), 0, k)
    return tensor.reshape(-1)


def apply_on(op, k: int, psi) -> np.ndarray:
    """Apply the single-qubit operator ``op`` on qubit ``k`` (0-based)."""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    n = num_qubits(psi)
    ops = [None] * n
    ops[k] = op
    return apply_local(ops, psi)


@dataclass(frozen=True)
class LocalUnitaryElement:
    """``(e^{it}, g_1, ..., g_n)`` in ``U(1) x SU(2)^n``."""

    phase: complex
    gates: np.ndarray = field(repr=False)

    def __post_init__(self):
        gates = np.asarray(self.gates, dtype=complex)
        if gates.ndim != 3 or gates.shape[1:] != (2, 2):
            raise ValueError("gates must have shape (n, 2, 2)")
        object.__setattr__(self, "gates", gates)
        object.__setattr__(self, "phase", complex(self.phase))

    @property
    def n(self) -> int:
        return len(self.gates)

    @classmethod
    def identity(cls, n: int) -> "LocalUnitaryElement":
        return cls(1.0, np.broadcast_to(I2, (n, 2, 2)).copy())

    @classmethod
    def uniform(cls, g, n: int, phase: complex = 1.0) -> "LocalUnitaryElement":
        """The element ``phase * g^{(x)n}``."""
        return cls(phase, np.broadcast_to(np.asarray(g, dtype=complex), (n, 2, 2)).copy())

    def is_valid(self, tol: float = 1e-10) -> bool:
        if abs(abs(self.phase) - 1) > tol:
            return False
        for g in self.gates:
            if np.linalg.norm(g @ g.conj().T - I2) > tol or abs(np.linalg.det(g) - 1) > tol:
                return False
        return True

    def compose(self, other: "LocalUnitaryElement") -> "LocalUnitaryElement":
        """``self * other`` (apply ``other`` first)."""
        return LocalUnitaryElement(self.phase * other.phase, self.gates @ other.gates)

    def inverse(self) -> "LocalUnitaryElement":
        return LocalUnitaryElement(np.conj(self.phase), np.conj(np.swapaxes(self.gates, 1, 2)))


@dataclass(frozen=True)
class AlgebraElement:
    """``(it, M_1, ..., M_n)`` with ``M_k = a_k A + b_k B + c_k C``.

    ``coords`` has shape ``(n, 3)`` holding ``(a_k, b_k, c_k)`` per qubit.
    """

    t: float
    coords: np.ndarray = field(repr=False)

    def __post_init__(self):
        coords = np.asarray(self.coords, dtype=float)
        if coords.ndim != 2 or coords.shape[1] != 3:
            raise ValueError("coords must have shape (n, 3)")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "t", float(self.t))

    @property
    def n(self) -> int:
        return len(self.coords)

    @classmethod
    def from_vector(cls, v) -> "AlgebraElement":
        v = np.asarray(v, dtype=float)
        return cls(v[0], v[1:].reshape(-1, 3))

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(0.0, np.zeros((n, 3)))

    @classmethod
    def from_matrices(cls, t: float, mats) -> "AlgebraElement":
        """Build from explicit traceless skew-Hermitian 2x2 matrices."""
        mats = np.asarray(mats, dtype=complex)
        # basis is orthonormal for <P, Q> = tr(P^dag Q) / 2
        coords = np.einsum("bij,kij->kb", SU2_BASIS.conj(), mats).real / 2
        return cls(t, coords)

    @classmethod
    def single(cls, n: int, k: int, which: str, scale: float = 1.0) -> "AlgebraElement":
        """``scale * A^{(k)}`` (or B, C) with ``k`` 0-based."""
        coords = np.zeros((n, 3))
        coords[k, "ABC".index(which)] = scale
        return cls(0.0, coords)

    def to_vector(self) -> np.ndarray:
        return np.concatenate([[self.t], self.coords.reshape(-1)])

    def matrices(self) -> np.ndarray:
        return np.einsum("kb,bij->kij", self.coords, SU2_BASIS)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.t + other.t, self.coords + other.coords)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.t - other.t, self.coords - other.coords)

    def __mul__(self, s: float) -> "AlgebraElement":
        return AlgebraElement(s * self.t, s * self.coords)

    __rmul__ = __mul__

    def bracket(self, other: "AlgebraElement") -> "AlgebraElement":
        """Lie bracket; the u(1) part is central so the phase drops out."""
        P, Q = self.matrices(), other.matrices()
        return AlgebraElement.from_matrices(0.0, P @ Q - Q @ P)

    def conjugate(self, U: LocalUnitaryElement) -> "AlgebraElement":
        """``U M U^dagger``, which stabilizes ``U psi`` whenever ``M`` stabilizes ``psi``."""
        g = U.gates
        mats = g @ self.matrices() @ np.conj(np.swapaxes(g, 1, 2))
        return AlgebraElement.from_matrices(self.t, mats)

    def is_skew_traceless(self, tol: float = 1e-12) -> bool:
        mats = self.matrices()
        herm = mats + np.conj(np.swapaxes(mats, 1, 2))
        return bool(np.all(np.abs(herm) < tol) and np.all(np.abs(np.trace(mats, axis1=1, axis2=2)) < tol))


def apply_group(U: LocalUnitaryElement, psi) -> np.ndarray:
    """``e^{it} (g_1 (x) ... (x) g_n) psi``."""
    psi = as_state(psi, U.n)
    return U.phase * apply_local(list(U.gates), psi)


def apply_algebra(M: AlgebraElement, psi) -> np.ndarray:
    """``(it + sum_k M_k^{(k)}) psi``; the result may be zero."""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if num_qubits(psi) != M.n:
        raise ValueError(f"{M.n}-qubit algebra element applied to {num_qubits(psi)}-qubit state")
    out = 1j * M.t * psi
    for k, mat in enumerate(M.matrices()):
        if np.any(M.coords[k]):
            out = out + apply_on(mat, k, psi)
    return out


def element_weight(x, tol: float = 1e-10) -> int:
    """Number of qubit slots carrying a non-identity (resp. nonzero) entry."""
    if isinstance(x, AlgebraElement):
        return int(np.sum(np.linalg.norm(x.coords, axis=1) > tol))
    if isinstance(x, LocalUnitaryElement):
        return int(sum(np.linalg.norm(g - I2) > tol for g in x.gates))
    raise TypeError(f"cannot take the weight of {type(x).__name__}")


# -- SU(2) <-> SO(3) -----------------------------------------------------------

_PAULI_XYZ = np.stack([X, Y, Z])


def so3_image(g) -> np.ndarray:
    """Rotation ``R`` of the Bloch sphere with ``g (v.sigma) g^dag = (R v).sigma``."""
    g = np.asarray(g, dtype=complex)
    gd = g.conj().T
    return np.real(np.einsum("iab,bc,jcd,da->ij", _PAULI_XYZ, g, _PAULI_XYZ, gd)) / 2


def su2_from_axis_angle(axis, angle: float) -> np.ndarray:
    """``exp(-i angle/2 n.sigma)``, covering the rotation by ``angle`` about ``axis``."""
    axis = np.asarray(axis, dtype=float)
    axis = axis / np.linalg.norm(axis)
    ns = np.einsum("i,ijk->jk", axis, _PAULI_XYZ)
    return np.cos(angle / 2) * I2 - 1j * np.sin(angle / 2) * ns


def random_su2(rng: np.random.Generator) -> np.ndarray:
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    a, b = q[0] + 1j * q[1], q[2] + 1j * q[3]
    return np.array([[a, -np.conj(b)], [b, np.conj(a)]])


def random_lu(n: int, rng: np.random.Generator) -> LocalUnitaryElement:
    gates = np.stack([random_su2(rng) for _ in range(n)])
    return LocalUnitaryElement(np.exp(2j * np.pi * rng.random()), gates)


def random_symmetric_state(n: int, rng: np.random.Generator) -> np.ndarray:
    d = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
    return dicke_reconstruct(d)

