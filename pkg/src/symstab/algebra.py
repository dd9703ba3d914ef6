"""Stabilizer subalgebras of the local unitary Lie algebra.

``K_psi`` is the kernel of the real-linear map ``M -> M psi`` from the
``3n + 1`` real coordinates ``(t, a_1, b_1, c_1, ..., a_n, b_n, c_n)`` to the
``2^(n+1)`` real and imaginary parts of the result. It is computed from a
singular value decomposition.

The block decomposition searches subsets of qubits for su(2) blocks. No
closed-form procedure for this is known to us, so it enumerates candidate
subsets in increasing size, which is fine for ``n <= 10``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .core import SU2_BASIS, AlgebraElement, apply_on, as_state, num_qubits

RANK_TOL = 1e-8


class MalformedAlgebra(RuntimeError):
    """The qubits left after removing R0 and R1 do not split into su(2) blocks."""


@dataclass(frozen=True)
class StabilizerAlgebra:
    n: int
    basis: np.ndarray = field(repr=False)  # (dim, 3n+1), orthonormal rows
    residual: float
    singular_values: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def elements(self) -> list[AlgebraElement]:
        return [AlgebraElement.from_vector(v) for v in self.basis]

    def qubit_block(self, k: int) -> np.ndarray:
        """The ``(dim, 3)`` matrix of qubit-``k`` coordinates (``k`` 0-based)."""
        return self.basis[:, 1 + 3 * k : 4 + 3 * k]


@dataclass(frozen=True)
class StabilizerDecomposition:
    blocks: list[tuple[int, ...]]
    r1_qubits: tuple[int, ...]
    r0_qubits: tuple[int, ...]
    block_algebras: list[np.ndarray] = field(repr=False)  # each (3, 3n+1)


def action_matrix(psi) -> np.ndarray:
    """Real ``2^(n+1) x (3n+1)`` matrix of the map ``M -> M psi``."""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    n = num_qubits(psi)
    cols = [1j * psi]
    for k in range(n):
        cols.extend(apply_on(P, k, psi) for P in SU2_BASIS)
    L = np.stack(cols, axis=1)
    return np.vstack([L.real, L.imag])


def stabilizer_algebra(psi, tol: float = RANK_TOL) -> StabilizerAlgebra:
    """Orthonormal basis of ``K_psi``.

    Singular values below ``tol`` times the largest one count as zero.
    """
    psi = as_state(psi)
    n = num_qubits(psi)
    L = action_matrix(psi)
    _, s, vt = np.linalg.svd(L)
    rank = int(np.sum(s > tol * s[0]))
    basis = vt[rank:]
    norm = np.linalg.norm(psi)
    residual = max((np.linalg.norm(L @ v) / norm for v in basis), default=0.0)
    return StabilizerAlgebra(n, basis, float(residual), s)


def _rank(mat, tol: float) -> int:
    if mat.size == 0:
        return 0
    return int(np.sum(np.linalg.svd(mat, compute_uv=False) > tol))


def projection_dim(K: StabilizerAlgebra, k: int, tol: float = RANK_TOL) -> int:
    """Dimension of the image of ``K`` in the su(2) summand of qubit ``k`` (0-based)."""
    if not 0 <= k < K.n:
        raise IndexError(f"qubit {k} outside 0..{K.n - 1}")
    return _rank(K.qubit_block(k), tol)


def _null_rows(mat: np.ndarray, tol: float) -> np.ndarray:
    """Orthonormal rows spanning ``{x : mat @ x = 0}``."""
    if mat.shape[0] == 0:
        return np.eye(mat.shape[1])
    _, s, vt = np.linalg.svd(mat)
    rank = int(np.sum(s > tol))
    return vt[rank:]


def restrict(K: StabilizerAlgebra, qubits, tol: float = RANK_TOL) -> np.ndarray:
    """Basis (rows) of ``K`` intersected with the su(2) summands on ``qubits``.

    Elements of the intersection have zero phase and vanish outside ``qubits``.
    """
    keep = set(qubits)
    cols = [0] + [1 + 3 * k + j for k in range(K.n) if k not in keep for j in range(3)]
    coeffs = _null_rows(K.basis[:, cols].T, tol)
    sub = coeffs @ K.basis
    if len(sub):
        q, _ = np.linalg.qr(sub.T)
        sub = q.T
    return sub


def bracket_vectors(u, v) -> np.ndarray:
    """Bracket of two coordinate vectors, via explicit matrix commutators."""
    return AlgebraElement.from_vector(u).bracket(AlgebraElement.from_vector(v)).to_vector()


def closure_defect(rows: np.ndarray) -> float:
    """Largest component of a pairwise bracket outside ``span(rows)``."""
    if len(rows) < 2:
        return 0.0
    q, _ = np.linalg.qr(rows.T)
    worst = 0.0
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            w = bracket_vectors(rows[i], rows[j])
            worst = max(worst, float(np.linalg.norm(w - q @ (q.T @ w))))
    return worst


def decompose(K: StabilizerAlgebra, tol: float = RANK_TOL) -> StabilizerDecomposition:
    """Split the qubits into su(2) blocks, R1 and R0 (all 0-based).

    Raises :class:`MalformedAlgebra` when qubits with a 2- or 3-dimensional
    projection cannot be covered by blocks; this usually means the rank
    threshold misjudged the numerical nullity.
    """
    dims = [projection_dim(K, k, tol) for k in range(K.n)]
    r0 = tuple(k for k, d in enumerate(dims) if d == 0)
    r1 = tuple(k for k, d in enumerate(dims) if d == 1)
    remaining = [k for k, d in enumerate(dims) if d >= 2]
    blocks: list[tuple[int, ...]] = []
    algebras: list[np.ndarray] = []
    scale = max(1e-6, 1e3 * tol)
    for size in range(1, len(remaining) + 1):
        free = [k for k in remaining if not any(k in b for b in blocks)]
        for subset in combinations(free, size):
            if any(q in b for b in blocks for q in subset):
                continue
            sub = restrict(K, subset, tol)
            if len(sub) == 3 and closure_defect(sub) < scale:
                blocks.append(subset)
                algebras.append(sub)
    covered = {q for b in blocks for q in b}
    if covered != set(remaining):
        raise MalformedAlgebra(f"qubits {sorted(set(remaining) - covered)} belong to no su(2) block")
    return StabilizerDecomposition(blocks, r1, r0, algebras)


def check_block_full_weight(
    K,
    block,
    trials: int = 100,
    tol: float = 1e-8,
    rng: np.random.Generator | None = None,
) -> bool:
    """Sample random nonzero elements of a block algebra and test they touch every block qubit.

    ``K`` is either a :class:`StabilizerAlgebra`, in which case the algebra
    on ``block`` is ``restrict(K, block)``, or an explicit array of basis rows.
    """
    rng = np.random.default_rng() if rng is None else rng
    block_algebra = restrict(K, block) if isinstance(K, StabilizerAlgebra) else np.atleast_2d(K)
    if len(block_algebra) == 0:
        return False
    # exact form: each slot map must be injective on the block algebra
    for k in block:
        if _rank(block_algebra[:, 1 + 3 * k : 4 + 3 * k], tol) < len(block_algebra):
            return False
    for _ in range(trials):
        x = rng.normal(size=len(block_algebra))
        v = x @ block_algebra
        v /= np.linalg.norm(v)
        for k in block:
            if np.linalg.norm(v[1 + 3 * k : 4 + 3 * k]) <= tol:
                return False
    return True


def span_rows(elements, n: int) -> np.ndarray:
    """Orthonormal rows spanning the given ``n``-qubit algebra elements."""
    mat = np.array([e.to_vector() for e in elements], dtype=float).reshape(-1, 3 * n + 1)
    if len(mat) == 0 or not np.any(mat):
        return np.zeros((0, 3 * n + 1))
    u, s, vt = np.linalg.svd(mat, full_matrices=False)
    return vt[s > RANK_TOL * s[0]]


def conjugate_algebra(K: StabilizerAlgebra, U) -> np.ndarray:
    """Rows spanning ``U K U^dagger``."""
    return span_rows([M.conjugate(U) for M in K.elements()], K.n)
