"""Pair partitions, singlet products and chord diagram constructions.

Qubit labels in this module are 1-based, matching the usual way chord
diagrams are drawn: labels ``1..2m`` placed in order around a circle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .core import DEFAULT_TOL, as_state, bits_to_index, complement, dicke_state, num_qubits


class OddQubitCount(ValueError):
    pass


@dataclass(frozen=True, order=True)
class PairPartition:
    """A perfect matching of ``{1, ..., 2m}``, stored as sorted ``(i, j)`` pairs with ``i < j``."""

    chords: tuple[tuple[int, int], ...]

    def __post_init__(self):
        chords = tuple(sorted(tuple(sorted(int(x) for x in c)) for c in self.chords))
        labels = [x for c in chords for x in c]
        if any(len(c) != 2 for c in chords) or sorted(labels) != list(range(1, len(labels) + 1)):
            raise ValueError(f"not a pair partition of 1..{len(labels)}: {chords}")
        object.__setattr__(self, "chords", chords)

    @property
    def m(self) -> int:
        return len(self.chords)

    @property
    def n(self) -> int:
        return 2 * self.m

    @classmethod
    def parse(cls, text: str) -> "PairPartition":
        """Parse the text form ``"1-4,2-3"``."""
        try:
            chords = [tuple(int(x) for x in part.split("-")) for part in text.strip().split(",")]
        except ValueError as exc:
            raise ValueError(f"bad partition {text!r}") from exc
        return cls(tuple(chords))

    def __str__(self) -> str:
        return ",".join(f"{i}-{j}" for i, j in self.chords)


def parse_partitions(text: str) -> list[PairPartition]:
    return [PairPartition.parse(line) for line in text.splitlines() if line.strip() and not line.startswith("#")]


def format_partitions(partitions) -> str:
    return "".join(f"{p}\n" for p in partitions)


def has_crossing(P: PairPartition) -> bool:
    return any(i < k < j < l for i, j in P.chords for k, l in P.chords)


@lru_cache(maxsize=None)
def _noncrossing(lo: int, hi: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    if lo > hi:
        return ((),)
    out = []
    # lo pairs with j leaving an even number of labels strictly inside
    for j in range(lo + 1, hi + 1, 2):
        for inner in _noncrossing(lo + 1, j - 1):
            for outer in _noncrossing(j + 1, hi):
                out.append(((lo, j),) + inner + outer)
    return tuple(out)


def enumerate_noncrossing(m: int) -> list[PairPartition]:
    """All noncrossing pair partitions of ``{1, ..., 2m}``; there are Catalan(m) of them."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return sorted(PairPartition(c) for c in _noncrossing(1, 2 * m))


def all_pair_partitions(m: int) -> list[PairPartition]:
    """Every perfect matching of ``{1, ..., 2m}`` (``(2m-1)!!`` of them)."""

    def rec(labels):
        if not labels:
            yield ()
            return
        first, rest = labels[0], labels[1:]
        for idx, other in enumerate(rest):
            for tail in rec(rest[:idx] + rest[idx + 1 :]):
                yield ((first, other),) + tail

    return [PairPartition(c) for c in rec(tuple(range(1, 2 * m + 1)))]


def singlet_product(P: PairPartition) -> np.ndarray:
    """``(|01> - |10>)`` on every chord; the smaller label carries the first slot."""
    n = P.n
    psi = np.zeros(2**n, dtype=complex)
    for mask in range(2**P.m):
        bits = [0] * n
        sign = 1
        for c, (i, j) in enumerate(P.chords):
            if (mask >> c) & 1:
                bits[i - 1], bits[j - 1] = 1, 0
                sign = -sign
            else:
                bits[i - 1], bits[j - 1] = 0, 1
        psi[bits_to_index(bits)] = sign
    return psi


def leading_index(P: PairPartition) -> tuple[str, str]:
    """``(I_P, I_P^c)``: the first basis string of ``s_P`` and its complement."""
    if has_crossing(P):
        raise ValueError(f"partition {P} has a crossing")
    bits = ["0"] * P.n
    for _, j in P.chords:
        bits[j - 1] = "1"
    lead = "".join(bits)
    return lead, complement(lead)


@dataclass(frozen=True)
class CDCExpansion:
    coefficients: dict = field(repr=False)  # PairPartition -> complex
    residual: float

    def in_span(self, tol: float = DEFAULT_TOL) -> bool:
        return self.residual <= tol


def singlet_matrix(m: int) -> tuple[list[PairPartition], np.ndarray]:
    parts = enumerate_noncrossing(m)
    return parts, np.stack([singlet_product(P) for P in parts], axis=1)


def cdc_expand(psi, tol: float = DEFAULT_TOL) -> CDCExpansion:
    """Least-squares coefficients of ``psi`` on the noncrossing singlet products.

    ``residual`` is relative to ``||psi||``. When it is below ``tol`` the
    coefficients are cross-checked against the amplitudes at the leading
    indices, which determine them uniquely.
    """
    psi = as_state(psi)
    n = num_qubits(psi)
    if n % 2:
        raise OddQubitCount(f"chord diagram constructions need an even qubit count, got {n}")
    parts, S = singlet_matrix(n // 2)
    c, *_ = np.linalg.lstsq(S, psi, rcond=None)
    norm = np.linalg.norm(psi)
    residual = float(np.linalg.norm(S @ c - psi) / norm)
    if residual <= tol:
        shortcut = leading_coefficients(psi, parts, S)
        if np.max(np.abs(shortcut - c)) > 1e3 * tol * norm:
            raise ArithmeticError("least-squares and leading-index coefficients disagree")
    return CDCExpansion(dict(zip(parts, c)), residual)


def leading_coefficients(psi, parts=None, S=None) -> np.ndarray:
    """Solve for ``c_P`` from the amplitudes at the leading indices alone.

    Restricted to the rows ``I_P`` the singlet products form a unitriangular
    square system, so these amplitudes fix the coefficients of any state in
    the span.
    """
    psi = np.asarray(psi, dtype=complex)
    if parts is None or S is None:
        parts, S = singlet_matrix(num_qubits(psi) // 2)
    rows = [bits_to_index(leading_index(P)[0]) for P in parts]
    return np.linalg.solve(S[rows], psi[rows])


def verify_lemma1(n: int, tol: float = DEFAULT_TOL) -> dict:
    """Project the weight-``n/2`` Dicke state onto the singlet-product span.

    A symmetric CDC would have to be a multiple of that Dicke state, so a
    residual bounded away from zero shows no symmetric CDC exists at this ``n``.
    """
    if n < 2 or n % 2:
        raise OddQubitCount(f"n must be a positive even integer, got {n}")
    expansion = cdc_expand(dicke_state(n, n // 2), tol)
    return {"n": n, "inSpan": expansion.in_span(tol), "relativeResidual": expansion.residual}


def hat_index(m: int) -> str:
    """The string ``0^(m-1) 1 0 1^(m-1)`` used to rule out even ``m``."""
    return "0" * (m - 1) + "1" + "0" + "1" * (m - 1)


def count_partitions_hitting(n: int, bits: str) -> int:
    """Number of noncrossing ``P`` whose ``s_P`` has a nonzero amplitude at ``|bits>``."""
    if n % 2 or len(bits) != n:
        raise ValueError("need an even n and an n-bit string")
    # s_P[I] != 0 exactly when every chord joins opposite bits
    return sum(all(bits[i - 1] != bits[j - 1] for i, j in P.chords) for P in enumerate_noncrossing(n // 2))


def construct_M4() -> np.ndarray:
    """The 4-qubit state maximizing the average two-qubit bipartite entanglement."""
    w = np.exp(2j * np.pi / 3)
    psi = np.zeros(16, dtype=complex)
    for bits, amp in [
        ("0011", 1), ("1100", 1),
        ("1010", w), ("0101", w),
        ("1001", w**2), ("0110", w**2),
    ]:
        psi[int(bits, 2)] = amp
    return psi / np.sqrt(6)


def permute_qubits(psi, perm) -> np.ndarray:
    """Move qubit ``k`` to position ``perm[k]`` (0-based)."""
    psi = np.asarray(psi, dtype=complex)
    n = num_qubits(psi)
    tensor = psi.reshape((2,) * n)
    return np.moveaxis(tensor, list(range(n)), list(perm)).reshape(-1)
