"""Named example states and the inline state-spec syntax.

The eight 1-qubit states ``a`` .. ``h`` are the octahedron vertices
``|0>, |1>, |+>, |+i>, |->, |-i>`` plus two points on the xz great circle
(``d`` and ``e``) that form an equilateral triangle with ``|0>``.
"""
from __future__ import annotations

import numpy as np

from .chords import construct_M4
from .classify import ghz_representative
from .core import dicke_state
from .majorana import symmetrize

_S2 = np.sqrt(2)
_S3 = np.sqrt(3)

QUBITS = {
    "a": np.array([1, 0], dtype=complex),
    "b": np.array([0, 1], dtype=complex),
    "c": np.array([1, 1], dtype=complex) / _S2,
    "d": np.array([1 / 2, _S3 / 2], dtype=complex),
    "e": np.array([-1 / 2, _S3 / 2], dtype=complex),
    "f": np.array([1, 1j], dtype=complex) / _S2,
    "g": np.array([1, -1], dtype=complex) / _S2,
    "h": np.array([1, -1j], dtype=complex) / _S2,
}

SYMMETRIZED = {
    "isoceles": "abc",
    "phi": "ade",
    "phi-prime": "adef",
    "tau": "abcfgh",
}


def symmetrized(letters: str) -> np.ndarray:
    return symmetrize([QUBITS[ch] for ch in letters])


def ghz(n: int, t: float | None = None) -> np.ndarray:
    """``|0...0> + |1...1>``, or ``cos(pi t/4)|0...0> + sin(pi t/4)|1...1>`` when ``t`` is given."""
    if t is None:
        return dicke_state(n, 0) + dicke_state(n, n)
    return ghz_representative(n, t)


def product(n: int) -> np.ndarray:
    return dicke_state(n, 0)


def singlet() -> np.ndarray:
    """``|01> + |10>``, the symmetric representative of the singlet LU class."""
    return dicke_state(2, 1)


NAMES = sorted([*SYMMETRIZED, "m4", "singlet", "ghz:n[,t]", "dicke:n,k", "product:n", "file:path"])


def builtin_state(name: str) -> np.ndarray:
    """Resolve a named or parameterized example state.

    Accepted forms: ``isoceles``, ``phi``, ``phi-prime``, ``tau``, ``m4``,
    ``singlet``, ``ghz:n`` or ``ghz:n,t``, ``dicke:n,k``, ``product:n`` and
    ``sym:<letters>`` for a symmetrized product of the named 1-qubit states.
    """
    key, _, args = name.partition(":")
    key = key.strip().lower()
    try:
        params = [p for p in args.split(",") if p.strip()] if args else []
        if key in SYMMETRIZED and not params:
            return symmetrized(SYMMETRIZED[key])
        if key == "m4" and not params:
            return construct_M4()
        if key == "singlet" and not params:
            return singlet()
        if key == "ghz" and len(params) in (1, 2):
            return ghz(int(params[0]), float(params[1]) if len(params) == 2 else None)
        if key == "dicke" and len(params) == 2:
            return dicke_state(int(params[0]), int(params[1]))
        if key == "product" and len(params) == 1:
            return product(int(params[0]))
        if key == "sym" and args and set(args) <= set(QUBITS):
            return symmetrized(args)
    except ValueError as exc:
        raise ValueError(f"bad parameters in state spec {name!r}: {exc}") from exc
    raise KeyError(f"unknown state {name!r}; known: {', '.join(NAMES)}")
