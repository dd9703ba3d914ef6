"""Text state files and JSON report serialization.

State files look like::

    n=3
    format=dense
    000 0.7071 0
    111 0.7071 0

or, for symmetric states, ``format=dicke`` followed by ``<k> <re> <im>``
lines. Omitted entries are zero, duplicates are rejected, and ``#`` starts a
comment line.
"""
from __future__ import annotations

import numpy as np

from .classify import ClassificationReport
from .core import LocalUnitaryElement, dicke_expand, dicke_reconstruct, index_to_bits, num_qubits
from .discrete import FiniteStabilizerReport

SCHEMA = 1


class StateFileError(ValueError):
    pass


def parse_state(text: str) -> np.ndarray:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 2 or not lines[0].startswith("n=") or not lines[1].startswith("format="):
        raise StateFileError("state file must start with 'n=<int>' and 'format=dense|dicke'")
    try:
        n = int(lines[0][2:])
    except ValueError as exc:
        raise StateFileError(f"bad qubit count {lines[0]!r}") from exc
    if n < 1:
        raise StateFileError("qubit count must be positive")
    fmt = lines[1][len("format="):].strip()
    if fmt not in ("dense", "dicke"):
        raise StateFileError(f"unknown format {fmt!r}")
    size = 2**n if fmt == "dense" else n + 1
    values = np.zeros(size, dtype=complex)
    seen = set()
    for ln in lines[2:]:
        parts = ln.split()
        if len(parts) != 3:
            raise StateFileError(f"expected '<index> <re> <im>', got {ln!r}")
        key, re, im = parts
        if fmt == "dense":
            if len(key) != n or set(key) - {"0", "1"}:
                raise StateFileError(f"{key!r} is not an {n}-bit string")
            idx = int(key, 2)
        else:
            try:
                idx = int(key)
            except ValueError as exc:
                raise StateFileError(f"bad Dicke index {key!r}") from exc
            if not 0 <= idx <= n:
                raise StateFileError(f"Dicke index {idx} outside 0..{n}")
        if idx in seen:
            raise StateFileError(f"duplicate index {key!r}")
        seen.add(idx)
        try:
            values[idx] = complex(float(re), float(im))
        except ValueError as exc:
            raise StateFileError(f"bad amplitude in {ln!r}") from exc
    psi = values if fmt == "dense" else dicke_reconstruct(values)
    if not np.any(psi):
        raise StateFileError("the zero vector is not a state")
    return psi


def format_state(psi, fmt: str = "dense", tol: float = 0.0) -> str:
    psi = np.asarray(psi, dtype=complex)
    n = num_qubits(psi)
    out = [f"n={n}", f"format={fmt}"]
    if fmt == "dense":
        for idx, amp in enumerate(psi):
            if abs(amp) > tol:
                out.append(f"{index_to_bits(idx, n)} {float(amp.real)!r} {float(amp.imag)!r}")
    elif fmt == "dicke":
        for k, amp in enumerate(dicke_expand(psi)):
            if abs(amp) > tol:
                out.append(f"{k} {float(amp.real)!r} {float(amp.imag)!r}")
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return "\n".join(out) + "\n"


def read_state(path) -> np.ndarray:
    with open(path) as fh:
        return parse_state(fh.read())


# -- JSON -----------------------------------------------------------------------

def _cplx(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _matrix(g) -> list:
    return [[_cplx(x) for x in row] for row in np.asarray(g)]


def lu_to_json(U: LocalUnitaryElement) -> dict:
    return {"phase": _cplx(U.phase), "gates": [_matrix(g) for g in U.gates]}


def lu_from_json(data: dict) -> LocalUnitaryElement:
    gates = np.array([[[complex(*x) for x in row] for row in g] for g in data["gates"]])
    return LocalUnitaryElement(complex(*data["phase"]), gates)


def classification_to_json(report: ClassificationReport) -> dict:
    return {
        "schema": SCHEMA,
        "type": report.type.value,
        "t": report.ghz_t,
        "k": report.dicke_k,
        "stabilizer_dim": report.stabilizer_dim,
        "canonicalizer": None if report.canonicalizer is None else lu_to_json(report.canonicalizer),
    }


def finite_stabilizer_to_json(report: FiniteStabilizerReport) -> dict:
    elements = []
    for e in report.elements:
        axis, angle = e.axis_angle
        elements.append({"phase": _cplx(e.phase), "g": _matrix(e.g), "axis": axis.tolist(), "angle": angle})
    return {"schema": SCHEMA, "order": report.order, "label": report.label, "elements": elements}


def algebra_to_json(K, decomposition=None) -> dict:
    out = {
        "schema": SCHEMA,
        "n": K.n,
        "dim": K.dim,
        "residual": K.residual,
        "basis": [{"t": float(v[0]), "coords": v[1:].reshape(-1, 3).tolist()} for v in K.basis],
    }
    if decomposition is not None:
        # 1-based qubit labels in reports
        out["blocks"] = [[q + 1 for q in b] for b in decomposition.blocks]
        out["r1"] = [q + 1 for q in decomposition.r1_qubits]
        out["r0"] = [q + 1 for q in decomposition.r0_qubits]
    return out
