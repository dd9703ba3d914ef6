"""Command-line front end.

Exit codes: 0 on success, 1 on domain errors (for example a non-symmetric
state passed to a symmetric-only command), 2 on I/O or parse errors. The
``verify-paper`` command exits 1 if any reproduction check fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import acceptance, catalog, io
from .algebra import RANK_TOL, MalformedAlgebra, decompose, stabilizer_algebra
from .chords import OddQubitCount, cdc_expand
from .classify import ClassificationError, classify, format_pauli, pauli_stabilizer
from .core import DEFAULT_TOL, NotSymmetric, num_qubits
from .discrete import DegenerateConfiguration, UnrecognizedGroup, finite_stabilizer
from .majorana import CLUSTER_TOL, majorana_roots, symmetrize

COMMANDS = ("classify", "stab-algebra", "stab-group", "majorana", "symmetrize", "cdc", "pauli", "verify-paper")
DOMAIN_ERRORS = (
    NotSymmetric,
    OddQubitCount,
    ClassificationError,
    DegenerateConfiguration,
    UnrecognizedGroup,
    MalformedAlgebra,
    ValueError,  # remaining precondition failures, e.g. too many qubits for Pauli enumeration
)
DEFAULT_MAX_N = 16
DEFAULT_MAX_M = 8


class UsageError(Exception):
    """Bad input that should map to exit code 2."""


@dataclass
class RunConfig:
    command: str
    state: str | None = None
    tol: float = DEFAULT_TOL
    rank_tol: float = RANK_TOL
    json: bool = False
    seed: int = 0
    max_n: int = DEFAULT_MAX_N
    max_m: int = DEFAULT_MAX_M
    qubits: tuple[str, ...] = ()
    fmt: str = "dense"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.tol <= 0 or self.rank_tol <= 0:
            raise UsageError("tolerances must be positive")
        if self.command not in ("verify-paper", "symmetrize") and not self.state:
            raise UsageError(f"{self.command} needs a state (positional spec or --input)")
        if self.command == "symmetrize" and not self.qubits:
            raise UsageError("symmetrize needs at least one qubit")


# -- input resolution -----------------------------------------------------------

def _declared_qubits(spec: str) -> int | None:
    """Qubit count implied by a spec without building the state, when cheap to tell."""
    key, _, args = spec.partition(":")
    if key in ("ghz", "dicke", "product") and args:
        try:
            return int(args.split(",")[0])
        except ValueError:
            return None
    if key == "file":
        try:
            with open(args) as fh:
                for line in fh:
                    line = line.strip()
                    if line.startswith("n="):
                        return int(line[2:])
                    if line and not line.startswith("#"):
                        return None
        except (OSError, ValueError):
            return None
    return None


def load_state(spec: str, max_n: int = DEFAULT_MAX_N) -> np.ndarray:
    declared = _declared_qubits(spec)
    if declared is not None and declared > max_n:
        raise UsageError(f"{spec!r} has {declared} qubits, above --max-n {max_n}")
    try:
        if spec.startswith("file:"):
            return io.read_state(spec[len("file:"):])
        return catalog.builtin_state(spec)
    except (OSError, io.StateFileError, KeyError, ValueError) as exc:
        raise UsageError(exc.args[0] if isinstance(exc, KeyError) else str(exc)) from exc


def parse_qubit(token: str) -> np.ndarray:
    """A named qubit ``a``..``h`` or a complex pair like ``1,1j`` or ``0.6,0.8``."""
    if token in catalog.QUBITS:
        return catalog.QUBITS[token]
    parts = token.split(",")
    try:
        if len(parts) != 2:
            raise ValueError
        q = np.array([complex(p.strip()) for p in parts])
    except ValueError as exc:
        raise UsageError(f"bad qubit {token!r}; use a letter a-h or 'alpha,beta'") from exc
    if not np.any(q):
        raise UsageError(f"qubit {token!r} is zero")
    return q


# -- commands ---------------------------------------------------------------------

def _clean(x: float, eps: float = 1e-12) -> float:
    # drop rounding noise and negative zeros from text output
    return 0.0 if abs(x) < eps else float(x)


def _cplx_text(z: complex) -> str:
    return f"{_clean(z.real):.12g} {_clean(z.imag):+.12g}i"


def cmd_classify(cfg, psi):
    report = classify(psi, cfg.tol, cfg.rank_tol)
    data = io.classification_to_json(report)
    if cfg.json:
        return data
    lines = [f"type: {report.type.value}", f"stabilizer dim: {report.stabilizer_dim}"]
    if report.ghz_t is not None:
        lines.append(f"t: {report.ghz_t:.12g}")
    if report.dicke_k is not None:
        lines.append(f"k: {report.dicke_k}")
    if report.canonicalizer is not None:
        lines.append(f"canonicalizer phase: {_cplx_text(report.canonicalizer.phase)}")
        for j, g in enumerate(report.canonicalizer.gates, 1):
            lines.append(f"  g{j}: " + "; ".join(" ".join(_cplx_text(x) for x in row) for row in g))
    return "\n".join(lines)


def cmd_stab_algebra(cfg, psi):
    K = stabilizer_algebra(psi, cfg.rank_tol)
    dec = decompose(K, cfg.rank_tol)
    if cfg.json:
        return io.algebra_to_json(K, dec)
    lines = [f"n: {K.n}", f"dim: {K.dim}", f"residual: {K.residual:.3e}"]
    lines.append("su(2) blocks: " + (", ".join("{" + ",".join(str(q + 1) for q in b) + "}" for b in dec.blocks) or "none"))
    lines.append("R1: " + (",".join(str(q + 1) for q in dec.r1_qubits) or "none"))
    lines.append("R0: " + (",".join(str(q + 1) for q in dec.r0_qubits) or "none"))
    for v in K.basis:
        coords = v[1:].reshape(-1, 3)
        coords = np.vectorize(_clean)(coords)
        lines.append(f"  t={_clean(v[0]): .6f}  " + "  ".join(f"({a: .6f},{b: .6f},{c: .6f})" for a, b, c in coords))
    return "\n".join(lines)


def cmd_stab_group(cfg, psi):
    report = finite_stabilizer(psi, cfg.tol)
    if cfg.json:
        return io.finite_stabilizer_to_json(report)
    lines = [f"order: {report.order}", f"label: {report.label}"]
    for e in report.elements:
        axis, angle = e.axis_angle
        axis = [_clean(x) for x in axis]
        lines.append(f"  angle {angle:.6f} axis ({axis[0]: .6f},{axis[1]: .6f},{axis[2]: .6f}) phase {_cplx_text(e.phase)}")
    return "\n".join(lines)


def cmd_majorana(cfg, psi):
    config = majorana_roots(psi, cfg.tol, CLUSTER_TOL)
    if cfg.json:
        return {
            "schema": io.SCHEMA,
            "n": config.n,
            "points": [{"xyz": p.tolist(), "multiplicity": int(m)} for p, m in zip(config.points, config.multiplicities)],
        }
    rows = [" ".join(f"{_clean(x):.12g}" for x in p) + f" {m}" for p, m in zip(config.points, config.multiplicities)]
    return "\n".join(rows)


def cmd_symmetrize(cfg, _psi):
    psi = symmetrize([parse_qubit(q) for q in cfg.qubits])
    if cfg.json:
        return {"schema": io.SCHEMA, "n": num_qubits(psi), "amplitudes": [io._cplx(z) for z in psi]}
    return io.format_state(psi, cfg.fmt, tol=0.0).rstrip("\n")


def cmd_cdc(cfg, psi):
    n = num_qubits(psi)
    if n % 2 == 0 and n // 2 > cfg.max_m:
        raise UsageError(f"m = {n // 2} pairs exceeds the cap {cfg.max_m}; raise it with --max-m")
    expansion = cdc_expand(psi, cfg.tol)
    items = [(P, c) for P, c in expansion.coefficients.items() if abs(c) > cfg.tol]
    if cfg.json:
        return {
            "schema": io.SCHEMA,
            "in_span": expansion.in_span(cfg.tol),
            "residual": expansion.residual,
            "coefficients": [{"partition": str(P), "c": io._cplx(c)} for P, c in items],
        }
    lines = [f"residual: {expansion.residual:.3e}", f"in span: {expansion.in_span(cfg.tol)}"]
    lines += [f"{P} {_clean(c.real):.12g} {_clean(c.imag):.12g}" for P, c in items]
    return "\n".join(lines)


def cmd_pauli(cfg, psi):
    words = pauli_stabilizer(psi, cfg.tol)
    if cfg.json:
        return {"schema": io.SCHEMA, "size": len(words), "elements": [format_pauli(p, w) for p, w in words]}
    return "\n".join([f"size: {len(words)}"] + [format_pauli(p, w) for p, w in words])


def cmd_verify(cfg, _psi):
    results = acceptance.run_all(cfg.seed)
    if cfg.json:
        return {
            "schema": io.SCHEMA,
            "seed": cfg.seed,
            "results": [{"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
        }, all(r.passed for r in results)
    passed = sum(r.passed for r in results)
    text = "\n".join([r.line() for r in results] + [f"{passed}/{len(results)} passed"])
    return text, passed == len(results)


HANDLERS = {
    "classify": cmd_classify,
    "stab-algebra": cmd_stab_algebra,
    "stab-group": cmd_stab_group,
    "majorana": cmd_majorana,
    "symmetrize": cmd_symmetrize,
    "cdc": cmd_cdc,
    "pauli": cmd_pauli,
    "verify-paper": cmd_verify,
}


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        psi = load_state(cfg.state, cfg.max_n) if cfg.state else None
        result = HANDLERS[cfg.command](cfg, psi)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except DOMAIN_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 1
    ok = True
    if cfg.command == "verify-paper":
        result, ok = result
    print(json.dumps(result, indent=2) if cfg.json else result, file=out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symstab",
        description="Local-unitary stabilizers and classification of symmetric multiqubit states.",
        epilog="State specs: " + ", ".join(catalog.NAMES) + ", sym:<letters>.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="numerical tolerance (default %(default)g)")
    common.add_argument("--rank-tol", type=float, default=RANK_TOL, help="relative singular-value cutoff (default %(default)g)")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="refuse states with more qubits (default %(default)d)")
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "symmetrize":
            p.add_argument("qubits", nargs="+", help="qubits as letters a-h or 'alpha,beta' pairs")
            p.add_argument("--format", dest="fmt", choices=("dense", "dicke"), default="dense")
        elif name != "verify-paper":
            p.add_argument("state", nargs="?", help="state spec, e.g. ghz:3, dicke:4,2, tau, file:path")
            p.add_argument("--input", help="read the state from a file (same as file:PATH)")
        if name == "cdc":
            p.add_argument("--max-m", type=int, default=DEFAULT_MAX_M, help="largest number of chords (default %(default)d)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    state = getattr(args, "state", None)
    if getattr(args, "input", None):
        if state:
            print("error: give either a state spec or --input, not both", file=sys.stderr)
            return 2
        state = "file:" + args.input
    try:
        cfg = RunConfig(
            command=args.command,
            state=state,
            tol=args.tol,
            rank_tol=args.rank_tol,
            json=args.json,
            seed=args.seed,
            max_n=args.max_n,
            max_m=getattr(args, "max_m", DEFAULT_MAX_M),
            qubits=tuple(getattr(args, "qubits", ()) or ()),
            fmt=getattr(args, "fmt", "dense"),
        )
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
