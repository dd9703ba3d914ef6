"""Reproduction checks for the worked examples and theorems.

Each ``check_*`` function returns a :class:`CheckResult`; :func:`run_all`
runs them in order with a fixed seed. Tolerances are fixed constants, not
tuning knobs.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm, subspace_angles
from scipy.optimize import minimize

from . import catalog
from .algebra import span_rows, stabilizer_algebra
from .chords import (
    all_pair_partitions,
    cdc_expand,
    construct_M4,
    count_partitions_hitting,
    enumerate_noncrossing,
    has_crossing,
    hat_index,
    permute_qubits,
    verify_lemma1,
)
from .classify import StateType, classify, ghz_representative, pauli_stabilizer
from .core import (
    AlgebraElement,
    LocalUnitaryElement,
    X,
    Y,
    apply_algebra,
    apply_group,
    apply_local,
    dicke_state,
    is_symmetric,
    num_qubits,
    random_lu,
    random_su2,
    random_symmetric_state,
    so3_image,
    su2_from_axis_angle,
)
from .discrete import finite_stabilizer, lift_and_verify, rotation_order, stabilizer_residual
from .majorana import fidelity, majorana_qubits, symmetrize


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.name}: {self.detail}"


def max_principal_angle(rows_a, rows_b) -> float:
    """Largest principal angle between two row spaces; ``inf`` if dimensions differ."""
    rows_a, rows_b = np.atleast_2d(rows_a), np.atleast_2d(rows_b)
    if len(rows_a) != len(rows_b):
        return np.inf
    if len(rows_a) == 0:
        return 0.0
    return float(np.max(subspace_angles(rows_a.T, rows_b.T)))


def _uniform_scramble(n: int, rng) -> LocalUnitaryElement:
    return LocalUnitaryElement.uniform(random_su2(rng), n, np.exp(2j * np.pi * rng.random()))


# -- generator sets from the classification theorem ---------------------------------

def product_generators(n: int) -> list[AlgebraElement]:
    return [AlgebraElement(-1.0, AlgebraElement.single(n, k, "A").coords) for k in range(n)]


def ghz_generators(n: int) -> list[AlgebraElement]:
    first = AlgebraElement.single(n, 0, "A")
    return [first - AlgebraElement.single(n, k, "A") for k in range(1, n)]


def singlet_generators() -> list[AlgebraElement]:
    s = AlgebraElement.single
    return [s(2, 0, "A") + s(2, 1, "A"), s(2, 0, "B") - s(2, 1, "B"), s(2, 0, "C") - s(2, 1, "C")]


def dicke_generator(n: int, k: int, phase_sign: int = 1) -> AlgebraElement:
    """``i(2k - n) + sum_j A^(j)``; ``phase_sign=-1`` gives ``i(n - 2k) + ...`` instead."""
    return AlgebraElement(phase_sign * (2 * k - n), np.tile([1.0, 0.0, 0.0], (n, 1)))


def phi_generators() -> list[AlgebraElement]:
    s = AlgebraElement.single
    return [s(3, 0, "B") - s(3, 1, "B"), s(3, 0, "B") - s(3, 2, "B")]


# -- criteria -------------------------------------------------------------------------

def check_dimensions(rng) -> CheckResult:
    start = time.perf_counter()
    cases = [(f"product({n})", catalog.product(n), n) for n in range(1, 8)]
    for n in range(3, 7):
        cases.append((f"ghz({n})", catalog.ghz(n), n - 1))
        cases.append((f"2|0..0>+|1..1> n={n}", 2 * dicke_state(n, 0) + dicke_state(n, n), n - 1))
    cases.append(("singlet", catalog.singlet(), 3))
    cases += [(f"dicke({n},{k})", dicke_state(n, k), 1) for n in range(3, 8) for k in range(1, n)]
    cases.append(("isoceles", catalog.builtin_state("isoceles"), 0))
    bad = [f"{name}: {stabilizer_algebra(psi).dim} != {want}" for name, psi, want in cases
           if stabilizer_algebra(psi).dim != want]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 10
    return CheckResult(1, "stabilizer dimensions", ok, f"{len(cases)} states, {elapsed:.2f}s" + (f"; {bad}" if bad else ""))


def check_generators(rng) -> CheckResult:
    cases = []
    for n in range(2, 6):
        cases.append((f"product n={n}", catalog.product(n), product_generators(n)))
    for n in range(3, 6):
        cases.append((f"ghz n={n}", catalog.ghz(n), ghz_generators(n)))
    cases.append(("singlet", catalog.singlet(), singlet_generators()))
    for n in range(3, 7):
        for k in range(1, n):
            cases.append((f"dicke({n},{k})", dicke_state(n, k), [dicke_generator(n, k)]))
    worst_res, worst_angle, bad = 0.0, 0.0, []
    for name, psi, gens in cases:
        res = max(np.linalg.norm(apply_algebra(M, psi)) / np.linalg.norm(psi) for M in gens)
        angle = max_principal_angle(span_rows(gens, gens[0].n), stabilizer_algebra(psi).basis)
        worst_res, worst_angle = max(worst_res, res), max(worst_angle, angle)
        if res >= 1e-10 or angle >= 1e-7:
            bad.append(name)
    printed = sum(
        np.linalg.norm(apply_algebra(dicke_generator(n, k, -1), dicke_state(n, k))) > 1e-6
        for n in range(3, 7) for k in range(1, n) if 2 * k != n
    )
    detail = (f"max residual {worst_res:.1e}, max angle {worst_angle:.1e}; "
              f"the i(n-2k) sign fails to annihilate {printed} Dicke states with k != n/2")
    return CheckResult(2, "generator conformance", not bad, detail + (f"; failed {bad}" if bad else ""))


def check_scramble(rng) -> CheckResult:
    worst_t, failures = 0.0, []
    for trial in range(100):
        n = int(rng.integers(3, 7))
        t0 = float(rng.uniform(0.02, 1.0))
        psi = apply_group(_uniform_scramble(n, rng), ghz_representative(n, t0))
        r = classify(psi)
        if r.type is not StateType.GHZ:
            failures.append(f"ghz n={n} -> {r.type.value}")
            continue
        worst_t = max(worst_t, abs(r.ghz_t - t0))
    for trial in range(100):
        n = int(rng.integers(3, 7))
        k = int(rng.integers(1, n))
        psi = apply_group(_uniform_scramble(n, rng), dicke_state(n, k))
        r = classify(psi)
        if r.type is not StateType.DICKE or r.dicke_k != min(k, n - k):
            failures.append(f"dicke({n},{k}) -> {r.type.value} k={r.dicke_k}")
    ok = not failures and worst_t < 1e-6
    return CheckResult(3, "scramble and recover", ok, f"max |t - t0| = {worst_t:.1e}" + (f"; {failures[:3]}" if failures else ""))


def check_phi(rng) -> CheckResult:
    psi = catalog.builtin_state("phi")
    K = stabilizer_algebra(psi)
    angle = max_principal_angle(span_rows(phi_generators(), 3), K.basis)
    kind = classify(psi).type
    ok = K.dim == 2 and angle < 1e-7 and kind is StateType.GHZ
    return CheckResult(4, "phi example", ok, f"dim {K.dim}, angle {angle:.1e}, type {kind.value}")


def phi_prime_element() -> tuple[complex, np.ndarray]:
    """The order-3 rotation about y given as a stabilizing element of phi'."""
    return np.exp(-2j * np.pi / 3), expm(2j * np.pi / 3 * Y)


def check_phi_prime(rng) -> CheckResult:
    psi = catalog.builtin_state("phi-prime")
    dim = stabilizer_algebra(psi).dim
    phase, g = phi_prime_element()
    res = stabilizer_residual(psi, phase, g)
    lifted = lift_and_verify(psi, so3_image(g))
    lifted_res = stabilizer_residual(psi, *lifted) if lifted is not None else np.inf
    report = finite_stabilizer(psi)
    orders = sorted({rotation_order(R) for R in report.rotations})
    element_order = rotation_order(so3_image(g))
    has_c4 = 4 in orders
    ok = dim == 0 and res < 1e-9 and lifted_res < 1e-9 and has_c4
    detail = (f"dim {dim}, element residual {res:.1e} (lifted {lifted_res:.1e}), element order {element_order}, "
              f"group order {report.order} ({report.label}), element orders {orders}; "
              f"cyclic subgroup of order 4 {'found' if has_c4 else 'absent'}")
    return CheckResult(5, "phi' example", ok, detail)


def check_tau(rng) -> CheckResult:
    report = finite_stabilizer(catalog.builtin_state("tau"))
    ok = report.order == 24 and report.label == "octahedral"
    return CheckResult(6, "octahedral tau", ok, f"order {report.order}, {report.label}")


def xxx_residual(report) -> float:
    XXX = np.kron(np.kron(X, X), X)
    best = np.inf
    for e in report.elements:
        op = e.phase * np.kron(np.kron(e.g, e.g), e.g)
        best = min(best, np.linalg.norm(op - XXX))
    return float(best)


def check_isoceles(rng) -> CheckResult:
    psi = catalog.builtin_state("isoceles")
    report = finite_stabilizer(psi)
    op_res = xxx_residual(report)
    XXX = np.kron(np.kron(X, X), X)
    state_res = np.linalg.norm(XXX @ psi - psi) / np.linalg.norm(psi)
    ok = op_res < 1e-9 and state_res < 1e-9
    return CheckResult(7, "isoceles XXX", ok, f"operator match {op_res:.1e}, state residual {state_res:.1e}, group order {report.order}")


def check_lemma1(rng) -> CheckResult:
    reports = [verify_lemma1(n) for n in (2, 4, 6)]
    ok = all(not r["inSpan"] and r["relativeResidual"] > 0.1 for r in reports)
    detail = ", ".join(f"n={r['n']}: residual {r['relativeResidual']:.3f}" for r in reports)
    return CheckResult(8, "no symmetric chord diagram construction", ok, detail)


def check_catalan(rng) -> CheckResult:
    counts = [len(enumerate_noncrossing(m)) for m in range(1, 5)]
    brute = [sum(not has_crossing(P) for P in all_pair_partitions(m)) for m in range(1, 5)]
    ok = counts == [1, 2, 5, 14] == brute
    return CheckResult(9, "Catalan counts", ok, f"enumerated {counts}, brute force {brute}")


def check_hat_index(rng) -> CheckResult:
    count = count_partitions_hitting(8, hat_index(4))
    return CheckResult(10, "hat-index partition count", count == 2, f"{hat_index(4)} hit by {count} partitions")


def check_m4(rng) -> CheckResult:
    psi = construct_M4()
    res = cdc_expand(psi).residual
    sym = is_symmetric(psi)
    perms = [(1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)]
    inv = max(np.linalg.norm(permute_qubits(psi, p) - psi) for p in perms)
    ok = res < 1e-9 and not sym and inv < 1e-12
    return CheckResult(11, "M4 properties", ok, f"cdc residual {res:.1e}, symmetric {sym}, double-transposition defect {inv:.1e}")


def check_pauli(rng) -> CheckResult:
    sizes = {}
    for n in (3, 4):
        sizes[f"ghz{n}"] = (len(pauli_stabilizer(catalog.ghz(n))), 2**n)
        sizes[f"gghz{n}"] = (len(pauli_stabilizer(2 * dicke_state(n, 0) + dicke_state(n, n))), 2 ** (n - 1))
    words = {w for phase, w in pauli_stabilizer(dicke_state(4, 2)) if phase == 1}
    ok = all(a == b for a, b in sizes.values()) and {"ZZZZ", "XXXX", "YYYY"} <= words
    detail = ", ".join(f"{k} {a} (want {b})" for k, (a, b) in sizes.items())
    return CheckResult(12, "Pauli stabilizer sizes", ok, detail + f"; dicke(4,2) has {sorted(words)}")


def check_majorana_round_trip(rng) -> CheckResult:
    worst = 0.0
    for _ in range(200):
        n = int(rng.integers(1, 8))
        psi = random_symmetric_state(n, rng)
        worst = max(worst, 1 - fidelity(symmetrize(majorana_qubits(psi)), psi))
    return CheckResult(13, "Majorana round trip", worst < 1e-8, f"worst fidelity deficit {worst:.1e} over 200 states")


def covariance_states(rng):
    """A stream of test states mixing generic states with LU images of structured ones."""
    sing = np.array([0, 1, -1, 0], dtype=complex)
    while True:
        n = int(rng.integers(2, 6))
        choice = rng.integers(5)
        if choice == 0:
            psi = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
        elif choice == 1:
            psi = ghz_representative(n, rng.uniform(0.1, 1))
        elif choice == 2:
            psi = dicke_state(n, int(rng.integers(0, n + 1)))
        elif choice == 3 and n >= 2:
            psi = np.kron(sing, dicke_state(n - 2, 0)) if n > 2 else sing
        else:
            psi = random_symmetric_state(n, rng)
        yield apply_group(random_lu(n, rng), psi)


def check_covariance(rng) -> CheckResult:
    worst, dims = 0.0, []
    states = covariance_states(rng)
    for _ in range(50):
        psi = next(states)
        n = int(np.log2(len(psi)))
        U = random_lu(n, rng)
        K = stabilizer_algebra(psi)
        moved = np.array([M.conjugate(U).to_vector() for M in K.elements()]).reshape(-1, 3 * n + 1)
        worst = max(worst, max_principal_angle(moved, stabilizer_algebra(apply_group(U, psi)).basis))
        dims.append(K.dim)
    return CheckResult(14, "conjugation covariance", worst < 1e-7,
                       f"max angle {worst:.1e}, stabilizer dims seen {sorted(set(dims))}")


def _quaternion_su2(q) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    q = q / np.linalg.norm(q)
    a, b = q[0] + 1j * q[3], q[2] + 1j * q[1]
    return np.array([[a, -np.conj(b)], [b, np.conj(a)]])


def su2_from_rotation_vector(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    angle = np.linalg.norm(v)
    return su2_from_axis_angle(v / angle, angle) if angle > 0 else np.eye(2, dtype=complex)


def overlap_deficits(psi, gates) -> np.ndarray:
    """``1 - |<psi| g^{(x)n} psi>| / ||psi||^2`` for a stack of ``g``."""
    psi = np.asarray(psi, dtype=complex)
    n = num_qubits(psi)
    gates = np.asarray(gates)
    T = np.broadcast_to(psi.reshape((1,) + (2,) * n), (len(gates),) + (2,) * n)
    for k in range(n):
        T = np.moveaxis(np.einsum("nab,n...b->n...a", gates, np.moveaxis(T, k + 1, -1)), -1, k + 1)
    ov = T.reshape(len(gates), -1) @ psi.conj()
    return 1 - np.abs(ov) / np.vdot(psi, psi).real


def brute_force_stabilizer_search(psi, rng, grid: int = 20000, refine: int = 200):
    """Sample SU(2) uniformly and refine the best samples by local optimization of the overlap.

    Returns ``(refined, grid_rotations, grid_deficits)`` where ``refined`` holds
    ``(rotation, deficit)`` for every locally optimized point.
    """
    quats = rng.normal(size=(grid, 4))
    quats /= np.linalg.norm(quats, axis=1, keepdims=True)
    gates = np.array([_quaternion_su2(q) for q in quats])
    deficits = overlap_deficits(psi, gates)
    refined = []
    for idx in np.argsort(deficits)[:refine]:
        # local chart g0 exp(-i v.sigma / 2) keeps the search three-dimensional
        g0 = gates[idx]
        fun = lambda v: overlap_deficits(psi, (g0 @ su2_from_rotation_vector(v))[None])[0]
        opt = minimize(fun, np.zeros(3), method="BFGS", options={"gtol": 1e-12})
        refined.append((so3_image(g0 @ su2_from_rotation_vector(opt.x)), float(opt.fun)))
    rotations = np.array([so3_image(g) for g in gates])
    return refined, rotations, deficits


def check_completeness(rng) -> CheckResult:
    psi = catalog.builtin_state("isoceles")
    report = finite_stabilizer(psi)
    reported = report.rotations
    refined, rotations, deficits = brute_force_stabilizer_search(psi, rng)

    def dist(R):
        return min(np.linalg.norm(R - S) for S in reported)

    stray = [d for R, d in refined if d < 1e-4 and dist(R) > 1e-3]
    found = sum(d < 1e-10 for _, d in refined)
    far = np.array([dist(R) > 0.1 for R in rotations])
    far_min = float(deficits[far].min())
    ok = not stray and far_min > 1e-4
    detail = (f"{len(rotations)} grid points, {len(refined)} refinements ({found} converged onto the "
              f"order-{report.order} group), {len(stray)} strays, min deficit away from group {far_min:.2e}")
    return CheckResult(15, "brute-force completeness (isoceles)", ok, detail)


CHECKS = [
    check_dimensions,
    check_generators,
    check_scramble,
    check_phi,
    check_phi_prime,
    check_tau,
    check_isoceles,
    check_lemma1,
    check_catalan,
    check_hat_index,
    check_m4,
    check_pauli,
    check_majorana_round_trip,
    check_covariance,
    check_completeness,
]


def run_check(check, seed: int = 0) -> CheckResult:
    index = CHECKS.index(check)
    return check(np.random.default_rng([seed, index]))


def run_all(seed: int = 0) -> list[CheckResult]:
    return [run_check(check, seed) for check in CHECKS]
