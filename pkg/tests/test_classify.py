import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symstab import catalog
from symstab.classify import (
    ClassificationError,
    DegenerateGHZ,
    StateType,
    canonical_fidelity,
    canonical_representative,
    canonicalize_dicke,
    classify,
    format_pauli,
    ghz_parameter,
    ghz_representative,
    pauli_matrix,
    pauli_stabilizer,
)
from symstab.core import (
    LocalUnitaryElement,
    NotSymmetric,
    apply_group,
    dicke_state,
    random_su2,
    random_symmetric_state,
)
from symstab.majorana import majorana_roots, symmetrize

from strategies import seeds, symmetric_states


def scramble(psi, rng):
    n = int(np.log2(len(psi)))
    return apply_group(LocalUnitaryElement.uniform(random_su2(rng), n, np.exp(2j * np.pi * rng.random())), psi)


@pytest.mark.parametrize(
    "psi, kind",
    [
        (catalog.product(3), StateType.PRODUCT),
        (catalog.ghz(3), StateType.GHZ),
        (catalog.singlet(), StateType.SINGLET),
        (dicke_state(5, 2), StateType.DICKE),
        (catalog.builtin_state("isoceles"), StateType.DISCRETE),
    ],
)
def test_classify_examples(psi, kind):
    assert classify(psi).type is kind


def test_classify_parameters():
    assert np.isclose(classify(catalog.ghz(3)).ghz_t, 1)
    assert classify(dicke_state(5, 2)).dicke_k == 2
    assert classify(dicke_state(4, 3)).dicke_k == 1


def test_ghz_parameter_examples():
    t, _ = ghz_parameter(catalog.ghz(4))
    assert np.isclose(t, 1)
    psi = np.zeros(8, dtype=complex)
    psi[0], psi[-1] = np.cos(np.pi / 8), np.sin(np.pi / 8)
    t, _ = ghz_parameter(psi)
    assert np.isclose(t, 0.5)


def test_ghz_parameter_degenerate():
    with pytest.raises(DegenerateGHZ):
        ghz_parameter(catalog.product(3))


def test_canonicalize_dicke_identity():
    k, U = canonicalize_dicke(dicke_state(4, 2))
    assert k == 2
    for g in U.gates:
        # identity up to a global sign per qubit
        assert np.allclose(np.abs(g), np.eye(2))


def test_canonicalize_dicke_wrong_dimension():
    with pytest.raises(ClassificationError):
        canonicalize_dicke(catalog.ghz(3))


def test_not_symmetric_rejected():
    with pytest.raises(NotSymmetric):
        classify(np.array([0, 1, -1, 0]))


def test_ghz_scramble_recover():
    rng = np.random.default_rng(5)
    for _ in range(50):
        n = int(rng.integers(3, 7))
        t0 = rng.uniform(0.01, 1)
        r = classify(scramble(ghz_representative(n, t0), rng))
        assert r.type is StateType.GHZ and abs(r.ghz_t - t0) < 1e-6


def test_dicke_scramble_recover():
    rng = np.random.default_rng(6)
    for _ in range(50):
        r = classify(scramble(dicke_state(6, 2), rng))
        assert r.type is StateType.DICKE and r.dicke_k == 2


def canonical_states():
    states = [catalog.product(n) for n in (1, 2, 4)]
    states += [ghz_representative(n, t) for n in (3, 5) for t in (0.3, 1.0)]
    states += [catalog.singlet()]
    states += [dicke_state(n, k) for n in (3, 4, 6) for k in range(1, n)]
    return states


@pytest.mark.parametrize("psi", canonical_states(), ids=lambda p: f"n{int(np.log2(len(p)))}")
def test_report_is_lu_invariant(psi):
    rng = np.random.default_rng(len(psi))
    ref = classify(psi)
    for _ in range(100):
        r = classify(scramble(psi, rng))
        assert r.type is ref.type and r.stabilizer_dim == ref.stabilizer_dim
        assert r.dicke_k == ref.dicke_k
        if ref.ghz_t is not None:
            assert abs(r.ghz_t - ref.ghz_t) < 1e-6
        assert canonical_fidelity(r, scramble(psi, rng)) < 1.0 + 1e-12


@settings(max_examples=30)
@given(st.sampled_from(canonical_states()), seeds)
def test_canonicalizer_validity(psi, seed):
    v = scramble(psi, np.random.default_rng(seed))
    r = classify(v)
    assert r.canonicalizer.is_valid()
    assert canonical_fidelity(r, v) > 1 - 1e-8
    rep = canonical_representative(r, int(np.log2(len(psi))))
    out = apply_group(r.canonicalizer, v)
    # global phase fixed so the largest amplitude is real and positive
    j = int(np.argmax(np.abs(out)))
    assert abs(out[j].imag) < 1e-9 and out[j].real > 0
    assert np.allclose(out / np.linalg.norm(out), rep / np.linalg.norm(rep), atol=1e-7)


def test_dispatch_totality():
    rng = np.random.default_rng(11)
    allowed = lambda n: {n, n - 1, 3, 1, 0}
    for _ in range(500):
        n = int(rng.integers(1, 8))
        psi = random_symmetric_state(n, rng)
        r = classify(psi)
        assert r.stabilizer_dim in allowed(n)


def test_two_qubit_partial_entanglement_is_ghz_family():
    psi = 2 * dicke_state(2, 0) + dicke_state(2, 2)
    r = classify(psi)
    assert r.type is StateType.GHZ and r.stabilizer_dim == 1
    assert np.isclose(r.ghz_t, 4 / np.pi * np.arctan(0.5))


@settings(max_examples=30)
@given(symmetric_states(min_n=2, max_n=6), st.booleans())
def test_product_iff_majorana_points_coincide(psi, make_product):
    n = int(np.log2(len(psi)))
    if make_product:
        q = psi[:2] if np.any(psi[:2]) else np.array([1, 0])
        psi = symmetrize([q] * n)
    is_product = classify(psi).type is StateType.PRODUCT
    assert is_product == (len(majorana_roots(psi).points) == 1)


def test_pauli_examples():
    assert len(pauli_stabilizer(catalog.ghz(3))) == 8
    gghz = 2 * dicke_state(3, 0) + dicke_state(3, 3)
    words = pauli_stabilizer(gghz)
    assert len(words) == 4
    assert all(set(w) <= {"I", "Z"} and p == 1 for p, w in words)
    words = {format_pauli(p, w) for p, w in pauli_stabilizer(dicke_state(4, 2))}
    assert {"+ZZZZ", "+XXXX", "+YYYY"} <= words
    assert {format_pauli(p, w) for p, w in pauli_stabilizer(dicke_state(3, 1))} == {"+III", "-ZZZ"}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_pauli_words_stabilize(n):
    rng = np.random.default_rng(n)
    for psi in (catalog.ghz(n), dicke_state(n, 1), random_symmetric_state(n, rng)):
        for phase, word in pauli_stabilizer(psi):
            assert np.allclose(phase * pauli_matrix(word) @ psi, psi)


def test_pauli_bruteforce_agreement():
    import itertools

    psi = dicke_state(4, 2)
    brute = set()
    for letters in itertools.product("IXYZ", repeat=4):
        w = "".join(letters)
        for phase in (1, -1, 1j, -1j):
            if np.allclose(phase * pauli_matrix(w) @ psi, psi):
                brute.add((phase, w))
    assert set(pauli_stabilizer(psi)) == brute


def test_pauli_size_limit():
    with pytest.raises(ValueError):
        pauli_stabilizer(catalog.ghz(3), max_n=2)
