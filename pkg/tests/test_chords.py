import json
from math import comb
from pathlib import Path

import numpy as np
import pytest

from symstab.chords import (
    OddQubitCount,
    PairPartition,
    all_pair_partitions,
    cdc_expand,
    construct_M4,
    count_partitions_hitting,
    enumerate_noncrossing,
    format_partitions,
    has_crossing,
    hat_index,
    leading_coefficients,
    leading_index,
    parse_partitions,
    permute_qubits,
    singlet_matrix,
    singlet_product,
    verify_lemma1,
)
from symstab.core import bits_to_index, dicke_state, is_symmetric

BASELINES = json.loads((Path(__file__).parent / "fixtures" / "baselines.json").read_text())
P = PairPartition.parse


def ket(*terms):
    psi = np.zeros(2 ** len(terms[0][1]), dtype=complex)
    for amp, bits in terms:
        psi[bits_to_index(bits)] += amp
    return psi


def catalan(m):
    return comb(2 * m, m) // (m + 1)


@pytest.mark.parametrize("text, crossing", [("1-4,2-3", False), ("1-3,2-4", True), ("1-2", False)])
def test_has_crossing(text, crossing):
    assert has_crossing(P(text)) is crossing


def test_partition_text_round_trip():
    parts = enumerate_noncrossing(3)
    assert parse_partitions(format_partitions(parts)) == parts
    assert str(P("2-3,4-1")) == "1-4,2-3"
    with pytest.raises(ValueError):
        P("1-2,2-3")
    with pytest.raises(ValueError):
        P("1-2,x-4")


def test_small_enumerations():
    assert enumerate_noncrossing(1) == [P("1-2")]
    assert set(enumerate_noncrossing(2)) == {P("1-2,3-4"), P("1-4,2-3")}


@pytest.mark.parametrize("m", range(1, 7))
def test_catalan_counts_against_brute_force(m):
    parts = enumerate_noncrossing(m)
    brute = [Q for Q in all_pair_partitions(m) if not has_crossing(Q)]
    assert len(parts) == catalan(m)
    assert set(parts) == set(brute)


def test_singlet_product_examples():
    assert np.array_equal(singlet_product(P("1-2")), ket((1, "01"), (-1, "10")))
    # the displayed expansions of the crossing-free and crossing examples
    assert np.array_equal(
        singlet_product(P("1-4,2-3")), ket((1, "0011"), (-1, "0101"), (-1, "1010"), (1, "1100"))
    )
    assert np.array_equal(
        singlet_product(P("1-3,2-4")), ket((1, "0011"), (-1, "0110"), (-1, "1001"), (1, "1100"))
    )


def test_leading_index_examples():
    assert leading_index(P("1-2")) == ("01", "10")
    assert leading_index(P("1-4,2-3")) == ("0011", "1100")
    assert leading_index(P("1-2,3-4")) == ("0101", "1010")
    with pytest.raises(ValueError):
        leading_index(P("1-3,2-4"))


@pytest.mark.parametrize("m", range(1, 5))
def test_leading_index_is_first_basis_vector(m):
    for Q in enumerate_noncrossing(m):
        s = singlet_product(Q)
        assert bits_to_index(leading_index(Q)[0]) == int(np.nonzero(s)[0][0])


def test_leading_index_exclusivity_fails():
    """|I_P> for P = {12,34} is 0101, which appears in the displayed expansion of s_{14,23}."""
    I, Ic = leading_index(P("1-2,3-4"))
    s = singlet_product(P("1-4,2-3"))
    assert s[bits_to_index(I)] == -1
    assert s[bits_to_index(Ic)] == -1


@pytest.mark.parametrize("m", range(1, 6))
def test_leading_rows_are_unitriangular(m):
    """What does hold: the leading-index rows form a unitriangular system up to reordering."""
    parts, S = singlet_matrix(m)
    T = S[[bits_to_index(leading_index(Q)[0]) for Q in parts]]
    assert np.array_equal(np.diag(T), np.ones(len(parts)))
    # repeatedly peel off a partition whose leading index no other remaining s_P' hits
    remaining = list(range(len(parts)))
    while remaining:
        free = [a for a in remaining if all(T[a, b] == 0 for b in remaining if b != a)]
        assert free, "dependency cycle among leading indices"
        remaining.remove(free[0])


@pytest.mark.parametrize("m", range(1, 5))
def test_sign_structure(m):
    for Q in enumerate_noncrossing(m):
        s = singlet_product(Q)
        I, Ic = leading_index(Q)
        assert s[bits_to_index(Ic)] == (-1) ** m * s[bits_to_index(I)]


@pytest.mark.parametrize("m", range(1, 5))
def test_singlet_products_independent(m):
    _, S = singlet_matrix(m)
    gram = S.conj().T @ S
    assert np.linalg.matrix_rank(gram) == len(gram)


def test_cdc_expand_examples():
    for Q in enumerate_noncrossing(3):
        e = cdc_expand(singlet_product(Q))
        assert e.residual < 1e-12
        for R, c in e.coefficients.items():
            assert np.isclose(c, 1.0 if R == Q else 0.0)
    assert cdc_expand(dicke_state(4, 2)).residual > 0.1
    with pytest.raises(OddQubitCount):
        cdc_expand(dicke_state(3, 1))


def test_leading_coefficients_agree_with_least_squares(rng):
    parts, S = singlet_matrix(4)
    c = rng.normal(size=len(parts)) + 1j * rng.normal(size=len(parts))
    assert np.allclose(leading_coefficients(S @ c, parts, S), c)


def test_m4_cdc_coefficients_match_hand_derivation():
    w = np.exp(2j * np.pi / 3)
    e = cdc_expand(construct_M4())
    assert e.residual < 1e-9
    assert np.isclose(e.coefficients[P("1-2,3-4")], -(w**2) / np.sqrt(6))
    assert np.isclose(e.coefficients[P("1-4,2-3")], 1 / np.sqrt(6))


def test_m4_cdc_coefficients_regression():
    e = cdc_expand(construct_M4())
    for text, (re, im) in BASELINES["m4_cdc_coefficients"].items():
        assert abs(e.coefficients[P(text)] - complex(re, im)) < 1e-12


def test_m4_properties():
    psi = construct_M4()
    assert np.isclose(psi[bits_to_index("0011")], 1 / np.sqrt(6))
    assert not is_symmetric(psi)
    for perm in [(1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)]:
        assert np.linalg.norm(permute_qubits(psi, perm) - psi) < 1e-12
    assert np.linalg.norm(permute_qubits(psi, (1, 0, 2, 3)) - psi) > 0.1


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_lemma1(n):
    report = verify_lemma1(n)
    assert report["n"] == n
    assert not report["inSpan"]
    assert report["relativeResidual"] > 0.1
    with pytest.raises(OddQubitCount):
        verify_lemma1(3)


def test_hat_index_counts():
    assert hat_index(4) == "00010111"
    assert count_partitions_hitting(8, hat_index(4)) == 2
    assert count_partitions_hitting(4, "0000") == 0
    # I_P for {14,23} lies only in s_P; I_P for {12,34} also lies in s_{14,23}
    assert count_partitions_hitting(4, leading_index(P("1-4,2-3"))[0]) == 1
    assert count_partitions_hitting(4, leading_index(P("1-2,3-4"))[0]) == 2


@pytest.mark.parametrize("m", range(1, 5))
def test_hitting_count_matches_amplitudes(m):
    parts, S = singlet_matrix(m)
    rng = np.random.default_rng(m)
    for idx in rng.integers(0, 2 ** (2 * m), size=20):
        bits = format(int(idx), f"0{2 * m}b")
        assert count_partitions_hitting(2 * m, bits) == int(np.count_nonzero(S[idx]))
