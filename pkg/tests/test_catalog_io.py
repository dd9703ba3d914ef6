import json

import numpy as np
import pytest
from hypothesis import given

from symstab import catalog
from symstab.classify import classify
from symstab.core import LocalUnitaryElement, bits_to_index, dicke_state, random_lu
from symstab.discrete import finite_stabilizer
from symstab.algebra import decompose, stabilizer_algebra
from symstab.io import (
    SCHEMA,
    StateFileError,
    algebra_to_json,
    classification_to_json,
    finite_stabilizer_to_json,
    format_state,
    lu_from_json,
    lu_to_json,
    parse_state,
    read_state,
)
from symstab.majorana import symmetrize_bruteforce

from strategies import generic_states, seeds, symmetric_states


def test_named_qubits_are_unit_vectors():
    for q in catalog.QUBITS.values():
        assert np.isclose(np.linalg.norm(q), 1)
    assert np.allclose(catalog.QUBITS["d"], [0.5, np.sqrt(3) / 2])


@pytest.mark.parametrize("name, letters", [("phi", "ade"), ("tau", "abcfgh"), ("isoceles", "abc"), ("phi-prime", "adef")])
def test_symmetrized_builtins(name, letters):
    expected = symmetrize_bruteforce([catalog.QUBITS[x] for x in letters])
    assert np.allclose(catalog.builtin_state(name), expected)


def test_parameterized_builtins():
    ghz = catalog.builtin_state("ghz:3")
    assert ghz[0] == 1 and ghz[7] == 1 and np.count_nonzero(ghz) == 2
    assert np.allclose(catalog.builtin_state("ghz:4,0.5")[[0, 15]], [np.cos(np.pi / 8), np.sin(np.pi / 8)])
    assert np.array_equal(catalog.builtin_state("dicke:4,2"), dicke_state(4, 2))
    assert np.array_equal(catalog.builtin_state("product:2"), dicke_state(2, 0))
    assert np.array_equal(catalog.builtin_state("singlet"), dicke_state(2, 1))
    assert np.allclose(catalog.builtin_state("sym:abc"), catalog.builtin_state("isoceles"))
    assert np.isclose(catalog.builtin_state("m4")[bits_to_index("0011")], 1 / np.sqrt(6))


@pytest.mark.parametrize("name", ["nope", "ghz", "dicke:3", "phi:2", "sym:xyz"])
def test_unknown_builtins(name):
    with pytest.raises(KeyError):
        catalog.builtin_state(name)


@pytest.mark.parametrize("name", ["dicke:3,5", "ghz:x"])
def test_bad_builtin_parameters(name):
    with pytest.raises(ValueError):
        catalog.builtin_state(name)


def test_parse_dense_example():
    text = "# GHZ\nn=3\nformat=dense\n000 0.7071 0\n111 0.7071 0\n"
    psi = parse_state(text)
    assert np.allclose(psi[[0, 7]], 0.7071) and np.count_nonzero(psi) == 2


def test_parse_dicke_example():
    psi = parse_state("n=4\nformat=dicke\n2 1 0\n")
    assert np.array_equal(psi, dicke_state(4, 2))


@pytest.mark.parametrize(
    "text",
    [
        "format=dense\nn=2\n",
        "n=x\nformat=dense\n",
        "n=0\nformat=dense\n",
        "n=2\nformat=sparse\n00 1 0\n",
        "n=2\nformat=dense\n00 1 0\n00 1 0\n",
        "n=2\nformat=dense\n000 1 0\n",
        "n=2\nformat=dense\n0a 1 0\n",
        "n=2\nformat=dense\n00 1\n",
        "n=2\nformat=dense\n00 one 0\n",
        "n=2\nformat=dicke\n3 1 0\n",
        "n=2\nformat=dense\n00 0 0\n",
        "n=2\nformat=dense\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(StateFileError):
        parse_state(text)


@given(generic_states(max_n=4))
def test_dense_round_trip(psi):
    assert np.array_equal(parse_state(format_state(psi)), psi)


@given(symmetric_states(max_n=6))
def test_dicke_round_trip(psi):
    assert np.allclose(parse_state(format_state(psi, "dicke")), psi, rtol=0, atol=1e-14)


def test_read_state(tmp_path):
    path = tmp_path / "ghz.txt"
    path.write_text(format_state(catalog.ghz(3)))
    assert np.array_equal(read_state(path), catalog.ghz(3))


@given(seeds)
def test_lu_json_round_trip(seed):
    U = random_lu(3, np.random.default_rng(seed))
    back = lu_from_json(json.loads(json.dumps(lu_to_json(U))))
    assert back.phase == U.phase and np.array_equal(back.gates, U.gates)


def test_classification_json_fields():
    data = classification_to_json(classify(catalog.ghz(3)))
    assert data["schema"] == SCHEMA
    assert data["type"] == "GeneralizedGHZ" and np.isclose(data["t"], 1) and data["k"] is None
    assert data["stabilizer_dim"] == 2
    U = lu_from_json(data["canonicalizer"])
    assert isinstance(U, LocalUnitaryElement) and U.n == 3
    assert classification_to_json(classify(catalog.builtin_state("isoceles")))["canonicalizer"] is None


def test_finite_stabilizer_json():
    data = json.loads(json.dumps(finite_stabilizer_to_json(finite_stabilizer(catalog.builtin_state("tau")))))
    assert data["order"] == 24 and data["label"] == "octahedral" and len(data["elements"]) == 24
    e = data["elements"][0]
    assert set(e) == {"phase", "g", "axis", "angle"}
    assert np.array(e["g"]).shape == (2, 2, 2)


def test_algebra_json_uses_one_based_labels():
    K = stabilizer_algebra(catalog.singlet())
    data = algebra_to_json(K, decompose(K))
    assert data["dim"] == 3 and data["blocks"] == [[1, 2]]
    assert len(data["basis"][0]["coords"]) == 2
