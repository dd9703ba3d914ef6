"""Hypothesis strategies shared by the property tests."""
import numpy as np
from hypothesis import strategies as st

from symstab.core import LocalUnitaryElement, dicke_reconstruct, random_lu, random_su2

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def symmetric_states(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    rng = np.random.default_rng(draw(seeds))
    d = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
    return dicke_reconstruct(d)


@st.composite
def generic_states(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    rng = np.random.default_rng(draw(seeds))
    return rng.normal(size=2**n) + 1j * rng.normal(size=2**n)


@st.composite
def lu_elements(draw, n):
    return random_lu(n, np.random.default_rng(draw(seeds)))


@st.composite
def uniform_lu_elements(draw, n):
    rng = np.random.default_rng(draw(seeds))
    return LocalUnitaryElement.uniform(random_su2(rng), n, np.exp(2j * np.pi * rng.random()))


@st.composite
def su2_elements(draw):
    return random_su2(np.random.default_rng(draw(seeds)))
