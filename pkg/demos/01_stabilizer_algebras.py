# %% [markdown]
# # Stabilizer subalgebras
#
# The local unitary Lie algebra on n qubits is u(1) + su(2)^n. An element
# stabilizes a state when it annihilates it, and the stabilizing elements form
# a subalgebra K. Its dimension depends only on the LU class of the state.

# %%
import numpy as np

from symstab import catalog
from symstab.algebra import decompose, stabilizer_algebra
from symstab.core import apply_group, dicke_state, random_lu

# %% [markdown]
# ## Dimensions for the standard families

# %%
examples = {
    "|000>": catalog.product(3),
    "|000>+|111>": catalog.ghz(3),
    "|01>+|10>": catalog.singlet(),
    "D_4^(2)": dicke_state(4, 2),
    "isoceles": catalog.builtin_state("isoceles"),
}
for name, psi in examples.items():
    K = stabilizer_algebra(psi)
    print(f"{name:12s} dim K = {K.dim}")

# %% [markdown]
# ## The dimension survives random local unitaries
#
# K of U psi is U K U^dagger, so the dimension cannot change.

# %%
rng = np.random.default_rng(1)
psi = dicke_state(5, 2)
dims = {stabilizer_algebra(apply_group(random_lu(5, rng), psi)).dim for _ in range(50)}
print("dims seen after 50 scramblings of D_5^(2):", dims)

# %% [markdown]
# ## Block decomposition
#
# Qubits split into su(2) blocks, qubits where K projects onto a line (R1) and
# qubits K does not touch (R0). A product of two singlets has two blocks.

# %%
singlet = np.array([0, 1, -1, 0], dtype=complex)
for name, psi in [("singlet x singlet", np.kron(singlet, singlet)), ("|000>", catalog.product(3)),
                  ("singlet x |0>", np.kron(singlet, [1, 0]))]:
    d = decompose(stabilizer_algebra(psi))
    label = lambda qs: [q + 1 for q in qs]
    print(f"{name:18s} blocks {[label(b) for b in d.blocks]}  R1 {label(d.r1_qubits)}  R0 {label(d.r0_qubits)}")
