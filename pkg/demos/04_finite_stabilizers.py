# %% [markdown]
# # Finite stabilizer groups
#
# With K = 0 the stabilizer of a symmetric state is a finite group of elements
# e^{i phi} g^{(x)n}. It embeds in SO(3) through the rotation of g, so the
# search runs over rotations that map the Majorana points onto themselves.
# Each candidate is lifted back to SU(2) and checked against the state.

# %%
import numpy as np

from symstab import catalog
from symstab.core import X
from symstab.discrete import finite_stabilizer, rotation_order

for name in ("isoceles", "phi-prime", "tau"):
    report = finite_stabilizer(catalog.builtin_state(name))
    orders = sorted(rotation_order(R) for R in report.rotations)
    print(f"{name:10s} order {report.order:2d}  {report.label:12s} element orders {orders}")

# %% [markdown]
# ## The isoceles state contains XXX
#
# X is not in SU(2), but -iX is, and (-iX)^{(x)3} = i XXX.

# %%
report = finite_stabilizer(catalog.builtin_state("isoceles"))
XXX = np.kron(np.kron(X, X), X)
for e in report.elements:
    op = e.phase * np.kron(np.kron(e.g, e.g), e.g)
    print(f"angle {e.axis_angle[1]:.4f}  equals XXX: {np.allclose(op, XXX)}")

# %% [markdown]
# ## The three-fold element of phi'
#
# The element e^{-2 pi i/3} (e^{2 pi i Y/3})^{(x)4} stabilizes phi'. Its cube is
# the identity, so it generates a cyclic group of order 3. The computed
# stabilizer has exactly these three elements.

# %%
from scipy.linalg import expm

from symstab.core import Y

g = expm(2j * np.pi / 3 * Y)
U = np.exp(-2j * np.pi / 3) * np.kron(np.kron(g, g), np.kron(g, g))
psi = catalog.builtin_state("phi-prime")
print("stabilizes phi':", np.allclose(U @ psi, psi))
for p in (1, 2, 3, 4):
    print(f"U^{p} == I: {np.allclose(np.linalg.matrix_power(U, p), np.eye(16))}")
