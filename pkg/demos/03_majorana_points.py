# %% [markdown]
# # Majorana points
#
# Every symmetric n-qubit state is, up to scale, the symmetrization of n
# single-qubit states. Their Bloch vectors are the Majorana points, found as
# roots of a degree-n polynomial built from the Dicke coefficients.

# %%
import numpy as np

from symstab import catalog
from symstab.core import LocalUnitaryElement, apply_group, dicke_state, random_su2, so3_image
from symstab.majorana import fidelity, majorana_qubits, majorana_roots, symmetrize

for name in ("phi", "phi-prime", "tau"):
    config = majorana_roots(catalog.builtin_state(name))
    print(f"{name}:")
    print(config.to_text())

# %% [markdown]
# ## Repeated points
#
# A rotated Dicke state has two clusters of repeated roots. Eigenvalue solvers
# spread a root of multiplicity m over a ring of radius about eps^(1/m), so
# nearby roots are merged back whenever the merged state still reproduces psi.

# %%
rng = np.random.default_rng(3)
g = random_su2(rng)
psi = apply_group(LocalUnitaryElement.uniform(g, 8), dicke_state(8, 3))
config = majorana_roots(psi)
print("multiplicities:", sorted(int(m) for m in config.multiplicities))
print("round-trip fidelity:", fidelity(symmetrize(majorana_qubits(psi)), psi))

# %% [markdown]
# ## Rotating the state rotates the points

# %%
psi = catalog.builtin_state("isoceles")
before = majorana_roots(psi).rotated(so3_image(g)).points
after = majorana_roots(apply_group(LocalUnitaryElement.uniform(g, 3), psi)).points
gap = max(min(np.linalg.norm(after - p, axis=1)) for p in before)
print(f"largest mismatch after rotating by g: {gap:.1e}")
