# %% [markdown]
# # Classifying symmetric states
#
# A symmetric state with continuous symmetry is LU equivalent to a product
# state, a generalized GHZ state cos(pi t/4)|0..0> + sin(pi t/4)|1..1>, the
# two-qubit state |01>+|10>, or a Dicke state. The classifier picks the family
# from dim K and then finds an explicit local unitary to the representative.

# %%
import numpy as np

from symstab.classify import canonical_fidelity, classify, ghz_representative
from symstab.core import LocalUnitaryElement, apply_group, dicke_state, random_su2

rng = np.random.default_rng(7)


def scramble(psi):
    n = int(np.log2(len(psi)))
    g = random_su2(rng)
    return apply_group(LocalUnitaryElement.uniform(g, n, np.exp(2j * np.pi * rng.random())), psi)


# %% [markdown]
# ## Hide a GHZ parameter and recover it

# %%
for t0 in (0.15, 0.5, 0.9, 1.0):
    psi = scramble(ghz_representative(5, t0))
    report = classify(psi)
    print(f"t0 = {t0:.2f}  ->  {report.type.value}, t = {report.ghz_t:.12f}, "
          f"canonical fidelity {canonical_fidelity(report, psi):.15f}")

# %% [markdown]
# ## Dicke classes
#
# D_n^(k) and D_n^(n-k) are related by flipping every qubit, so the report uses
# k <= n/2.

# %%
for k in range(1, 6):
    report = classify(scramble(dicke_state(6, k)))
    print(f"D_6^({k}) scrambled  ->  {report.type.value} k = {report.dicke_k}")

# %% [markdown]
# ## The generator sign
#
# A = iZ multiplies a weight-k string by i(n - 2k), so the element
# i(2k - n) + A + ... + A is the one that annihilates D_n^(k).

# %%
from symstab.core import AlgebraElement, apply_algebra

n, k = 5, 2
for sign, label in ((1, "i(2k-n)"), (-1, "i(n-2k)")):
    M = AlgebraElement(sign * (2 * k - n), np.tile([1.0, 0, 0], (n, 1)))
    print(f"{label}: ||M D_5^(2)|| = {np.linalg.norm(apply_algebra(M, dicke_state(n, k))):.3f}")
