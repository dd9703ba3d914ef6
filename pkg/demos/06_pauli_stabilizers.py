# %% [markdown]
# # Pauli stabilizers
#
# The signed Pauli words fixing a state form a group. For GHZ states it has
# 2^n elements. Unequal GHZ amplitudes leave only the ZZ-type words.

# %%
from symstab import catalog
from symstab.classify import format_pauli, pauli_stabilizer
from symstab.core import dicke_state

for n in (3, 4, 5):
    equal = pauli_stabilizer(catalog.ghz(n))
    unequal = pauli_stabilizer(2 * dicke_state(n, 0) + dicke_state(n, n))
    print(f"n = {n}: |000..>+|111..> has {len(equal)}, 2|000..>+|111..> has {len(unequal)}")

# %% [markdown]
# ## Dicke states

# %%
for n, k in ((4, 2), (3, 1), (6, 3)):
    words = [format_pauli(p, w) for p, w in pauli_stabilizer(dicke_state(n, k))]
    print(f"D_{n}^({k}):", " ".join(words))
