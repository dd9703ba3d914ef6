# %% [markdown]
# # Chord diagram constructions
#
# Pair up 2m qubits without crossing chords and put a singlet |01>-|10> on
# every chord. Linear combinations of these products are the states whose
# stabilizer is the standard block algebra. None of them is symmetric.

# %%
import numpy as np

from symstab.chords import (
    all_pair_partitions,
    cdc_expand,
    construct_M4,
    enumerate_noncrossing,
    has_crossing,
    leading_index,
    singlet_product,
    verify_lemma1,
)
from symstab.core import bits_to_index, is_symmetric

for m in range(1, 7):
    brute = sum(not has_crossing(P) for P in all_pair_partitions(m))
    print(f"m = {m}: {len(enumerate_noncrossing(m))} noncrossing partitions (brute force {brute})")

# %% [markdown]
# ## The four-qubit state M4
#
# M4 is not symmetric, yet it is invariant under the three double
# transpositions and is a combination of the two noncrossing singlet products.

# %%
psi = construct_M4()
expansion = cdc_expand(psi)
print("symmetric:", is_symmetric(psi), " residual:", f"{expansion.residual:.1e}")
for P, c in expansion.coefficients.items():
    print(f"  {P}: {c * np.sqrt(6):.6f} / sqrt(6)")

# %% [markdown]
# ## No symmetric combination exists
#
# A symmetric combination would have to be a multiple of the middle Dicke
# state. That state is orthogonal to every singlet product, since swapping the
# ends of a chord flips the sign of s_P and fixes the Dicke state.

# %%
for n in (2, 4, 6, 8):
    print(verify_lemma1(n))

# %% [markdown]
# ## Leading indices
#
# The first basis string of s_P places 0 at the smaller end of each chord. It
# can still occur in other singlet products: 0101 leads s_{12,34} and also
# appears in s_{14,23}. The leading rows are triangular rather than diagonal,
# which is enough for the coefficients to be unique.

# %%
s = singlet_product(enumerate_noncrossing(2)[1])
for P in enumerate_noncrossing(2):
    lead = leading_index(P)[0]
    print(f"I_P for {P} is {lead}; amplitude in s_(1-4,2-3) is {s[bits_to_index(lead)].real:+.0f}")
