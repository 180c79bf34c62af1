# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Generic states and more qubits
#
# A random ket lies in the largest SLOCC class.  For four qubits that class
# has D1 = 24, far below dim CP^15 = 30, so there are infinitely many classes.

# %%
from collections import Counter

from orbitdim import generic_state_d1

for n in (2, 3, 4):
    print(n, Counter(generic_state_d1(n, seed) for seed in range(30)))

# %% [markdown]
# The same machinery runs for any n.  Nothing is tabulated beyond four
# qubits, so these numbers are predictions; the SVD path is used as an
# independent check of each exact rank.

# %%
import time

from orbitdim import class_dimensions, corpus, witness_w1

for name in ("GHZ5", "W5", "GHZ6", "W6"):
    start = time.perf_counter()
    psi = corpus(name).ket
    cd = class_dimensions(psi, trials=5, seed=0, float_check=True)
    print(f"{name}: D1={cd.D1} D2={cd.D2} D3={cd.D3} W1={witness_w1(psi)}  ({time.perf_counter() - start:.2f} s)")

# %%
for n in (5, 6, 7, 8):
    print(n, generic_state_d1(n, 7, float_check=True))

# %% [markdown]
# The float path on its own, and what it does with a matrix that has no
# clear spectral gap.

# %%
import numpy as np

from orbitdim import AmbiguousRank, exact_rank, float_rank
from orbitdim.orbit_dims import state_matrix

m = state_matrix(corpus("chi4").ket, "GL")
print(exact_rank(m), float_rank(m))
try:
    float_rank(np.diag([1.0, 1e-9, 1e-13]))
except AmbiguousRank as exc:
    print("refused:", exc)
