# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # SLOCC classes: D1, D2, D3
#
# * D1: dimension of the SLOCC class (state-space GL orbit)
# * D2: dimension of a principal U(2)^n orbit inside the class
# * D3 = D1 - D2: free parameters of the class up to local unitaries
#
# D2 needs a point in general position inside the class.  A random
# invertible local operator with small Gaussian-integer entries moves the
# representative there; several seeded trials guard against unlucky draws.

# %%
from orbitdim import class_dimensions, corpus, table_names

for n in (1, 2, 3):
    for name in table_names(n):
        entry = corpus(name)
        cd = class_dimensions(entry.ket, trials=5, seed=0)
        print(f"{name:13s} {str(entry.ket):22s} {cd.as_tuple()}  expected {tuple(entry.expected)}")

# %% [markdown]
# Four qubits: 28 genuinely entangled classes plus five partially separable
# types.

# %%
rows = []
for name in table_names(4):
    entry = corpus(name)
    cd = class_dimensions(entry.ket, trials=5, seed=0)
    rows.append((name, cd.as_tuple(), cd.as_tuple() == tuple(entry.expected)))
for row in rows:
    print(*row)
print("all match:", all(ok for *_, ok in rows))

# %% [markdown]
# D2 depends only on how the qubits split into entangled blocks, so it acts
# as a second witness.

# %%
from orbitdim.orbit_dims import d2_ladder_label

for name in ("GHZ4", "chi4", "A-GHZ", "A-W", "AB-CD", "A-B-CD", "A-B-C-D"):
    d2 = class_dimensions(corpus(name).ket).D2
    print(f"{name:8s} D2={d2:2d}  {d2_ladder_label(4, d2)}")
