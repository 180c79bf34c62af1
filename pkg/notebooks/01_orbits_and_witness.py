# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Orbits in ket space and state space
#
# A local group acts on an n-qubit ket one qubit at a time.  The dimension of
# the orbit through a ket is the rank of its tangent vectors `X_k psi`, one per
# Lie-algebra generator per qubit.  Everything here is exact rational
# arithmetic.

# %%
from orbitdim import PureKet, corpus, ket_orbit_dim, state_orbit_dim, tangent_matrix, witness_w1

bell = corpus("Bell").ket
print(bell, bell.n)

# %% [markdown]
# The tangent matrix has 8 columns per qubit for GL(2,C), 6 for SL(2,C),
# 4 for U(2) and 3 for SU(2).

# %%
for group in ("GL", "SL", "U2", "SU2"):
    m = tangent_matrix(bell, group)
    print(group, m.shape, "ket orbit dim", ket_orbit_dim(bell, group))

# %% [markdown]
# In ket space GL and SL orbits differ for entangled states: SL cannot
# rescale or rephase an entangled ket through local operations.

# %%
for name in ("Disentangled", "Entangled", "Product3", "Biseparable", "W3", "GHZ3"):
    psi = corpus(name).ket
    print(f"{name:13s} GL {ket_orbit_dim(psi, 'GL'):2d}  SL {ket_orbit_dim(psi, 'SL'):2d}  W1 {witness_w1(psi)}")

# %% [markdown]
# W1 = 2 singles out GHZ-type entanglement in three qubits: W3 is genuinely
# entangled but scores 0.
#
# In state space (rays) the two extra columns `-psi` and `-i psi` absorb the
# scale and phase, and GL and SL orbits coincide.

# %%
for name in ("Entangled", "GHZ3", "W3"):
    psi = corpus(name).ket
    print(name, state_orbit_dim(psi, "GL"), state_orbit_dim(psi, "SL"))

# %% [markdown]
# The dump used by `orbitdim dump-tangent` shows the raw columns.

# %%
print(tangent_matrix(PureKet.basis("0"), "SU2").to_tsv())
