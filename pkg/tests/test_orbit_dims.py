import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import kron_ket
from orbitdim import orbit_dims
from orbitdim.corpus import corpus
from orbitdim.lie_action import tangent_matrix
from orbitdim.orbit_dims import (
    ILO,
    apply_ilo,
    class_dimensions,
    d2_ladder_label,
    generic_state_d1,
    ket_orbit_dim,
    orbit_report,
    principal_u2_dim,
    random_ilo,
    random_ket,
    state_matrix,
    state_orbit_dim,
    witness_w1,
)
from orbitdim.rank_engine import exact_rank
from orbitdim.states import GaussianRational, PureKet

small = st.integers(-3, 3)
gaussians = st.builds(GaussianRational, small, small)


@st.composite
def kets(draw, max_n=3):
    n = draw(st.integers(1, max_n))
    amps = draw(st.lists(gaussians, min_size=1 << n, max_size=1 << n))
    if not any(amps):
        amps[0] = GaussianRational(1)
    return PureKet(n, tuple(amps))


@st.composite
def product_kets(draw):
    n = draw(st.integers(1, 4))
    pairs = []
    for _ in range(n):
        pair = [draw(gaussians), draw(gaussians)]
        if not any(pair):
            pair[0] = GaussianRational(1)
        pairs.append(pair)
    return PureKet(n, kron_ket(*pairs))


def ket(name):
    return corpus(name).ket


def test_ket_orbit_dim_examples():
    assert ket_orbit_dim(PureKet.basis("00"), "GL") == 6
    assert ket_orbit_dim(ket("Bell"), "GL") == 8
    assert ket_orbit_dim(ket("GHZ3"), "SL") == 14
    assert ket_orbit_dim(ket("W3"), "SL") == 14
    assert ket_orbit_dim(PureKet.basis("0"), "SL") == 4


def test_state_orbit_dim_examples():
    assert state_orbit_dim(ket("GHZ3"), "GL") == 14
    assert state_orbit_dim(ket("Bell"), "GL") == 6
    assert state_orbit_dim(ket("Bell"), "SL") == 6
    assert state_orbit_dim(PureKet.basis("0000"), "GL") == 8


def test_orbit_report():
    rep = orbit_report(ket("GHZ3"), "GL", name="GHZ3")
    assert (rep.ket_dim, rep.state_dim) == (16, 14)
    assert orbit_report(ket("GHZ3"), "SL").state_dim == 14


def test_witness_examples():
    assert witness_w1(ket("Bell")) == 2
    assert witness_w1(PureKet.basis("00")) == 0
    assert witness_w1(ket("GHZ3")) == 2
    assert witness_w1(ket("W3")) == 0
    assert witness_w1(PureKet.basis("000")) == 0


def test_ilo_validation():
    ILO.identity(3)
    with pytest.raises(ValueError):
        ILO((((1, 1), (1, 1)),))
    with pytest.raises(ValueError):
        ILO((((1, 0, 0), (0, 1, 0)),))


class ScriptedRng:
    """Returns queued integer blocks, to force specific ILO draws."""

    def __init__(self, blocks):
        self.blocks = list(blocks)

    def integers(self, low, high, size):
        return np.array(self.blocks.pop(0)).reshape(size)


def test_random_ilo_resamples_singular_factor():
    singular = [[1, 0], [1, 0], [1, 0], [1, 0]]  # [[1, 1], [1, 1]]
    identity = [[1, 0], [0, 0], [0, 0], [1, 0]]
    op = random_ilo(1, ScriptedRng([singular, identity]), ilo_range=1)
    assert op == ILO.identity(1)


def test_random_ilo_gives_up_eventually():
    singular = [[0, 0]] * 4
    with pytest.raises(RuntimeError):
        random_ilo(1, ScriptedRng([singular] * 1000), ilo_range=1)


def test_random_ilo_is_deterministic_and_bounded():
    a = random_ilo(3, 42, ilo_range=9)
    b = random_ilo(3, 42, ilo_range=9)
    assert a == b and a.n == 3
    assert a != random_ilo(3, 43, ilo_range=9)
    for f in random_ilo(4, 1, ilo_range=1).factors:
        for row in f:
            for x in row:
                assert abs(x.re) <= 1 and abs(x.im) <= 1
    with pytest.raises(ValueError):
        random_ilo(2, 0, ilo_range=0)


def test_apply_ilo_examples():
    ghz3 = ket("GHZ3")
    assert apply_ilo(ILO.identity(3), ghz3) == ghz3
    flip = ILO((((0, 1), (1, 0)), ((1, 0), (0, 1))))
    assert apply_ilo(flip, PureKet.basis("00")) == PureKet.basis("10")
    for seed in range(5):
        moved = apply_ilo(random_ilo(3, seed), ghz3)
        assert ket_orbit_dim(moved, "GL") == 16
    with pytest.raises(ValueError):
        apply_ilo(ILO.identity(2), ghz3)


@pytest.mark.parametrize(
    "name, d2", [("GHZ3", 9), ("Bell", 5), ("Disentangled", 4), ("chi4", 12)]
)
def test_principal_u2_dim_examples(name, d2):
    value, trials, warning = principal_u2_dim(ket(name), trials=5, rng=0)
    assert value == d2
    assert trials == (d2,) * 5 and warning is None


def test_principal_trials_are_reproducible():
    assert principal_u2_dim(ket("W4"), 3, rng=11) == principal_u2_dim(ket("W4"), 3, rng=11)
    with pytest.raises(ValueError):
        principal_u2_dim(ket("W4"), 0)


def test_disagreeing_trials_warn(monkeypatch):
    values = iter([7, 9, 9])
    monkeypatch.setattr(orbit_dims, "state_orbit_dim", lambda *a, **k: next(values))
    d2, trials, warning = principal_u2_dim(ket("GHZ3"), trials=3, rng=0)
    assert d2 == 9 and trials == (7, 9, 9)
    assert "disagree" in warning


@pytest.mark.parametrize(
    "name, dims", [("W4", (16, 12, 4)), ("A-GHZ", (16, 11, 5)), ("GHZ4", (18, 12, 6))]
)
def test_class_dimensions_examples(name, dims):
    cd = class_dimensions(ket(name), trials=5, seed=3)
    assert cd.as_tuple() == dims
    assert cd.D2 == max(cd.trial_values) and cd.trials_used == 5 and cd.seed == 3


@pytest.mark.parametrize("n, d1", [(4, 24), (2, 6), (3, 14), (1, 2)])
def test_generic_state_d1(n, d1):
    assert generic_state_d1(n, 7) == d1


def test_random_ket_is_seeded():
    assert random_ket(3, 5) == random_ket(3, 5)


def test_ladder_labels():
    assert d2_ladder_label(4, 11) == "A-BCD"
    assert d2_ladder_label(3, 9) == "genuine"
    assert d2_ladder_label(5, 15) is None


@settings(max_examples=60, deadline=None)
@given(kets())
def test_state_dims_from_ket_dims(psi):
    gl = ket_orbit_dim(psi, "GL")
    assert state_orbit_dim(psi, "GL") == gl - 2
    assert state_orbit_dim(psi, "SL") == gl - 2
    assert witness_w1(psi) in (0, 2)
    # the two appended columns never add rank to the GL tangent matrix
    assert exact_rank(state_matrix(psi, "GL")).rank == exact_rank(tangent_matrix(psi, "GL")).rank


@settings(max_examples=40, deadline=None)
@given(product_kets())
def test_product_kets_have_zero_witness(psi):
    assert witness_w1(psi) == 0
    # a product of n qubits sits in the single product class
    assert state_orbit_dim(psi, "GL") == 2 * psi.n


@settings(max_examples=25, deadline=None)
@given(kets(), st.integers(0, 2**32 - 1))
def test_orbit_invariance_under_random_ilo(psi, seed):
    moved = apply_ilo(random_ilo(psi.n, seed), psi)
    for group in ("GL", "SL"):
        assert ket_orbit_dim(moved, group) == ket_orbit_dim(psi, group)
    assert state_orbit_dim(moved, "GL") == state_orbit_dim(psi, "GL")
