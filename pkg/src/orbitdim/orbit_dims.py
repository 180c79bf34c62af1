"""Orbit dimensions of kets and states, entanglement witnesses, and D1/D2/D3.

Ket-space orbit dimension under a local group G is the rank of the tangent
matrix.  For the state (the ray through the ket) the isotropy algebra is the
set of X with X psi proportional to psi, which gives

    dim O_[psi] = rank([tangent columns | -psi | -i psi]) - 2.

D1 is the state-space GL orbit dimension (the size of the SLOCC class).  D2 is
the dimension of a principal U(2)^n orbit inside that class, found by pushing
the state to a random point of the class with an invertible local operator.
D3 = D1 - D2 counts the free parameters of the class up to local unitaries.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .lie_action import GroupKind, TangentMatrix, apply_local, tangent_matrix
from .rank_engine import exact_rank, float_rank
from .states import GaussianRational, PureKet, realify, scalar_mul_i

__all__ = [
    "RankMismatch",
    "OrbitReport",
    "ClassDimensions",
    "ILO",
    "ket_orbit_dim",
    "state_matrix",
    "state_orbit_dim",
    "orbit_report",
    "witness_w1",
    "random_ilo",
    "apply_ilo",
    "random_ket",
    "principal_u2_dim",
    "class_dimensions",
    "generic_state_d1",
    "d2_ladder_label",
    "DEFAULT_TRIALS",
    "DEFAULT_ILO_RANGE",
]

log = logging.getLogger(__name__)

DEFAULT_TRIALS = 5
DEFAULT_ILO_RANGE = 9
MAX_RESAMPLES = 1000

# D2 of each separability type, as observed for up to four qubits
_D2_LADDER = {
    1: {2: "A"},
    2: {5: "entangled", 4: "A-B"},
    3: {9: "genuine", 7: "A-BC", 6: "A-B-C"},
    4: {12: "genuine", 11: "A-BCD", 10: "AB-CD", 9: "A-B-CD", 8: "A-B-C-D"},
}


class RankMismatch(ArithmeticError):
    """The float cross-check disagreed with the exact rank."""


def _rank(matrix: TangentMatrix, float_check: bool = False) -> int:
    r = exact_rank(matrix).rank
    if float_check:
        f = float_rank(matrix).rank
        if f != r:
            raise RankMismatch(f"exact rank {r} but float rank {f}")
    return r


def ket_orbit_dim(ket: PureKet, group="GL", float_check: bool = False) -> int:
    return _rank(tangent_matrix(ket, group), float_check)


def state_matrix(ket: PureKet, group="GL") -> TangentMatrix:
    """Tangent matrix with the two extra columns ``-psi`` and ``-i psi``."""
    vec = realify(ket)
    minus = tuple(-x for x in vec)
    return tangent_matrix(ket, group).with_columns(
        [minus, scalar_mul_i(minus)], ["-psi", "-ipsi"]
    )


def state_orbit_dim(ket: PureKet, group="GL", float_check: bool = False) -> int:
    return _rank(state_matrix(ket, group), float_check) - 2


@dataclass(frozen=True)
class OrbitReport:
    name: str
    group: GroupKind
    ket_dim: int
    state_dim: int


def orbit_report(ket: PureKet, group="GL", name: str = "", float_check: bool = False) -> OrbitReport:
    group = GroupKind.parse(group)
    return OrbitReport(
        name,
        group,
        ket_orbit_dim(ket, group, float_check),
        state_orbit_dim(ket, group, float_check),
    )


def witness_w1(ket: PureKet, float_check: bool = False) -> int:
    """GL minus SL ket-orbit dimension: 2 flags GHZ-type entanglement, else 0."""
    return ket_orbit_dim(ket, "GL", float_check) - ket_orbit_dim(ket, "SL", float_check)


def _as_rng(rng) -> np.random.Generator:
    # anything with an integers() method, e.g. np.random.Generator
    if hasattr(rng, "integers"):
        return rng
    return np.random.default_rng(rng)


def _det(m) -> GaussianRational:
    (a, b), (c, d) = m
    return a * d - b * c


@dataclass(frozen=True)
class ILO:
    """Invertible local operator: one invertible 2x2 factor per qubit."""

    factors: tuple

    def __post_init__(self):
        factors = tuple(
            tuple(tuple(GaussianRational.coerce(x) for x in row) for row in f)
            for f in self.factors
        )
        for k, f in enumerate(factors, 1):
            if len(f) != 2 or any(len(row) != 2 for row in f):
                raise ValueError(f"factor {k} is not 2x2")
            if not _det(f):
                raise ValueError(f"factor {k} is singular")
        object.__setattr__(self, "factors", factors)

    @property
    def n(self) -> int:
        return len(self.factors)

    @classmethod
    def identity(cls, n: int) -> "ILO":
        return cls(tuple(((1, 0), (0, 1)) for _ in range(n)))


def _random_gaussian_ints(rng, ilo_range, size):
    parts = rng.integers(-ilo_range, ilo_range + 1, size=(size, 2))
    return [GaussianRational(int(re), int(im)) for re, im in parts]


def random_ilo(n: int, rng=None, ilo_range: int = DEFAULT_ILO_RANGE) -> ILO:
    """Random ILO with entries ``a + bi``, ``a, b`` uniform in ``[-range, range]``.

    Singular factors are resampled (at most 1000 times per factor).
    """
    if ilo_range < 1:
        raise ValueError("ilo_range must be >= 1")
    rng = _as_rng(rng)
    factors = []
    for k in range(n):
        for _ in range(MAX_RESAMPLES):
            a, b, c, d = _random_gaussian_ints(rng, ilo_range, 4)
            if _det(((a, b), (c, d))):
                factors.append(((a, b), (c, d)))
                break
        else:
            raise RuntimeError(f"no invertible factor for qubit {k + 1} after {MAX_RESAMPLES} draws")
    return ILO(tuple(factors))


def apply_ilo(op: ILO, ket: PureKet) -> PureKet:
    if op.n != ket.n:
        raise ValueError(f"ILO acts on {op.n} qubits but the ket has {ket.n}")
    amps = ket.amps
    for k, f in enumerate(op.factors, 1):
        amps = apply_local(f, k, amps)
    return PureKet(ket.n, amps)


def random_ket(n: int, rng=None, ilo_range: int = DEFAULT_ILO_RANGE) -> PureKet:
    rng = _as_rng(rng)
    for _ in range(MAX_RESAMPLES):
        amps = _random_gaussian_ints(rng, ilo_range, 1 << n)
        if any(amps):
            return PureKet(n, tuple(amps))
    raise RuntimeError("drew only zero kets")


@dataclass(frozen=True)
class ClassDimensions:
    D1: int
    D2: int
    D3: int
    trials_used: int
    trial_values: tuple[int, ...]
    seed: object = None
    warning: str | None = field(default=None, compare=False)

    def as_tuple(self) -> tuple[int, int, int]:
        return self.D1, self.D2, self.D3


def _trial_rngs(rng, trials: int) -> list[np.random.Generator]:
    # independent child streams, so trial k does not depend on how many
    # draws the earlier trials consumed
    return _as_rng(rng).spawn(trials)


def principal_u2_dim(
    ket: PureKet,
    trials: int = DEFAULT_TRIALS,
    rng=0,
    ilo_range: int = DEFAULT_ILO_RANGE,
    float_check: bool = False,
) -> tuple[int, tuple[int, ...], str | None]:
    """Dimension of a principal U(2)^n orbit in the SLOCC class of ``ket``.

    Returns ``(D2, trial_values, warning)``; D2 is the largest value seen and
    ``warning`` is set when the trials do not all agree.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    values = []
    for child in _trial_rngs(rng, trials):
        moved = apply_ilo(random_ilo(ket.n, child, ilo_range), ket)
        values.append(state_orbit_dim(moved, "U2", float_check))
    values = tuple(values)
    warning = None
    if len(set(values)) > 1:
        warning = f"principal-orbit trials disagree: {list(values)}"
        log.warning(warning)
    return max(values), values, warning


def class_dimensions(
    ket: PureKet,
    trials: int = DEFAULT_TRIALS,
    seed=0,
    ilo_range: int = DEFAULT_ILO_RANGE,
    float_check: bool = False,
) -> ClassDimensions:
    d1 = state_orbit_dim(ket, "GL", float_check)
    d2, values, warning = principal_u2_dim(ket, trials, seed, ilo_range, float_check)
    return ClassDimensions(d1, d2, d1 - d2, trials, values, seed, warning)


def generic_state_d1(n: int, rng=None, ilo_range: int = DEFAULT_ILO_RANGE, float_check: bool = False) -> int:
    """D1 of a random ket; for n <= 4 this is the largest SLOCC class dimension."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return state_orbit_dim(random_ket(n, rng, ilo_range), "GL", float_check)


def d2_ladder_label(n: int, d2: int) -> str | None:
    """Separability type that a principal-orbit dimension corresponds to, if known."""
    return _D2_LADDER.get(n, {}).get(d2)
