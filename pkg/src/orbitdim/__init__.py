"""Dimensions of local-group orbits of multiqubit pure states.

Exact (rational) rank computations of tangent spaces give the SLOCC-class
dimension D1, the principal local-unitary orbit dimension D2, the number of
free parameters D3 = D1 - D2, and the GL-vs-SL witness W1.
"""
from .corpus import NamedState, UnknownName, corpus, names, table_names
from .lie_action import Generator, GroupKind, TangentMatrix, apply_generator, tangent_matrix
from .orbit_dims import (
    ILO,
    ClassDimensions,
    OrbitReport,
    apply_ilo,
    class_dimensions,
    generic_state_d1,
    ket_orbit_dim,
    orbit_report,
    principal_u2_dim,
    random_ilo,
    random_ket,
    state_orbit_dim,
    witness_w1,
)
from .rank_engine import AmbiguousRank, RankResult, exact_rank, float_rank
from .states import (
    GaussianRational,
    PureKet,
    parse_state,
    realify,
    scalar_mul_i,
    serialize_state,
)

__version__ = "0.1.0"
