"""Single-qubit Lie-algebra generators and the tangent matrix of a ket.

The real Lie algebra gl(2, C) is spanned by eight 2x2 matrices::

    R = [[0, 1], [-1, 0]]   S = [[0, i], [i, 0]]   T = [[i, 0], [0, -i]]   E = i*1
    U = [[0, 1], [ 1, 0]]   V = [[0, i], [-i, 0]]  W = [[1, 0], [0, -1]]   Q = 1

Subsets of them span sl(2, C), u(2) and su(2).  Acting with generator X on
qubit k of psi gives a tangent vector X_k psi; the real rank of all such
vectors is the dimension of the group orbit through psi.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

from .states import ONE, ZERO, I, GaussianRational, PureKet

__all__ = [
    "KINDS",
    "GENERATOR_MATRICES",
    "GroupKind",
    "Generator",
    "QubitOutOfRange",
    "TangentMatrix",
    "apply_generator",
    "apply_local",
    "generator_column",
    "realify_amps",
    "tangent_matrix",
]

KINDS = "RSTEUVWQ"

_m1, _mi = -ONE, -I
GENERATOR_MATRICES = {
    "R": ((ZERO, ONE), (_m1, ZERO)),
    "S": ((ZERO, I), (I, ZERO)),
    "T": ((I, ZERO), (ZERO, _mi)),
    "E": ((I, ZERO), (ZERO, I)),
    "U": ((ZERO, ONE), (ONE, ZERO)),
    "V": ((ZERO, I), (_mi, ZERO)),
    "W": ((ONE, ZERO), (ZERO, _m1)),
    "Q": ((ONE, ZERO), (ZERO, ONE)),
}


class GroupKind(enum.Enum):
    GL = "RSTEUVWQ"
    SL = "RSTUVW"
    U2 = "RSTE"
    SU2 = "RST"

    @property
    def kinds(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text) -> "GroupKind":
        if isinstance(text, cls):
            return text
        # accepts "GL", "GL(2,C)", "U(2)", "su2", ...
        key = re.sub(r"\(2,\s*(C|ℂ)\)", "", str(text).upper().strip())
        key = key.replace("(", "").replace(")", "")
        try:
            return cls[key]
        except KeyError:
            raise ValueError(f"unknown group {text!r}; expected GL, SL, U2 or SU2") from None


class QubitOutOfRange(IndexError):
    pass


@dataclass(frozen=True)
class Generator:
    kind: str
    qubit: int  # 1-based, qubit 1 is the most significant bit

    def __post_init__(self):
        if self.kind not in GENERATOR_MATRICES:
            raise ValueError(f"unknown generator kind {self.kind!r}")

    @property
    def matrix(self):
        return GENERATOR_MATRICES[self.kind]

    @property
    def label(self) -> str:
        return f"{self.qubit}:{self.kind}"


def _amps(ket) -> tuple[GaussianRational, ...]:
    return ket.amps if isinstance(ket, PureKet) else tuple(ket)


def apply_local(matrix, qubit: int, ket) -> tuple[GaussianRational, ...]:
    """Apply a 2x2 matrix to one qubit of an amplitude vector.

    Works on index pairs ``(j, j | bit)`` for the target bit, so the full
    ``2**n x 2**n`` operator is never built.  The result may be zero.
    """
    amps = _amps(ket)
    dim = len(amps)
    n = dim.bit_length() - 1
    if not 1 <= qubit <= n:
        raise QubitOutOfRange(f"qubit {qubit} out of range for {n} qubits")
    (a, b), (c, d) = matrix
    bit = 1 << (n - qubit)
    out = [ZERO] * dim
    for j in range(dim):
        if j & bit:
            continue
        x0, x1 = amps[j], amps[j | bit]
        out[j] = a * x0 + b * x1
        out[j | bit] = c * x0 + d * x1
    return tuple(out)


def apply_generator(gen: Generator, ket) -> tuple[GaussianRational, ...]:
    """Tangent vector ``X_k psi`` as a tuple of amplitudes (possibly all zero)."""
    return apply_local(gen.matrix, gen.qubit, ket)


def _unit_rows(matrix):
    """For a monomial matrix with unit entries: per row, (source column, power of i)."""
    powers = {ONE: 0, I: 1, -ONE: 2, -I: 3}
    out = []
    for row in matrix:
        (col,) = [c for c, x in enumerate(row) if x]
        out.append((col, powers[row[col]]))
    return tuple(out)


_UNIT_ROWS = {kind: _unit_rows(m) for kind, m in GENERATOR_MATRICES.items()}


def generator_column(gen: Generator, vec: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """``realify(X_k psi)`` computed directly from ``realify(psi)``.

    Every generator has exactly one entry from {1, i, -1, -i} per row, so each
    output amplitude is a copy of one input amplitude rotated by a power of i.
    """
    dim = len(vec) // 2
    n = dim.bit_length() - 1
    if not 1 <= gen.qubit <= n:
        raise QubitOutOfRange(f"qubit {gen.qubit} out of range for {n} qubits")
    bit = 1 << (n - gen.qubit)
    rows = _UNIT_ROWS[gen.kind]
    out = [None] * len(vec)
    for j in range(dim):
        src_col, power = rows[1 if j & bit else 0]
        src = (j & ~bit) | (bit if src_col else 0)
        a, b = vec[2 * src], vec[2 * src + 1]
        if power == 0:
            out[2 * j], out[2 * j + 1] = a, b
        elif power == 1:
            out[2 * j], out[2 * j + 1] = -b, a
        elif power == 2:
            out[2 * j], out[2 * j + 1] = -a, -b
        else:
            out[2 * j], out[2 * j + 1] = b, -a
    return tuple(out)


def realify_amps(amps) -> tuple[Fraction, ...]:
    out = []
    for x in amps:
        out.append(x.re)
        out.append(x.im)
    return tuple(out)


@dataclass(frozen=True)
class TangentMatrix:
    """Realified tangent vectors stored column-wise.

    Columns run qubit-major and kind-minor, e.g. ``1:R, 1:S, ..., 2:R, ...``.
    """

    columns: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str, ...]

    @property
    def shape(self) -> tuple[int, int]:
        rows = len(self.columns[0]) if self.columns else 0
        return rows, len(self.columns)

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in zip(*self.columns)]

    def with_columns(self, extra, labels) -> "TangentMatrix":
        return TangentMatrix(self.columns + tuple(map(tuple, extra)), self.labels + tuple(labels))

    def to_numpy(self):
        import numpy as np

        return np.array(self.rows(), dtype=float)

    def to_tsv(self) -> str:
        """Rows are real coordinates ``a<label>``/``b<label>``, columns generator labels."""
        n_rows, _ = self.shape
        n = (n_rows // 2).bit_length() - 1
        lines = ["\t".join(["coord", *self.labels])]
        for r, row in enumerate(zip(*self.columns)):
            part = "a" if r % 2 == 0 else "b"
            coord = part + format(r // 2, f"0{n}b")
            lines.append("\t".join([coord, *(str(x) for x in row)]))
        return "\n".join(lines) + "\n"


def tangent_matrix(ket: PureKet, group="GL") -> TangentMatrix:
    group = GroupKind.parse(group)
    vec = realify_amps(ket.amps)
    columns, labels = [], []
    for k in range(1, ket.n + 1):
        for kind in group.kinds:
            gen = Generator(kind, k)
            columns.append(generator_column(gen, vec))
            labels.append(gen.label)
    return TangentMatrix(tuple(columns), tuple(labels))
