"""Slow, independent reference implementations used only by the tests."""
from fractions import Fraction

from orbitdim.states import ONE, ZERO, GaussianRational


def kron_local(matrix, qubit, n):
    """Full 2**n x 2**n matrix of a single-qubit operator, via Kronecker products."""
    ident = ((ONE, ZERO), (ZERO, ONE))
    op = [[ONE]]
    for k in range(1, n + 1):
        f = matrix if k == qubit else ident
        size = len(op)
        op = [
            [op[r][c] * f[fr][fc] for c in range(size) for fc in range(2)]
            for r in range(size)
            for fr in range(2)
        ]
    return op


def matvec(op, amps):
    return tuple(
        sum((op[r][c] * amps[c] for c in range(len(amps))), ZERO) for r in range(len(op))
    )


def realified_matrix(op):
    """Real 2d x 2d matrix acting on interleaved (re, im) coordinates."""
    d = len(op)
    out = [[Fraction(0)] * (2 * d) for _ in range(2 * d)]
    for r in range(d):
        for c in range(d):
            z = GaussianRational.coerce(op[r][c])
            # (x + iy) -> (a x - b y) + i (b x + a y)
            out[2 * r][2 * c] = z.re
            out[2 * r][2 * c + 1] = -z.im
            out[2 * r + 1][2 * c] = z.im
            out[2 * r + 1][2 * c + 1] = z.re
    return out


def real_matvec(m, v):
    return tuple(sum((m[r][c] * v[c] for c in range(len(v))), Fraction(0)) for r in range(len(m)))


def gauss_rank(rows):
    """Textbook Gaussian elimination over Fractions."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    rank = 0
    n_rows, n_cols = len(a), len(a[0])
    for c in range(n_cols):
        pivot = next((i for i in range(rank, n_rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for i in range(n_rows):
            if i != rank and a[i][c] != 0:
                f = a[i][c] / a[rank][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


def kron_ket(*single_qubit_amps):
    """Tensor product of single-qubit amplitude pairs, qubit 1 first."""
    amps = [ONE]
    for pair in single_qubit_amps:
        pair = [GaussianRational.coerce(x) for x in pair]
        amps = [a * b for a in amps for b in pair]
    return tuple(amps)
