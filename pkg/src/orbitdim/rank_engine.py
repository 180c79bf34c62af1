"""Matrix rank: exact over the rationals, and an SVD cross-check in floats.

The exact path clears denominators column by column and runs fraction-free
(Bareiss) elimination on Python integers, so it never rounds.  The float path
is only an independent check; it refuses to answer when the singular-value
spectrum has no clear gap at the chosen rank.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .lie_action import TangentMatrix

__all__ = ["RankResult", "AmbiguousRank", "exact_rank", "float_rank", "as_rows"]

DEFAULT_TOL_SCALE = 1e-12
DEFAULT_MIN_GAP = 1e6


class AmbiguousRank(ArithmeticError):
    def __init__(self, rank, gap_ratio, singular_values):
        super().__init__(
            f"float rank {rank} not certified: gap ratio {gap_ratio:.3g} below threshold"
        )
        self.rank = rank
        self.gap_ratio = gap_ratio
        self.singular_values = singular_values


@dataclass(frozen=True)
class RankResult:
    rank: int
    method: str  # "exact" or "float"
    gap_ratio: float | None = None

    def __int__(self):
        return self.rank

    def __eq__(self, other):
        if isinstance(other, int):
            return self.rank == other
        if isinstance(other, RankResult):
            return (self.rank, self.method, self.gap_ratio) == (
                other.rank,
                other.method,
                other.gap_ratio,
            )
        return NotImplemented

    __hash__ = None


def as_rows(m) -> list[list]:
    """Row lists from a :class:`TangentMatrix`, a numpy array or nested sequences."""
    if isinstance(m, TangentMatrix):
        return m.rows()
    if isinstance(m, np.ndarray):
        return m.tolist()
    return [list(r) for r in m]


def _exact(x):
    # ints and Fractions both carry numerator/denominator already
    return x if isinstance(x, (int, Fraction)) else Fraction(x)


def _integer_columns(rows: list[list]) -> np.ndarray:
    """Scale each column by the lcm of its denominators; rank is unchanged."""
    n_rows, n_cols = len(rows), len(rows[0])
    out = np.empty((n_rows, n_cols), dtype=object)
    for c in range(n_cols):
        col = [_exact(rows[r][c]) for r in range(n_rows)]
        den = math.lcm(*(x.denominator for x in col))
        for r, x in enumerate(col):
            out[r, c] = x.numerator * (den // x.denominator)
    return out


def exact_rank(m) -> RankResult:
    """Rank over Q of a rational matrix by Bareiss elimination.

    Pivots are the largest-magnitude entry of the current column among the
    remaining rows.  Columns with no nonzero candidate are skipped, which
    keeps every intermediate entry a minor of the original matrix and so
    every division exact.
    """
    rows = as_rows(m)
    if not rows or not rows[0]:
        raise ValueError("exact_rank needs a nonempty matrix")
    a = _integer_columns(rows)
    # fewer rows means fewer elimination steps over the same number of entries
    if a.shape[0] > a.shape[1]:
        a = a.T.copy()
    n_rows, n_cols = a.shape
    rank, prev = 0, 1
    for c in range(n_cols):
        if rank == n_rows:
            break
        col = a[rank:, c]
        mags = [abs(x) for x in col]
        best = max(range(len(mags)), key=mags.__getitem__)
        if mags[best] == 0:
            continue
        p = rank + best
        if p != rank:
            a[[rank, p]] = a[[p, rank]]
        pivot = a[rank, c]
        below = a[rank + 1:, c:]
        if below.size:
            factors = a[rank + 1:, c].copy()
            below[...] = (pivot * below - np.outer(factors, a[rank, c:])) // prev
        prev = pivot
        rank += 1
    return RankResult(rank, "exact")


def float_rank(m, tol_scale: float = DEFAULT_TOL_SCALE, min_gap: float = DEFAULT_MIN_GAP) -> RankResult:
    """SVD rank with threshold ``sigma_max * max(shape) * tol_scale``.

    Raises :class:`AmbiguousRank` when ``sigma_r / sigma_{r+1} < min_gap``.
    """
    if tol_scale <= 0 or min_gap <= 0:
        raise ValueError("tol_scale and min_gap must be positive")
    if isinstance(m, TangentMatrix):
        arr = m.to_numpy()
    else:
        arr = np.array(as_rows(m), dtype=float)
    if arr.size == 0:
        raise ValueError("float_rank needs a nonempty matrix")
    s = np.linalg.svd(arr, compute_uv=False)
    tol = s[0] * max(arr.shape) * tol_scale
    r = int(np.count_nonzero(s > tol))
    if r == 0 or r == len(s) or s[r] == 0:
        gap = math.inf
    else:
        gap = float(s[r - 1] / s[r])
    if gap < min_gap:
        raise AmbiguousRank(r, gap, s)
    return RankResult(r, "float", gap)
