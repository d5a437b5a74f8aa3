"""Hankel Gram matrices and their bordered Cholesky factorization.

``G_n`` is never stored as a square array: a :class:`GramMatrix` is a view
over the one-dimensional moment list with ``G[i][j] = v[i + j]``.

The factorization is ``S_n G_n S_n^T = H_n`` with ``S_n^T`` unit upper
triangular.  Growing ``n`` by one only appends a column to ``S^T`` and an
entry to ``H``; earlier columns never change.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DimensionMismatch, QuasiDefiniteViolation, TooShort
from .poly import as_fraction


def _values(m):
    return m.values if hasattr(m, "values") else tuple(as_fraction(v) for v in m)


@dataclass(frozen=True)
class GramMatrix:
    values: tuple
    order: int
    level: int = 0

    @property
    def size(self) -> int:
        return self.order + 1

    def entry(self, i: int, j: int) -> Fraction:
        if not (0 <= i <= self.order and 0 <= j <= self.order):
            raise IndexError((i, j))
        return self.values[i + j]

    def rows(self) -> list:
        n = self.size
        return [list(self.values[i:i + n]) for i in range(n)]

    def matvec(self, v) -> list:
        if len(v) != self.size:
            raise DimensionMismatch(f"vector of length {len(v)} for G of size {self.size}")
        vals, n = self.values, self.size
        return [sum((vals[i + j] * v[j] for j in range(n) if v[j]), Fraction(0)) for i in range(n)]

    def leading(self, n: int) -> "GramMatrix":
        """The order-``n`` leading block."""
        if n > self.order:
            raise TooShort(f"order {n} exceeds {self.order}")
        return GramMatrix(self.values, n, self.level)


def build_gram(m, n: int) -> GramMatrix:
    vals = _values(m)
    if n < 0:
        raise ValueError("n must be >= 0")
    if len(vals) < 2 * n + 1:
        raise TooShort(f"G_{n} needs {2 * n + 1} values, got {len(vals)}")
    return GramMatrix(tuple(vals[:2 * n + 1]), n, getattr(m, "level", 0))


def bilinear(g: GramMatrix, u, v) -> Fraction:
    """``u^T G v``."""
    if len(u) != g.size or len(v) != g.size:
        raise DimensionMismatch(
            f"vectors of length {len(u)} and {len(v)} for G of size {g.size}")
    return sum((ui * gv for ui, gv in zip(u, g.matvec(v)) if ui), Fraction(0))


@dataclass(frozen=True)
class CholeskyState:
    """Columns of ``S_n^T`` (column ``j`` stored with its ``j + 1`` leading
    entries; the rest are zero) and the diagonal ``h_0..h_n``."""

    columns: tuple
    h: tuple

    @property
    def order(self) -> int:
        return len(self.h) - 1

    def column(self, j: int, length: int = None) -> list:
        """Column ``j`` zero-padded to ``length`` (default ``order + 1``)."""
        length = self.order + 1 if length is None else length
        col = self.columns[j]
        if length < len(col):
            raise DimensionMismatch(f"column {j} does not fit in length {length}")
        return list(col) + [Fraction(0)] * (length - len(col))

    def upper(self) -> list:
        """Dense ``S_n^T``."""
        n = self.order + 1
        return [[self.columns[j][i] if i <= j else Fraction(0) for j in range(n)]
                for i in range(n)]

    def truncate(self, n: int) -> "CholeskyState":
        if n > self.order:
            raise TooShort(f"state has order {self.order}, asked for {n}")
        return CholeskyState(self.columns[:n + 1], self.h[:n + 1])


def cholesky_init(g0) -> CholeskyState:
    mu0 = g0.entry(0, 0) if isinstance(g0, GramMatrix) else _values(g0)[0]
    if mu0 == 0:
        raise QuasiDefiniteViolation(0)
    return CholeskyState(((Fraction(1),),), (mu0,))


def cholesky_extend(st: CholeskyState, m) -> CholeskyState:
    """Border the order-``n`` factorization to order ``n + 1``.

    The new column ``s`` solves ``G_n s = -[mu_{n+1} .. mu_{2n+1}]``; with
    ``G_n^{-1} = S^T H^{-1} S`` that is two triangular products against the
    existing factors.
    """
    vals = _values(m)
    n = st.order
    if len(vals) < 2 * n + 3:
        raise TooShort(f"extending to order {n + 1} needs {2 * n + 3} values, got {len(vals)}")
    rhs = vals[n + 1:2 * n + 2]
    # y = H^{-1} S rhs; row j of S is column j of S^T
    y = [sum((c * r for c, r in zip(col, rhs)), Fraction(0)) / hj
         for col, hj in zip(st.columns, st.h)]
    s = [Fraction(0)] * (n + 1)
    for col, yj in zip(st.columns, y):
        if yj:
            for i, c in enumerate(col):
                s[i] -= c * yj
    h_new = sum((si * vals[n + 1 + i] for i, si in enumerate(s)), Fraction(0)) + vals[2 * n + 2]
    if h_new == 0:
        raise QuasiDefiniteViolation(n + 1)
    return CholeskyState(st.columns + (tuple(s) + (Fraction(1),),), st.h + (h_new,))


def factorize(m, n: int) -> CholeskyState:
    """Order-``n`` factorization built by repeated bordering."""
    vals = _values(m)
    st = cholesky_init(vals)
    for _ in range(n):
        st = cholesky_extend(st, vals)
    return st


def verify_factorization(st: CholeskyState, g: GramMatrix) -> bool:
    """True iff ``s_i^T G s_j == h_j delta_ij`` for all ``i, j``."""
    if st.order != g.order:
        raise DimensionMismatch(f"state order {st.order} vs Gram order {g.order}")
    cols = [st.column(j) for j in range(st.order + 1)]
    for j, sj in enumerate(cols):
        if any(c != 0 for c in sj[j + 1:]) or sj[j] != 1:
            return False
        gs = g.matvec(sj)
        for i, si in enumerate(cols):
            val = sum((a * b for a, b in zip(si, gs) if a), Fraction(0))
            if val != (st.h[j] if i == j else 0):
                return False
    return True


def bareiss_determinant(rows) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination.

    Each row is scaled to integers first; the integer elimination is exact
    without any intermediate fractions.
    """
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a = []
    for row in rows:
        row = [as_fraction(x) for x in row]
        if len(row) != n:
            raise DimensionMismatch("matrix is not square")
        den = lcm(*(x.denominator for x in row))
        scale *= den
        a.append([int(x * den) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1]) / scale


def hankel_determinants(m, n: int) -> list:
    """``det G_0, ..., det G_n`` each computed from scratch."""
    vals = _values(m)
    return [bareiss_determinant(build_gram(vals, j).rows()) for j in range(n + 1)]


def det_ratio_check(st: CholeskyState, m) -> bool:
    """True iff ``h_j det G_{j-1} == det G_j`` for every ``j`` (``det G_{-1} = 1``)."""
    dets = hankel_determinants(m, st.order)
    prev = Fraction(1)
    for hj, dj in zip(st.h, dets):
        if hj * prev != dj:
            return False
        prev = dj
    return True
