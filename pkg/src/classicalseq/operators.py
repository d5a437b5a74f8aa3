"""Banded exact matrices tied to Pearson data.

* ``R_n`` (n x (n+1)): transpose of ``q -> phi q' + psi q`` on monomials.
* ``N_n`` (n x (n+1)): ``d/dx X_n = N_n^T X_{n-1}``.
* ``D_n = R_n^T N_n`` ((n+1) x (n+1)): ``q -> phi q'' + psi q'``.
* ``Phi_n`` ((n+3) x (n+1)): multiplication by ``phi``.

Only nonzero entries are stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch
from .hankel import GramMatrix, _values


@dataclass(frozen=True)
class StructuredMatrix:
    kind: str
    shape: tuple
    entries: dict  # (row, col) -> nonzero Fraction

    @classmethod
    def from_entries(cls, kind, shape, items):
        ent = {}
        for (i, j), v in items:
            if v != 0:
                ent[(i, j)] = Fraction(v)
        return cls(kind, shape, ent)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.shape[0] and 0 <= j < self.shape[1]):
            raise IndexError(ij)
        return self.entries.get(ij, Fraction(0))

    def to_dense(self) -> list:
        r, c = self.shape
        return [[self.entries.get((i, j), Fraction(0)) for j in range(c)] for i in range(r)]

    @property
    def T(self) -> "StructuredMatrix":
        return StructuredMatrix(self.kind + "^T", self.shape[::-1],
                                {(j, i): v for (i, j), v in self.entries.items()})

    def matvec(self, v) -> list:
        if len(v) != self.shape[1]:
            raise DimensionMismatch(f"{self.kind}: vector length {len(v)}, expected {self.shape[1]}")
        out = [Fraction(0)] * self.shape[0]
        for (i, j), x in self.entries.items():
            if v[j]:
                out[i] += x * v[j]
        return out

    def rmatvec(self, v) -> list:
        """``M^T v``."""
        return self.T.matvec(v)

    def diagonal(self) -> list:
        return [self[i, i] for i in range(min(self.shape))]


def matmul(A, B) -> list:
    """Dense product; either operand may be a :class:`StructuredMatrix`,
    a :class:`GramMatrix` or a list of rows."""
    A, B = _dense(A), _dense(B)
    if A and B and len(A[0]) != len(B):
        raise DimensionMismatch(f"{len(A)}x{len(A[0])} @ {len(B)}x{len(B[0])}")
    cols = list(zip(*B)) if B else []
    return [[sum((a * b for a, b in zip(row, col) if a), Fraction(0)) for col in cols] for row in A]


def transpose(A) -> list:
    return [list(r) for r in zip(*_dense(A))]


def _dense(A):
    if isinstance(A, StructuredMatrix):
        return A.to_dense()
    if isinstance(A, GramMatrix):
        return A.rows()
    return A


def build_R(p, n: int) -> StructuredMatrix:
    """Row ``k``: ``k c, k b + e, k a + d`` in columns ``k-1, k, k+1``."""
    if n < 1:
        raise ValueError("R_n is defined for n >= 1")
    items = []
    for k in range(n):
        if k >= 1:
            items.append(((k, k - 1), k * p.c))
        items.append(((k, k), k * p.b + p.e))
        items.append(((k, k + 1), k * p.a + p.d))
    return StructuredMatrix.from_entries("R", (n, n + 1), items)


def build_N(n: int) -> StructuredMatrix:
    if n < 1:
        raise ValueError("N_n is defined for n >= 1")
    return StructuredMatrix.from_entries("N", (n, n + 1), [((k, k + 1), k + 1) for k in range(n)])


def build_D(p, n: int) -> StructuredMatrix:
    """``D_n = R_n^T N_n``; ``D_0 = 0``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return StructuredMatrix("D", (1, 1), {})
    prod = matmul(build_R(p, n).T, build_N(n))
    return StructuredMatrix.from_entries(
        "D", (n + 1, n + 1), (((i, j), v) for i, row in enumerate(prod) for j, v in enumerate(row)))


def build_D_recursive(p, n: int) -> StructuredMatrix:
    """Block form: bordering ``D_{m-1}`` with last column
    ``m(m-1)c, m((m-1)b+e), m((m-1)a+d)`` in rows ``m-2, m-1, m``."""
    items = []
    for m in range(1, n + 1):
        if m >= 2:
            items.append(((m - 2, m), m * (m - 1) * p.c))
        items.append(((m - 1, m), m * ((m - 1) * p.b + p.e)))
        items.append(((m, m), m * ((m - 1) * p.a + p.d)))
    return StructuredMatrix.from_entries("D", (n + 1, n + 1), items)


def build_Phi(p, n: int) -> StructuredMatrix:
    """Column ``j`` carries ``c, b, a`` in rows ``j, j+1, j+2``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    items = []
    for j in range(n + 1):
        items += [((j, j), p.c), ((j + 1, j), p.b), ((j + 2, j), p.a)]
    return StructuredMatrix.from_entries("Phi", (n + 3, n + 1), items)


def apply_N_chain(v, lo: int, hi: int) -> list:
    """``N_{lo+1} N_{lo+2} ... N_{hi} v`` for ``v`` of length ``hi + 1``."""
    for m in range(hi, lo, -1):
        v = build_N(m).matvec(v)
    return v


def apply_NT_chain(v, lo: int, hi: int) -> list:
    """``N_{hi}^T ... N_{lo+1}^T v`` for ``v`` of length ``lo + 1``."""
    for m in range(lo + 1, hi + 1):
        v = build_N(m).rmatvec(v)
    return v


def check_self_adjoint(p, g: GramMatrix) -> bool:
    """``D_n^T G_n == G_n D_n``."""
    D = build_D(p, g.order)
    GD = matmul(g, D)
    return transpose(GD) == GD


def check_moment_kernel(p, m) -> bool:
    """``R_n M_n == 0`` with ``n`` the last index available in ``m``."""
    vals = list(_values(m))
    n = len(vals) - 1
    if n < 1:
        return True
    return all(x == 0 for x in build_R(p, n).matvec(vals))
