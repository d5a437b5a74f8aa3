"""Matrix characterizations of classical moment sequences.

Given a factorization ``S_n G_n S_n^T = H_n`` and Pearson data, each function
here checks one of the equivalent conditions for the moments to be classical
and extracts the constants that come with it:

* eigenvectors of ``D_n`` (:func:`bochner_verify`),
* orthogonality of the derived bases under ``G^(k)`` (:func:`hahn_basis`,
  :func:`hahn_verify`, :func:`ngn_check`),
* the first and second structure relations,
* the Rodrigues-type identity.

Verifiers return reports.  The structure-relation extractors raise
:class:`StructureViolation` because there is no meaningful result to return
when the band structure is broken.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import StructureViolation, TooShort
from .hankel import bilinear, build_gram, _values
from .moments import MomentSequence, pearson_shift, sigma_chain, sigma_values
from .operators import (apply_N_chain, apply_NT_chain, build_D, build_N, build_Phi, matmul)
from .poly import pochhammer


@dataclass(frozen=True)
class EigenReport:
    order: int
    eigenvalues: tuple
    passed: tuple

    @property
    def ok(self) -> bool:
        return all(self.passed)

    @property
    def first_failure(self):
        return next((j for j, ok in enumerate(self.passed) if not ok), None)


def bochner_verify(st, p) -> EigenReport:
    """Check ``D_n s_j == lambda_j s_j`` for every column of ``S_n^T``."""
    n = st.order
    D = build_D(p, n)
    lams, flags = [], []
    for j in range(n + 1):
        lam = p.eigenvalue(j)
        s = st.column(j)
        lams.append(lam)
        flags.append(D.matvec(s) == [lam * x for x in s])
    return EigenReport(n, tuple(lams), tuple(flags))


@dataclass(frozen=True)
class DerivedBasis:
    depth: int
    columns: tuple  # columns[j] has length order + 1
    h: tuple
    pearson: object
    base_h: tuple  # h_0..h_{order+depth} of the underlying factorization

    @property
    def order(self) -> int:
        return len(self.columns) - 1


def derived_norms(p, h, k: int) -> list:
    """``h^(k)_j`` by the one-step recursion
    ``h^(i)_j = -lambda^(i-1)_{j+1} / (j+1)^2 * h^(i-1)_{j+1}``."""
    cur = list(h)
    for i in range(1, k + 1):
        q = p.shifted(i - 1)
        cur = [-q.eigenvalue(j + 1) / (j + 1) ** 2 * cur[j + 1] for j in range(len(cur) - 1)]
    return cur


def derived_norm_closed_form(p, h, k: int, j: int) -> Fraction:
    """``h^(k)_j = (-1)^k prod_i lambda^(i)_{j+k-i} / ((j+1)_k)^2 * h_{j+k}``."""
    num = Fraction(1)
    for i in range(k):
        num *= p.shifted(i).eigenvalue(j + k - i)
    return (-1) ** k * num / pochhammer(j + 1, k) ** 2 * h[j + k]


def hahn_basis(st, p, k: int, n: int = None) -> DerivedBasis:
    """Depth-``k`` derived basis of order ``n`` (default: ``st.order - k``).

    ``s^(k)_{n,j} = N_{n+1} ... N_{n+k} s_{n+k,j+k} / (j+1)_k``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if n is None:
        n = st.order - k
    if n < 0 or n + k > st.order:
        raise TooShort(f"depth {k} at order {n} needs a factorization of order {n + k}")
    for i in range(k):
        pearson_shift(p, i, range_N=n + k)
    cols = tuple(
        tuple(x / pochhammer(j + 1, k) for x in apply_N_chain(st.column(j + k, n + k + 1), n, n + k))
        for j in range(n + 1))
    base_h = tuple(st.h[:n + k + 1])
    return DerivedBasis(k, cols, tuple(derived_norms(p, base_h, k)), p, base_h)


def hahn_verify(db: DerivedBasis, gk) -> bool:
    """Orthogonality of ``db`` under ``G^(k)`` with the recursive norms, and
    agreement of those norms with the closed form."""
    if gk.order != db.order:
        return False
    for j in range(db.order + 1):
        if db.h[j] != derived_norm_closed_form(db.pearson, db.base_h, db.depth, j):
            return False
    for j, sj in enumerate(db.columns):
        for i, si in enumerate(db.columns):
            if bilinear(gk, list(sj), list(si)) != (db.h[j] if i == j else 0):
                return False
    return True


def ngn_check(m, p, n: int) -> bool:
    """``N_{n+1}^T G^(1)_n N_{n+1} == -D_{n+1}^T G_{n+1}``."""
    vals = _values(m)
    if len(vals) < 2 * n + 3:
        raise TooShort(f"need moments up to index {2 * n + 2}")
    vals = vals[:2 * n + 3]
    g1 = build_gram(sigma_values(p, vals), n)
    N = build_N(n + 1)
    lhs = matmul(matmul(N.T, g1), N)
    rhs = matmul(build_D(p, n + 1).T, build_gram(vals, n + 1))
    return lhs == [[-x for x in row] for row in rhs]


def _project(g, target, basis, norms) -> list:
    """Coefficients of ``target`` in a ``g``-orthogonal basis."""
    return [bilinear(g, target, list(b)) / hb for b, hb in zip(basis, norms)]


@dataclass(frozen=True)
class FirstStructure:
    """``Phi s^(1)_{n-2,j} = a_j s_{n,j+2} + b_j s_{n,j+1} + c_j s_{n,j}``."""

    order: int
    triples: tuple  # (a_j, b_j, c_j)
    d_hat: Fraction
    e_hat: Fraction


def first_structure(m, st, p, n: int) -> FirstStructure:
    if n < 2:
        raise ValueError("the first structure relation needs n >= 2")
    if st.order < n:
        raise TooShort(f"factorization of order {n} required")
    g = build_gram(m, n)
    basis = [st.column(i, n + 1) for i in range(n + 1)]
    db = hahn_basis(st, p, 1, n - 2)
    Phi = build_Phi(p, n - 2)
    triples = []
    for j in range(n - 1):
        target = Phi.matvec(list(db.columns[j]))
        coeffs = _project(g, target, basis, st.h[:n + 1])
        for i, cf in enumerate(coeffs):
            if cf != 0 and not j <= i <= j + 2:
                raise StructureViolation(
                    f"first structure relation: coefficient {i} nonzero for j={j}", index=j)
        if coeffs[j] == 0:
            raise StructureViolation(f"first structure relation: c_{j} = 0", index=j)
        triples.append((coeffs[j + 2], coeffs[j + 1], coeffs[j]))
    d_hat = -triples[0][2] * st.h[0] / st.h[1]
    e_hat = d_hat * st.columns[1][0]
    if (d_hat, e_hat) != (p.d, p.e):
        raise StructureViolation(f"first structure relation recovers psi = {d_hat} x + {e_hat}")
    return FirstStructure(n, tuple(triples), d_hat, e_hat)


@dataclass(frozen=True)
class SecondStructure:
    """``s_{n,j} = s^(1)_{n,j} + kappa_j s^(1)_{n,j-1} + xi_j s^(1)_{n,j-2}``.

    ``phi_hat = (c, b, a)`` and ``psi_hat = (e, d)`` are recovered from the
    factorization alone and equal ``t`` times the input data.
    """

    order: int
    pairs: tuple  # (kappa_j, xi_j)
    phi_hat: tuple
    psi_hat: tuple
    t: Fraction


def proportionality(recovered, reference):
    """The ``t`` with ``recovered == t * reference``, or ``None``."""
    t = None
    for r, x in zip(recovered, reference):
        if x == 0:
            if r != 0:
                return None
        elif t is None:
            t = r / x
    if t is None or t == 0:
        return None
    return t if all(r == t * x for r, x in zip(recovered, reference)) else None


def second_structure(m, st, p, n: int) -> SecondStructure:
    if n < 2:
        raise ValueError("the second structure relation needs n >= 2")
    if st.order < n + 1:
        raise TooShort(f"factorization of order {n + 1} required")
    sigma = MomentSequence(sigma_values(p, _values(m)[:2 * n + 3]), p, 1)
    g1 = build_gram(sigma, n)
    db = hahn_basis(st, p, 1, n)
    pairs = []
    for j in range(n + 1):
        target = st.column(j, n + 1)
        coeffs = _project(g1, target, db.columns, db.h)
        if any(cf != 0 for cf in coeffs[:max(j - 2, 0)]) or coeffs[j] != 1:
            raise StructureViolation(
                f"second structure relation: s_{n},{j} has terms below index {j - 2}", index=j)
        pairs.append((coeffs[j - 1] if j >= 1 else Fraction(0),
                      coeffs[j - 2] if j >= 2 else Fraction(0)))
    h = st.h
    kappa1, xi2 = pairs[1][0], pairs[2][1]
    cols = [st.column(i, n + 1) for i in range(3)]
    cba = [xi2 / h[2] * cols[2][r] + kappa1 / h[1] * cols[1][r] + cols[0][r] / h[0]
           for r in range(3)]
    ed = [-x / h[1] for x in st.column(1, 2)]
    t = proportionality(cba + ed, [p.c, p.b, p.a, p.e, p.d])
    if t is None:
        raise StructureViolation(
            f"second structure relation recovers data {cba + ed} not proportional to the input")
    return SecondStructure(n, tuple(pairs), tuple(cba), tuple(ed), t)


@dataclass(frozen=True)
class RodriguesReport:
    depth: int
    order: int
    varpi: Fraction
    passed: bool


def rodrigues_verify(m, st, p, n: int, k: int) -> RodriguesReport:
    """``N_{n+k}^T..N_{n+1}^T G^(k)_n s_{n,0} == varpi_k G_{n+k} s_{n+k,k}``
    with ``varpi_k = k! h^(k)_0 / h_k``."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    vals = _values(m)
    if st.order < n + k or len(vals) < 2 * (n + k) + 1:
        raise TooShort(f"order {n + k} factorization and moments up to {2 * (n + k)} required")
    base = m if isinstance(m, MomentSequence) else MomentSequence(vals, p, 0)
    base = MomentSequence(base.values[:2 * (n + k) + 1], p, 0)
    sk = sigma_chain(base, k, check=False)[-1]
    gk = build_gram(sk, n)
    h_k0 = derived_norms(p, st.h[:k + 1], k)[0]
    varpi = factorial(k) * h_k0 / st.h[k]
    e0 = [Fraction(1)] + [Fraction(0)] * n
    lhs = apply_NT_chain(gk.matvec(e0), n, n + k)
    rhs = build_gram(vals, n + k).matvec(st.column(k, n + k + 1))
    passed = varpi != 0 and lhs == [varpi * x for x in rhs]
    return RodriguesReport(k, n, varpi, passed)
