"""Pearson data and the moment sequences generated by it.

A moment sequence ``mu_0, mu_1, ...`` is pre-classical for the data
``(a, b, c, d, e)`` when

    (n a + d) mu_{n+1} + (n b + e) mu_n + n c mu_{n-1} = 0,   n >= 0,

with ``mu_{-1} = 0``.  Here ``phi(x) = a x^2 + b x + c`` and
``psi(x) = d x + e``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateRecurrence, InvalidPhi, TooShort, ZeroMu0
from .poly import as_fraction


@dataclass(frozen=True)
class PearsonData:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction

    def __post_init__(self):
        for name in "abcde":
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.a == 0 and self.b == 0 and self.c == 0:
            raise InvalidPhi()

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d, self.e)

    def leading(self, n: int) -> Fraction:
        """Coefficient ``n a + d`` of ``mu_{n+1}`` in the recurrence row ``n``."""
        return n * self.a + self.d

    def eigenvalue(self, j: int) -> Fraction:
        """``lambda_j = j ((j-1) a + d)``."""
        return j * ((j - 1) * self.a + self.d)

    def first_degenerate_index(self):
        """Smallest ``n >= 0`` with ``n a + d == 0``, or ``None`` if there is none."""
        if self.a == 0:
            return 0 if self.d == 0 else None
        r = -self.d / self.a
        if r.denominator == 1 and r >= 0:
            return int(r)
        return None

    def shifted(self, k: int) -> "PearsonData":
        return PearsonData(self.a, self.b, self.c, self.d + 2 * k * self.a, self.e + k * self.b)


def validate_pearson(a, b, c, d, e, range_N: int) -> PearsonData:
    """Build :class:`PearsonData`, checking ``n a + d != 0`` for ``0 <= n <= range_N``.

    Data whose only degenerate index lies beyond ``range_N`` is accepted.
    """
    p = PearsonData(a, b, c, d, e)
    _check_range(p, range_N)
    return p


def _check_range(p: PearsonData, range_N: int):
    n = p.first_degenerate_index()
    if n is not None and n <= range_N:
        raise DegenerateRecurrence(n)


class Family(enum.Enum):
    HERMITE = "Hermite"
    LAGUERRE = "Laguerre"
    JACOBI = "Jacobi"
    BESSEL = "Bessel"
    CUSTOM = "Custom"


@dataclass(frozen=True)
class FamilyTag:
    family: Family
    phi_degree: int
    discriminant_sign: int  # sign of b^2 - 4ac; 0 unless deg phi == 2

    def __str__(self):
        return self.family.value


def classify_family(p: PearsonData) -> FamilyTag:
    """Classify by the degree and root structure of ``phi``."""
    if p.a != 0:
        disc = p.b * p.b - 4 * p.a * p.c
        sign = (disc > 0) - (disc < 0)
        return FamilyTag(Family.BESSEL if sign == 0 else Family.JACOBI, 2, sign)
    if p.b != 0:
        return FamilyTag(Family.LAGUERRE, 1, 0)
    return FamilyTag(Family.HERMITE, 0, 0)


@dataclass(frozen=True)
class MomentSequence:
    """Exact moments ``v_0..v_N`` tagged with the Pearson data that should
    generate them.

    ``level`` is the number of times the sequence has been multiplied by
    ``phi`` (``0`` for the base moments); the recurrence that the values must
    satisfy uses ``source.shifted(level)``.  Construction does not enforce the
    recurrence, so deliberately corrupted sequences can be represented and
    checked with :func:`verify_recurrence`.
    """

    values: tuple
    source: PearsonData = None
    level: int = 0

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(as_fraction(v) for v in self.values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    @property
    def pearson(self) -> PearsonData:
        """Pearson data of this level."""
        return self.source.shifted(self.level)

    def replace(self, index: int, value) -> "MomentSequence":
        vals = list(self.values)
        vals[index] = value
        return MomentSequence(tuple(vals), self.source, self.level)

    def truncated(self, length: int) -> "MomentSequence":
        return MomentSequence(self.values[:length], self.source, self.level)


def extend_sequence(p: PearsonData, mu0, length: int) -> tuple:
    """The first ``length`` values of the sequence generated from ``mu0``."""
    mu0 = as_fraction(mu0)
    if mu0 == 0:
        raise ZeroMu0()
    if length < 1:
        return ()
    _check_range(p, length - 2)
    vals = [mu0]
    for n in range(length - 1):
        prev = vals[n - 1] if n >= 1 else 0
        vals.append(-((n * p.b + p.e) * vals[n] + n * p.c * prev) / p.leading(n))
    return tuple(vals)


def generate_moments(p: PearsonData, mu0, N: int) -> MomentSequence:
    """Moments ``mu_0..mu_{2N}``: exactly what the Gram matrix ``G_N`` needs."""
    if N < 0:
        raise ValueError("N must be >= 0")
    return MomentSequence(extend_sequence(p, mu0, 2 * N + 1), p, 0)


def pearson_shift(p: PearsonData, k: int, range_N: int = None) -> PearsonData:
    """Pearson data of ``phi^k u``: ``(a, b, c, d + 2ka, e + kb)``.

    When ``range_N`` is given the shifted data is validated on that range.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    q = p.shifted(k)
    if range_N is not None:
        _check_range(q, range_N)
    return q


def sigma_values(p: PearsonData, values) -> tuple:
    """``a v_{n+2} + b v_{n+1} + c v_n`` for every ``n`` the input supports."""
    v = values
    return tuple(p.a * v[n + 2] + p.b * v[n + 1] + p.c * v[n] for n in range(len(v) - 2))


def derive_sigma(m: MomentSequence, check: bool = True) -> MomentSequence:
    """Moments of ``phi u`` from those of ``u``; the output is one level up.

    With ``check`` set and a pre-classical input, the output is verified
    against its own (shifted) recurrence before being returned.
    """
    if len(m) < 3:
        raise TooShort(f"derive_sigma needs at least 3 values, got {len(m)}")
    out = MomentSequence(sigma_values(m.source, m.values), m.source, m.level + 1)
    if check and verify_recurrence(m) and not verify_recurrence(out):
        raise ArithmeticError("derived sequence violates its recurrence")
    return out


def sigma_chain(m: MomentSequence, k: int, check: bool = True) -> list:
    """``[m, sigma^(1), ..., sigma^(k)]``."""
    chain = [m]
    for _ in range(k):
        chain.append(derive_sigma(chain[-1], check=check))
    return chain


def recurrence_residual(p: PearsonData, values, n: int) -> Fraction:
    v = values
    prev = v[n - 1] if n >= 1 else 0
    return p.leading(n) * v[n + 1] + (n * p.b + p.e) * v[n] + n * p.c * prev


def first_recurrence_failure(m: MomentSequence):
    """Index ``n`` of the first recurrence row that fails, or ``None``."""
    p = m.pearson
    for n in range(len(m) - 1):
        if recurrence_residual(p, m.values, n) != 0:
            return n
    return None


def verify_recurrence(m: MomentSequence) -> bool:
    return first_recurrence_failure(m) is None


HERMITE = PearsonData(0, 0, 1, -2, 0)
LAGUERRE = PearsonData(0, 1, 0, -1, 1)
LEGENDRE = PearsonData(-1, 0, 1, -2, 0)
DELTA = PearsonData(0, 1, 0, 1, 0)


def bessel(alpha) -> PearsonData:
    return PearsonData(1, 0, 0, alpha, 2)


def laguerre(alpha) -> PearsonData:
    """Weight ``x^alpha e^{-x}``: ``phi = x``, ``psi = -x + alpha + 1``."""
    return PearsonData(0, 1, 0, -1, as_fraction(alpha) + 1)


def jacobi(alpha, beta) -> PearsonData:
    """Weight ``(1-x)^alpha (1+x)^beta`` on ``(-1, 1)``."""
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    return PearsonData(-1, 0, 1, -(alpha + beta + 2), beta - alpha)


@dataclass(frozen=True)
class Fixture:
    name: str
    pearson: PearsonData
    mu0: Fraction = field(default=Fraction(1))


FIXTURES = {
    "hermite": Fixture("hermite", HERMITE, Fraction(1)),
    "laguerre": Fixture("laguerre", LAGUERRE, Fraction(1)),
    "legendre": Fixture("legendre", LEGENDRE, Fraction(2)),
    "bessel": Fixture("bessel", bessel(1), Fraction(1)),
    "delta": Fixture("delta", DELTA, Fraction(1)),
}
