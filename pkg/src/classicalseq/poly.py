"""Dense exact polynomials and the polynomial view of a factorization.

Coefficients are stored in ascending degree, matching the monomial column
vector ``[1, x, ..., x^n]`` that the matrices act on.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def pochhammer(nu, k: int):
    """Rising factorial ``nu (nu+1) ... (nu+k-1)``, with ``(nu)_0 = 1``."""
    return prod((nu + i for i in range(k)), start=1)


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Polynomial:
    """Immutable polynomial with exact rational coefficients.

    >>> p = Polynomial([Fraction(-1, 3), 0, 1])
    >>> str(p)
    'x^2 - 1/3'
    >>> p(1)
    Fraction(2, 3)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, k, coeff=1):
        return cls([0] * k + [coeff])

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def padded(self, length: int) -> list:
        if length < len(self.coeffs):
            raise ValueError(f"degree {self.degree} does not fit in length {length}")
        return list(self.coeffs) + [Fraction(0)] * (length - len(self.coeffs))

    def derivative(self, k: int = 1) -> "Polynomial":
        cs = list(self.coeffs)
        for _ in range(k):
            cs = [i * c for i, c in enumerate(cs)][1:]
        return Polynomial(cs)

    def __call__(self, x):
        return evaluate(self, x)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([a + b for a, b in zip(self.padded(n), other.padded(n))])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = as_fraction(scalar)
        return Polynomial([c / scalar for c in self.coeffs])

    def __repr__(self):
        return f"Polynomial({[format_rational(c) for c in self.coeffs]!r})"

    def __str__(self):
        return format_polynomial(self)


def _coerce(x) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial([x])


def format_polynomial(q: Polynomial, var: str = "x") -> str:
    """Descending-degree text form, e.g. ``x^3 - 3/5 x``; zero terms omitted."""
    terms = []
    for k in range(q.degree, -1, -1):
        c = q.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{format_rational(mag)} {power}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def evaluate(q: Polynomial, x) -> Fraction:
    """Horner evaluation."""
    x = as_fraction(x)
    acc = Fraction(0)
    for c in reversed(q.coeffs):
        acc = acc * x + c
    return acc


def extract_polynomials(state) -> list:
    """Monic orthogonal polynomials ``P_0..P_n`` read off the columns of ``S^T``."""
    return [Polynomial(col) for col in state.columns]


def derivative_family(polys, k: int) -> list:
    """``Q_{j,k} = P_{j+k}^{(k)} / (j+1)_k`` for every ``j`` the list supports."""
    from .errors import TooShort

    if k < 1:
        raise ValueError("k must be >= 1")
    if len(polys) <= k:
        raise TooShort(f"need more than {k} polynomials, got {len(polys)}")
    return [polys[j + k].derivative(k) / pochhammer(j + 1, k) for j in range(len(polys) - k)]


def apply_D(q: Polynomial, p) -> Polynomial:
    """``phi q'' + psi q'`` for the Pearson data ``p``."""
    return phi_of(p) * q.derivative(2) + psi_of(p) * q.derivative(1)


def phi_of(p) -> Polynomial:
    return Polynomial([p.c, p.b, p.a])


def psi_of(p) -> Polynomial:
    return Polynomial([p.e, p.d])
