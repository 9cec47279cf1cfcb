"""Truncated formal power series with exact rational coefficients.

A series lives in Q[xi]/(xi^order): it carries exactly ``order``
coefficients, index = power of xi.  All arithmetic is exact
arbitrary-precision rational; there is no floating point in this module.
Truncation order is explicit and mixed-order arithmetic is an error,
never a silent promotion.

The one series this package ultimately cares about is

    log(1 - xi)^p  =  sum_{l >= 0}  a(p, l) xi^(p + l),

whose coefficients ``a(p, l)`` are produced by :func:`taylor_coefficients_a`.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .rational import format_rational, parse_rational

__all__ = [
    "TruncatedSeries",
    "log_one_minus",
    "exp_series",
    "compose",
    "taylor_coefficients_a",
]


class TruncatedSeries:
    """An element of Q[xi]/(xi^order).

    Immutable; coefficients are stored as a tuple of Fractions of length
    exactly ``order`` (Fraction keeps them canonical: positive denominator,
    coprime).  Operations between series of different orders raise
    ValueError.
    """

    __slots__ = ("order", "coefficients")

    def __init__(self, order: int, coefficients):
        if order < 1:
            raise ValueError(f"order must be a positive integer, got {order}")
        coeffs = tuple(Fraction(c) for c in coefficients)
        if len(coeffs) != order:
            raise ValueError(
                f"expected {order} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coefficients", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, (0,) * order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, (1,) + (0,) * (order - 1))

    @classmethod
    def xi(cls, order: int) -> "TruncatedSeries":
        """The generator xi (zero when order == 1, since xi = 0 mod xi)."""
        coeffs = [0] * order
        if order > 1:
            coeffs[1] = 1
        return cls(order, coeffs)

    @classmethod
    def monomial(cls, order: int, power: int, coefficient=1) -> "TruncatedSeries":
        coeffs = [Fraction(0)] * order
        if 0 <= power < order:
            coeffs[power] = Fraction(coefficient)
        return cls(order, coeffs)

    # -- ring operations ---------------------------------------------

    def _check_order(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if self.order != other.order:
            raise ValueError(
                f"order mismatch: {self.order} != {other.order}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(
            self.order,
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(
            self.order,
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-a for a in self.coefficients))

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_order(other)
        n = self.order
        a, b = self.coefficients, other.coefficients
        out = [Fraction(0)] * n
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(n - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncatedSeries(n, out)

    __rmul__ = __mul__

    def scale(self, c) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries(self.order, tuple(c * a for a in self.coefficients))

    def __pow__(self, p: int) -> "TruncatedSeries":
        # binary exponentiation; p can reach a few hundred in sweeps
        if p < 0:
            raise ValueError("negative powers are not defined here")
        result = TruncatedSeries.one(self.order)
        base = self
        while p:
            if p & 1:
                result = result * base
            base = base * base if p > 1 else base
            p >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        return hash((self.order, self.coefficients))

    def __repr__(self):
        return f"TruncatedSeries({self.order}, {list(self.coefficients)})"

    # -- accessors & serialization -------------------------------------

    @property
    def constant_term(self) -> Fraction:
        return self.coefficients[0]

    def __getitem__(self, power: int) -> Fraction:
        return self.coefficients[power]

    def to_strings(self) -> list[str]:
        """Serialize as a JSON-ready list of "num/den" strings."""
        return [format_rational(c) for c in self.coefficients]

    @classmethod
    def from_strings(cls, items) -> "TruncatedSeries":
        coeffs = [parse_rational(s) for s in items]
        return cls(len(coeffs), coeffs)


def log_one_minus(order: int) -> TruncatedSeries:
    """The Mercator series log(1 - xi) = -sum_{j>=1} xi^j / j, mod xi^order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs = [Fraction(0)] + [Fraction(-1, j) for j in range(1, order)]
    return TruncatedSeries(order, coeffs)


def exp_series(s: TruncatedSeries) -> TruncatedSeries:
    """exp(s) = sum_{j>=0} s^j / j!, requiring zero constant term.

    With constant term 0, s^j has no terms below xi^j, so the sum is
    finite: j < order suffices.
    """
    if s.constant_term != 0:
        raise ValueError("exp_series requires a series with zero constant term")
    result = TruncatedSeries.one(s.order)
    power = TruncatedSeries.one(s.order)
    for j in range(1, s.order):
        power = power * s
        result = result + power.scale(Fraction(1, factorial(j)))
    return result


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(.)) mod xi^order by Horner evaluation in the truncated ring.

    Requires equal orders and zero constant term of ``inner`` (otherwise
    truncated composition is not well defined).
    """
    outer._check_order(inner)
    if inner.constant_term != 0:
        raise ValueError("compose requires the inner series to have zero constant term")
    n = outer.order
    result = TruncatedSeries.monomial(n, 0, outer.coefficients[-1])
    for k in range(n - 2, -1, -1):
        result = result * inner + TruncatedSeries.monomial(n, 0, outer.coefficients[k])
    return result


def taylor_coefficients_a(p: int, kappa: int) -> list[Fraction]:
    """Coefficients a(p, 0..kappa): a(p, l) is the xi^(p+l) coefficient of
    log(1 - xi)^p.

    Because log(1 - xi) = -xi * u(xi) with u = sum_{j>=0} xi^j/(j+1), the
    p-th power factors as (-1)^p xi^p u^p; only u^p mod xi^(kappa+1) is
    needed, which keeps sweeps over p up to a few hundred cheap.  The
    result equals the coefficient list of the full series at any working
    order >= p + kappa + 1.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    if kappa < 0:
        raise ValueError("kappa must be >= 0")
    order = kappa + 1
    u = TruncatedSeries(order, [Fraction(1, j + 1) for j in range(order)])
    up = u ** p
    sign = -1 if p % 2 else 1
    return [sign * c for c in up.coefficients]
