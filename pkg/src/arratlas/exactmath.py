"""Exact integer polynomials, rational interpolation and truncated power series.

Python's ``int`` is the arbitrary-precision integer and ``fractions.Fraction``
the reduced rational; nothing in here ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .errors import DuplicateAbscissa, NonIntegerCoefficient, NonInvertibleSeries


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial with integer coefficients, ascending degree.

    The empty coefficient tuple is the zero polynomial (degree -1).
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be int, got {c!r}")
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> Polynomial:
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __call__(self, t: int) -> int:
        return poly_eval(self, t)

    def __add__(self, other: Polynomial) -> Polynomial:
        m = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coeff(i) + other.coeff(i) for i in range(m)))

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(tuple(other * c for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("t" if k == 1 else f"t^{k}")
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> Polynomial:
        return cls(tuple(int(c) for c in obj["coeffs"]))


def poly_eval(p: Polynomial, t: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def poly_shift(p: Polynomial, c: int) -> Polynomial:
    """Return q with q(t) = p(t - c), by Horner's scheme in the ring Z[t]."""
    step = Polynomial((-c, 1))
    acc = Polynomial()
    for a in reversed(p.coeffs):
        acc = acc * step + Polynomial.constant(a)
    return acc


def poly_product_chain(roots: Iterable[int]) -> Polynomial:
    """Product of (t - r) over ``roots``; the empty product is 1."""
    coeffs = [1]
    for r in roots:
        nxt = [0] * (len(coeffs) + 1)
        for i, a in enumerate(coeffs):
            nxt[i + 1] += a
            nxt[i] -= r * a
        coeffs = nxt
    return Polynomial(tuple(coeffs))


def interpolate(points: Sequence[tuple[int, int]]) -> Polynomial:
    """Unique polynomial of degree < len(points) through ``points``.

    Newton divided differences are carried out over exact rationals and the
    result must have integer coefficients, otherwise NonIntegerCoefficient is
    raised: for counting data a fractional coefficient means a counting bug.
    """
    xs = [int(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa(f"abscissae are not distinct: {xs}")
    if not xs:
        return Polynomial()
    table = [Fraction(y) for _, y in points]
    m = len(xs)
    # table[i] becomes f[x_0..x_i] in place
    for level in range(1, m):
        for i in range(m - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    # expand the Newton form into the monomial basis
    out = [Fraction(0)] * m
    basis = [Fraction(1)]
    for i in range(m):
        for k, b in enumerate(basis):
            out[k] += table[i] * b
        if i < m - 1:
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, b in enumerate(basis):
                nxt[k + 1] += b
                nxt[k] -= xs[i] * b
            basis = nxt
    bad = [c for c in out if c.denominator != 1]
    if bad:
        raise NonIntegerCoefficient(f"interpolated coefficients are not integral: {bad}")
    return Polynomial(tuple(int(c) for c in out))


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series sum c_k x^k known exactly up to and including x^order."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("truncation order must be nonnegative")
        cs = tuple(Fraction(c) for c in self.coeffs[: self.order + 1])
        cs += (Fraction(0),) * (self.order + 1 - len(cs))
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def constant(cls, c, order: int) -> TruncatedSeries:
        return cls(order, (Fraction(c),))

    @classmethod
    def x(cls, order: int) -> TruncatedSeries:
        return cls(order, (Fraction(0), Fraction(1)))

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def _check(self, other: TruncatedSeries) -> None:
        if self.order != other.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.order)
        self._check(other)
        return TruncatedSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries(self.order, tuple(c * a for a in self.coeffs))
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self * (1 / Fraction(other))
        return series_mul(self, series_inv(other))

    def __rtruediv__(self, other):
        return series_inv(self) * other

    def __pow__(self, k: int):
        return series_pow(self, k)

    def egf_values(self) -> list[Fraction]:
        """Coefficients multiplied by n!, i.e. the sequence an EGF encodes."""
        return [c * factorial(k) for k, c in enumerate(self.coeffs)]


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    n = a.order
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j in range(n + 1 - i):
                out[i + j] += ai * b.coeffs[j]
    return TruncatedSeries(n, tuple(out))


def series_inv(s: TruncatedSeries) -> TruncatedSeries:
    c0 = s.coeffs[0]
    if c0 == 0:
        raise NonInvertibleSeries("constant term is zero")
    n = s.order
    out = [Fraction(0)] * (n + 1)
    out[0] = 1 / c0
    for k in range(1, n + 1):
        acc = sum((s.coeffs[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
        out[k] = -acc / c0
    return TruncatedSeries(n, tuple(out))


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp of a series with zero constant term (keeps everything rational)."""
    if s.coeffs[0] != 0:
        raise ValueError("series_exp needs a zero constant term to stay rational")
    n = s.order
    out = [Fraction(0)] * (n + 1)
    out[0] = Fraction(1)
    # f = exp(g)  =>  k f_k = sum_{i=1..k} i g_i f_{k-i}
    for k in range(1, n + 1):
        acc = sum((i * s.coeffs[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
        out[k] = acc / k
    return TruncatedSeries(n, tuple(out))


def series_pow(s: TruncatedSeries, k: int) -> TruncatedSeries:
    if k < 0:
        raise ValueError("series_pow takes a nonnegative integer exponent")
    result = TruncatedSeries.constant(1, s.order)
    base = s
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result
