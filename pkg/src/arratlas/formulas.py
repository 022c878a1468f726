"""Closed-form answers for T_n and BT_n, each an independent computation path."""

from __future__ import annotations

import enum
from fractions import Fraction
from math import factorial

from .combinat import boxed_coeffs, eulerian, odd_cycle_counts, ordered_bell, stirling2
from .errors import DomainTooSmall, InvalidEvaluationPoint, NonIntegerEGFCoefficient
from .exactmath import (
    Polynomial,
    TruncatedSeries,
    poly_product_chain,
    poly_shift,
    series_exp,
    series_inv,
    series_pow,
)


class FamilyId(enum.Enum):
    THRESHOLD = "threshold"
    BOXED_THRESHOLD = "boxed"


def _weight(n: int, k: int) -> int:
    return stirling2(n, k) + n * stirling2(n - 1, k)


def chi_threshold(n: int) -> Polynomial:
    """Characteristic polynomial of T_n.

    The sum over k starts at 0.  Its k = 0 weight is zero for n >= 2, and for
    n = 1 it contributes the missing constant 1 so that chi(T_1) = t.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = Polynomial()
    for k in range(n + 1):
        w = _weight(n, k)
        if w:
            total = total + poly_product_chain(2 * i - 1 for i in range(1, k + 1)) * w
    return total


def chi_boxed_threshold(n: int) -> Polynomial:
    return poly_shift(chi_threshold(n), 2)


def chi_coefficient(family: FamilyId, n: int, j: int) -> int:
    """Coefficient of t^j in the family's characteristic polynomial, read off
    the a(k, j) / b(k, j) tables instead of expanding products."""
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got j={j}, n={n}")
    if family is FamilyId.THRESHOLD:
        # a(k, j) is an unsigned count; the t^j coefficient of the k-fold
        # product carries sign (-1)^(k-j), so the sign sits inside the sum
        return sum((-1) ** (k - j) * _weight(n, k) * odd_cycle_counts(k)[j] for k in range(j, n + 1))
    return sum(_weight(n, k) * boxed_coeffs(k)[j] for k in range(j, n + 1))


def regions_boxed(n: int) -> int:
    if n < 2:
        raise DomainTooSmall(f"closed form for r(BT_n) holds for n >= 2, got {n}")
    tail = sum(
        4 * (factorial(k) - factorial(k - 1)) * (k * stirling2(n, k) - n * stirling2(n - 1, k - 1))
        for k in range(1, n + 1)
    )
    return 4 * ordered_bell(n) + tail


def regions_threshold(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n < 2:
        return 1
    return 2 * (ordered_bell(n) - n * ordered_bell(n - 1))


def regions_threshold_eulerian(n: int) -> int:
    if n < 2:
        raise DomainTooSmall(f"Eulerian form needs n >= 2, got {n}")
    return sum(2**k * (n - k) * eulerian(n - 1, k - 1) for k in range(1, n))


def boxed_region_subcounts(n: int) -> dict[str, int]:
    """The four closed-form pieces of r(BT_n), one per half-order form."""
    if n < 2:
        raise DomainTooSmall(f"form decomposition needs n >= 2, got {n}")
    a = ordered_bell
    return {
        "1": 2 * a(n),
        "2a": 2 * (a(n) - n * a(n - 1)),
        "2b": sum(
            4 * (factorial(k) - factorial(k - 1)) * (k * stirling2(n, k) - n * stirling2(n - 1, k - 1))
            for k in range(1, n + 1)
        ),
        "3": n * 2 * a(n - 1),
    }


def _integral(values: list[Fraction], what: str) -> list[int]:
    bad = [(k, v) for k, v in enumerate(values) if v.denominator != 1]
    if bad:
        raise NonIntegerEGFCoefficient(f"{what}: non-integral EGF values at {bad}")
    return [int(v) for v in values]


def regions_boxed_egf_series(order: int) -> TruncatedSeries:
    """e^{2x} (1 - x) / (2 - e^x)^2 truncated at x^order."""
    x = TruncatedSeries.x(order)
    ex = series_exp(x)
    e2x = series_exp(2 * x)
    denom = series_pow(2 - ex, 2)
    return e2x * (1 - x) * series_inv(denom)


def regions_boxed_via_egf(n_max: int) -> list[int]:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return _integral(regions_boxed_egf_series(n_max).egf_values(), "r(BT_n)")


def chi_boxed_egf_series(t: int, order: int) -> TruncatedSeries:
    """(1 + x) (2 e^x - 1)^((t-3)/2) truncated at x^order, for odd t >= 3."""
    if t < 3 or t % 2 == 0:
        raise InvalidEvaluationPoint(f"t must be odd and >= 3, got {t}")
    x = TruncatedSeries.x(order)
    return (1 + x) * series_pow(2 * series_exp(x) - 1, (t - 3) // 2)


def chi_boxed_via_egf(t: int, n_max: int) -> list[int]:
    return _integral(chi_boxed_egf_series(t, n_max).egf_values(), f"chi(BT_n)({t})")
