"""Exact combinatorial sequences, all built by recurrence and memoized.

Sign conventions at the API boundary:

* ``odd_cycle_counts(k)[j]`` is the *absolute value* of the coefficient of
  t^j in (t-1)(t-3)...(t-(2k-1)); it counts signed permutations of [k] with
  j odd cycles.
* ``boxed_coeffs(k)[j]`` is the *signed* coefficient of t^j in
  (t-3)(t-5)...(t-(2k+1)).
"""

from __future__ import annotations

from functools import cache
from math import factorial

from .exactmath import poly_product_chain


@cache
def _stirling2_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling2_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = (k * prev[k] if k < len(prev) else 0) + prev[k - 1]
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if n < 0 or k < 0 or k > n:
        return 0
    return _stirling2_row(n)[k]


@cache
def ordered_bell(n: int) -> int:
    """Number of ordered set partitions of an n-set (Fubini number)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(factorial(k) * stirling2(n, k) for k in range(n + 1))


@cache
def _eulerian_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _eulerian_row(n - 1)

    def at(k):
        return prev[k] if 0 <= k < len(prev) else 0

    row = [1] + [0] * (n - 1)
    for k in range(1, n):
        row[k] = (n - k) * at(k - 1) + (k + 1) * at(k)
    return tuple(row)


def eulerian(n: int, k: int) -> int:
    """Eulerian number A(n, k): permutations of [n] with exactly k descents.

    A(0, 0) = 1 (the empty permutation); otherwise A(n, k) = 0 unless 0 <= k < n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = _eulerian_row(n)
    return row[k] if 0 <= k < len(row) else 0


@cache
def odd_cycle_counts(k: int) -> tuple[int, ...]:
    p = poly_product_chain(2 * i - 1 for i in range(1, k + 1))
    return tuple(abs(c) for c in p.coeffs)


@cache
def boxed_coeffs(k: int) -> tuple[int, ...]:
    return poly_product_chain(2 * i + 1 for i in range(1, k + 1)).coeffs


def signed_odd_cycle_coeffs(k: int) -> tuple[int, ...]:
    """Signed coefficients of (t-1)(t-3)...(t-(2k-1))."""
    return poly_product_chain(2 * i - 1 for i in range(1, k + 1)).coeffs


def boxed_coeffs_from_partial_sums(k: int) -> tuple[int, ...]:
    """b(k, j) recovered as minus the partial sums of the signed coefficients
    of the (k+1)-fold odd product.

    Works because that product is (t - 1) times the k-fold boxed product.
    """
    c = signed_odd_cycle_coeffs(k + 1)
    out, running = [], 0
    for j in range(k + 1):
        running += c[j]
        out.append(-running)
    return tuple(out)
