from __future__ import annotations

from collections import Counter
from itertools import permutations, product
from math import factorial

import pytest

from arratlas.combinat import (
    boxed_coeffs,
    boxed_coeffs_from_partial_sums,
    eulerian,
    odd_cycle_counts,
    ordered_bell,
    signed_odd_cycle_coeffs,
    stirling2,
)
from arratlas.exactmath import poly_product_chain


def set_partitions_by_blocks(n: int) -> Counter:
    """Count restricted growth strings of length n by number of blocks."""
    out: Counter = Counter()

    def walk(prefix, m):
        if len(prefix) == n:
            out[m] += 1
            return
        for b in range(m + 1):
            walk(prefix + [b], max(m, b + 1))

    walk([], 0)
    return out


def ordered_partitions_count(n: int) -> int:
    """Surjections [n] -> [k], summed over k."""
    total = 0
    for k in range(n + 1):
        total += sum(1 for f in product(range(k), repeat=n) if len(set(f)) == k)
    return total


def signed_perm_positive_cycles(k: int) -> Counter:
    """Signed permutations of [k] by the number of cycles whose sign product is +1."""
    out: Counter = Counter()
    for perm in permutations(range(k)):
        for signs in product((1, -1), repeat=k):
            seen, count = set(), 0
            for start in range(k):
                if start in seen:
                    continue
                sign, v = 1, start
                while v not in seen:
                    seen.add(v)
                    sign *= signs[v]
                    v = perm[v]
                count += sign > 0
            out[count] += 1
    return out


@pytest.mark.parametrize("n", range(0, 8))
def test_stirling2_matches_set_partitions(n):
    counts = set_partitions_by_blocks(n) if n else Counter({0: 1})
    assert [stirling2(n, k) for k in range(n + 1)] == [counts[k] for k in range(n + 1)]


def test_stirling2_out_of_range():
    assert stirling2(3, 4) == 0
    assert stirling2(-1, 0) == 0
    assert stirling2(4, -1) == 0


@pytest.mark.parametrize("n", range(0, 7))
def test_ordered_bell_matches_surjections(n):
    assert ordered_bell(n) == ordered_partitions_count(n)


def test_ordered_bell_prefix():
    assert [ordered_bell(n) for n in range(8)] == [1, 1, 3, 13, 75, 541, 4683, 47293]


@pytest.mark.parametrize("n", range(1, 8))
def test_eulerian_matches_descents(n):
    counts = Counter(sum(p[i] > p[i + 1] for i in range(n - 1)) for p in permutations(range(n)))
    assert [eulerian(n, k) for k in range(n)] == [counts[k] for k in range(n)]
    assert eulerian(n, n) == 0 and eulerian(n, -1) == 0


def test_eulerian_empty_permutation():
    assert eulerian(0, 0) == 1
    assert eulerian(0, 1) == 0


@pytest.mark.parametrize("k", range(0, 6))
def test_odd_cycle_counts_match_signed_permutations(k):
    counts = signed_perm_positive_cycles(k)
    assert list(odd_cycle_counts(k)) == [counts[j] for j in range(k + 1)]
    assert sum(odd_cycle_counts(k)) == 2**k * factorial(k)


@pytest.mark.parametrize("k", range(0, 9))
def test_boxed_coeffs(k):
    assert boxed_coeffs(k) == poly_product_chain(2 * i + 1 for i in range(1, k + 1)).coeffs
    assert boxed_coeffs_from_partial_sums(k) == boxed_coeffs(k)
    assert [abs(c) for c in signed_odd_cycle_coeffs(k)] == list(odd_cycle_counts(k))


@pytest.mark.parametrize("n", range(1, 13))
def test_ordered_bell_from_eulerian(n):
    assert ordered_bell(n) == sum(2**k * eulerian(n, k) for k in range(n))
