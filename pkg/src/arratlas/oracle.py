"""Brute-force ground truth: regions as the distinct sign vectors realized by a
generic finite grid of points.

The grid uses, per coordinate, the 4n values +-j/(2n+2) and +-(1/2 + j/(2n+2))
for j in [n]: all magnitudes distinct and none equal to 1/2.  Any region of a
type-C sub-arrangement (boxed or not) is cut out by the signs of the x_i and
the relative order of the |x_i| among themselves and 1/2, and the grid offers
n distinct magnitudes on each side of 1/2, so every region contains a grid
point.  Grid points on a hyperplane are skipped.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .arrangement import Kind, TypeCSubarrangement
from .errors import PointOnHyperplane, SearchSpaceTooLarge

SignVector = tuple[int, ...]
DEFAULT_CAP = 10**8


@dataclass(frozen=True)
class GenericLattice:
    n: int
    values: tuple[Fraction, ...]

    @property
    def scale(self) -> int:
        return 4 * self.n + 4

    def scaled(self) -> np.ndarray:
        """Values multiplied by ``scale``; all of them are then even integers."""
        return np.array([int(v * self.scale) for v in self.values], dtype=np.int64)

    def check(self) -> None:
        # symmetric under negation, with distinct magnitudes avoiding 0 and 1/2
        mags = [v for v in self.values if v > 0]
        if sorted(-v for v in mags) != sorted(v for v in self.values if v < 0):
            raise AssertionError("lattice is not symmetric")
        if len(set(mags)) != len(mags) or Fraction(1, 2) in mags or 2 * len(mags) != len(self.values):
            raise AssertionError("lattice is not generic")


def build_lattice(n: int) -> GenericLattice:
    if n < 1:
        raise ValueError("n must be >= 1")
    d = 2 * n + 2
    vals = []
    for j in range(1, n + 1):
        low = Fraction(j, d)
        high = Fraction(1, 2) + Fraction(j, d)
        vals += [-high, -low, low, high]
    return GenericLattice(n, tuple(sorted(vals)))


def sign_vector(arr: TypeCSubarrangement, point: Sequence) -> SignVector:
    """Side of every hyperplane (in canonical order) that ``point`` lies on."""
    out = []
    for h in arr.sorted():
        v = h.value(point)
        if v == 0:
            raise PointOnHyperplane(f"{tuple(point)} lies on {h}")
        out.append(1 if v > 0 else -1)
    return tuple(out)


def _affine_forms(arr: TypeCSubarrangement, scale: int):
    hs = arr.sorted()
    a = np.zeros((len(hs), arr.n), dtype=np.int64)
    b = np.zeros(len(hs), dtype=np.int64)
    for r, h in enumerate(hs):
        a[r, h.i - 1] = 1
        if h.kind is Kind.SUM:
            a[r, h.j - 1] = 1
        elif h.kind is Kind.DIFF:
            a[r, h.j - 1] = -1
        elif h.kind is Kind.BOX_LOW:
            b[r] = scale // 2
        elif h.kind is Kind.BOX_HIGH:
            b[r] = -(scale // 2)
    return a, b


def _shard_regions(arr: TypeCSubarrangement, first_values: Sequence[int]) -> set[SignVector]:
    lattice = build_lattice(arr.n)
    vals = lattice.scaled()
    a, b = _affine_forms(arr, lattice.scale)
    rest = arr.n - 1
    if rest:
        grid = np.stack(np.meshgrid(*([vals] * rest), indexing="ij"), axis=-1).reshape(-1, rest)
    else:
        grid = np.zeros((1, 0), dtype=np.int64)
    m = len(b)
    # one integer key per sign row; plain row-wise unique when keys would overflow
    weights = (1 << np.arange(m, dtype=np.int64)) if m < 63 else None
    found: set[SignVector] = set()
    for v0 in first_values:
        pts = np.hstack([np.full((len(grid), 1), v0, dtype=np.int64), grid])
        forms = pts @ a.T + b
        positive = forms[np.all(forms != 0, axis=1)] > 0
        if not positive.size:
            continue
        if weights is None:
            rows = np.unique(positive, axis=0)
        else:
            keys = np.unique(positive.astype(np.int64) @ weights)
            rows = (keys[:, None] >> np.arange(m)) & 1
        for row in rows:
            found.add(tuple(1 if bit else -1 for bit in row))
    return found


def enumerate_regions(
    arr: TypeCSubarrangement, *, cap: int | None = DEFAULT_CAP, jobs: int = 1
) -> frozenset[SignVector]:
    if arr.n == 0:
        return frozenset({()})
    size = (4 * arr.n) ** arr.n
    if cap is not None and size > cap:
        raise SearchSpaceTooLarge(f"grid has {size} points, cap is {cap}")
    if not arr.hyperplanes:
        return frozenset({()})
    firsts = [int(v) for v in build_lattice(arr.n).scaled()]
    if jobs <= 1:
        return frozenset(_shard_regions(arr, firsts))
    shards = [firsts[k::jobs] for k in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_shard_regions, [arr] * jobs, shards)
        return frozenset().union(*parts)


def is_inside_box(arr: TypeCSubarrangement, sv: SignVector) -> bool:
    """True if the sign vector puts every coordinate strictly between its walls."""
    for h, s in zip(arr.sorted(), sv):
        if h.kind is Kind.BOX_LOW and s < 0:
            return False
        if h.kind is Kind.BOX_HIGH and s > 0:
            return False
    return True


@dataclass
class Report:
    missing: int
    duplicates: int
    extraneous: int
    missing_examples: list = field(default_factory=list, repr=False)
    extraneous_examples: list = field(default_factory=list, repr=False)

    @property
    def ok(self) -> bool:
        return self.missing == 0 and self.duplicates == 0 and self.extraneous == 0

    def to_json(self) -> dict:
        return {
            "missing": self.missing,
            "duplicates": self.duplicates,
            "extraneous": self.extraneous,
            "ok": self.ok,
        }


def compare_with(
    arr: TypeCSubarrangement,
    labels: Iterable[SignVector],
    regions: frozenset[SignVector] | None = None,
) -> Report:
    """Check that ``labels`` hit every region of ``arr`` exactly once."""
    if regions is None:
        regions = enumerate_regions(arr)
    counts = Counter(tuple(lab) for lab in labels)
    seen = set(counts)
    missing = regions - seen
    extra = seen - regions
    return Report(
        missing=len(missing),
        duplicates=sum(c - 1 for c in counts.values()),
        extraneous=len(extra),
        missing_examples=sorted(missing)[:5],
        extraneous_examples=sorted(extra)[:5],
    )
