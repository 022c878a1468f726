"""Sub-arrangements of the type-C arrangement and finite-field point counting.

A hyperplane is one of x_i + x_j = 0, x_i - x_j = 0, x_i = 0 or one of the
two box walls x_i = -1/2, x_i = +1/2.  Reduced mod an odd q, the walls become
2 a_i + 1 = 0 and 2 a_i - 1 = 0, which needs no choice of residue
representative.

The characteristic polynomial is recovered by counting the complement in
Z_q^n at n+1 odd moduli, interpolating, and checking the result against one
more modulus.
"""

from __future__ import annotations

import enum
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import AlreadyBoxed, CapExceeded, EvenModulus, VerificationModulusMismatch
from .exactmath import Polynomial, interpolate, poly_eval

DEFAULT_MAX_N = 7
# largest dense block (in points) evaluated at once by the counting kernel
_DENSE_BUDGET = 1 << 20


class Kind(enum.IntEnum):
    SUM = 0
    DIFF = 1
    COORD = 2
    BOX_LOW = 3
    BOX_HIGH = 4

    @property
    def label(self) -> str:
        return _KIND_LABELS[self]

    @classmethod
    def from_label(cls, label: str) -> Kind:
        try:
            return _LABEL_KINDS[label]
        except KeyError:
            raise ValueError(f"unknown hyperplane kind {label!r}") from None

    @property
    def is_pair(self) -> bool:
        return self in (Kind.SUM, Kind.DIFF)


_KIND_LABELS = {
    Kind.SUM: "sum",
    Kind.DIFF: "diff",
    Kind.COORD: "coord",
    Kind.BOX_LOW: "box_low",
    Kind.BOX_HIGH: "box_high",
}
_LABEL_KINDS = {v: k for k, v in _KIND_LABELS.items()}


@dataclass(frozen=True, order=True)
class Hyperplane:
    """One hyperplane; ``j`` is 0 for the single-index kinds.

    Field order makes the natural sort the canonical (kind, i, j) order used
    for sign vectors.
    """

    kind: Kind
    i: int
    j: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.i < 1:
            raise ValueError(f"index must be >= 1: {self}")
        if self.kind.is_pair:
            if not self.i < self.j:
                raise ValueError(f"pair hyperplane needs i < j: {self}")
        elif self.j != 0:
            raise ValueError(f"{self.kind.label} hyperplane takes a single index")

    @property
    def is_box(self) -> bool:
        return self.kind in (Kind.BOX_LOW, Kind.BOX_HIGH)

    def value(self, x):
        """The affine form whose sign says which side of the hyperplane x is on.

        ``x`` is indexed from 0; works for any exact number type.
        """
        xi = x[self.i - 1]
        if self.kind is Kind.SUM:
            return xi + x[self.j - 1]
        if self.kind is Kind.DIFF:
            return xi - x[self.j - 1]
        if self.kind is Kind.COORD:
            return xi
        # 2 x_i -/+ 1 has the sign of x_i -/+ 1/2 and stays integral on integers
        return 2 * xi + 1 if self.kind is Kind.BOX_LOW else 2 * xi - 1

    def to_json(self) -> dict:
        out = {"kind": self.kind.label, "i": self.i}
        if self.kind.is_pair:
            out["j"] = self.j
        return out

    @classmethod
    def from_json(cls, obj: dict) -> Hyperplane:
        return cls(Kind.from_label(obj["kind"]), int(obj["i"]), int(obj.get("j", 0)))


@dataclass(frozen=True)
class TypeCSubarrangement:
    n: int
    hyperplanes: frozenset[Hyperplane] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("dimension must be nonnegative")
        hs = frozenset(self.hyperplanes)
        for h in hs:
            if max(h.i, h.j) > self.n:
                raise ValueError(f"{h} has an index beyond n={self.n}")
        object.__setattr__(self, "hyperplanes", hs)

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def sorted(self) -> tuple[Hyperplane, ...]:
        return tuple(sorted(self.hyperplanes))

    @property
    def has_box_walls(self) -> bool:
        return any(h.is_box for h in self.hyperplanes)

    @property
    def boxed(self) -> bool:
        return all(
            Hyperplane(k, i) in self.hyperplanes
            for i in range(1, self.n + 1)
            for k in (Kind.BOX_LOW, Kind.BOX_HIGH)
        ) and self.n > 0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "hyperplanes": [h.to_json() for h in self.sorted()],
            "boxed": self.boxed,
        }

    @classmethod
    def from_json(cls, obj: dict) -> TypeCSubarrangement:
        """Parse the JSON form; ``"boxed": true`` adds any missing box walls."""
        n = int(obj["n"])
        hs = {Hyperplane.from_json(h) for h in obj.get("hyperplanes", [])}
        if obj.get("boxed", False):
            hs |= set(_box_walls(n))
        return cls(n, frozenset(hs))


def _box_walls(n: int) -> Iterable[Hyperplane]:
    for i in range(1, n + 1):
        yield Hyperplane(Kind.BOX_LOW, i)
        yield Hyperplane(Kind.BOX_HIGH, i)


def type_c_universe(n: int) -> TypeCSubarrangement:
    hs = [Hyperplane(k, i, j) for i, j in combinations(range(1, n + 1), 2) for k in (Kind.SUM, Kind.DIFF)]
    hs += [Hyperplane(Kind.COORD, i) for i in range(1, n + 1)]
    return TypeCSubarrangement(n, frozenset(hs))


def random_subarrangement(n: int, rng: random.Random, p: float = 0.5) -> TypeCSubarrangement:
    universe = type_c_universe(n).sorted()
    return TypeCSubarrangement(n, frozenset(h for h in universe if rng.random() < p))


def threshold_arrangement(n: int) -> TypeCSubarrangement:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return TypeCSubarrangement(
        n, frozenset(Hyperplane(Kind.SUM, i, j) for i, j in combinations(range(1, n + 1), 2))
    )


def box(arr: TypeCSubarrangement) -> TypeCSubarrangement:
    if arr.has_box_walls:
        raise AlreadyBoxed("arrangement already contains box walls")
    return TypeCSubarrangement(arr.n, arr.hyperplanes | frozenset(_box_walls(arr.n)))


def boxed_threshold_arrangement(n: int) -> TypeCSubarrangement:
    return box(threshold_arrangement(n))


# -- finite-field counting ---------------------------------------------------


def _constraint_tables(arr: TypeCSubarrangement, q: int):
    """Allowed-value masks: one vector per coordinate, one matrix per pair."""
    r = np.arange(q, dtype=np.int64)
    unary = [np.ones(q, dtype=bool) for _ in range(arr.n)]
    pair: dict[tuple[int, int], np.ndarray] = {}
    for h in arr.hyperplanes:
        i = h.i - 1
        if h.kind.is_pair:
            key = (i, h.j - 1)
            if h.kind is Kind.SUM:
                ok = (r[:, None] + r[None, :]) % q != 0
            else:
                ok = r[:, None] != r[None, :]
            pair[key] = pair[key] & ok if key in pair else ok
        elif h.kind is Kind.COORD:
            unary[i] &= r != 0
        elif h.kind is Kind.BOX_LOW:
            unary[i] &= (2 * r + 1) % q != 0
        else:
            unary[i] &= (2 * r - 1) % q != 0
    return unary, pair


def _suffix_length(n: int, q: int) -> int:
    m = 1
    while m < n and q ** (m + 1) <= _DENSE_BUDGET:
        m += 1
    return m


def _suffix_tensor(n: int, m: int, q: int, pair) -> np.ndarray:
    """Dense 0/1 tensor over the last m coordinates holding their mutual pair
    constraints, flattened to shape (q, q**(m-1))."""
    p = n - m
    t = np.ones((q,) * m, dtype=np.int64)
    for (i, j), ok in pair.items():
        if i >= p:
            shape = [1] * m
            shape[i - p] = q
            shape[j - p] = q
            t *= ok.astype(np.int64).reshape(shape)
    return t.reshape(q, -1)


def _count_prefix_values(arr: TypeCSubarrangement, q: int, first_values: Iterable[int]) -> int:
    """Count complement points whose first coordinate lies in ``first_values``.

    The leading n - m coordinates are walked in odometer order with the
    allowed sets of later coordinates narrowed as each one is fixed; the last
    m coordinates are summed densely against the precomputed suffix tensor.
    """
    n = arr.n
    unary, pair = _constraint_tables(arr, q)
    m = _suffix_length(n, q)
    p = n - m
    suffix = _suffix_tensor(n, m, q, pair)
    later = {i: [(j, ok) for (a, j), ok in pair.items() if a == i] for i in range(n)}

    def dense(allow) -> int:
        acc = suffix
        for k in range(p, n):
            acc = allow[k].astype(np.int64) @ acc.reshape(q, -1)
        return int(acc.reshape(-1)[0])

    def walk(depth: int, allow) -> int:
        if depth == p:
            return dense(allow)
        total = 0
        for v in np.flatnonzero(allow[depth]):
            nxt = list(allow)
            for j, ok in later[depth]:
                nxt[j] = nxt[j] & ok[v]
            total += walk(depth + 1, nxt)
        return total

    if p == 0:
        allow = list(unary)
        allow[0] = np.zeros(q, dtype=bool)
        allow[0][list(first_values)] = unary[0][list(first_values)]
        return dense(allow)

    total = 0
    for v in first_values:
        if not unary[0][v]:
            continue
        allow = list(unary)
        for j, ok in later[0]:
            allow[j] = allow[j] & ok[v]
        total += walk(1, allow)
    return total


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("ARRATLAS_JOBS", "1")))
    except ValueError:
        return 1


def count_complement(
    arr: TypeCSubarrangement, q: int, *, jobs: int = 1, max_n: int | None = DEFAULT_MAX_N
) -> int:
    """Number of points of Z_q^n lying on no hyperplane of ``arr`` (q odd, q >= 3).

    The first coordinate's residues are split into disjoint shards; with
    ``jobs > 1`` the shards are counted in worker processes and summed.
    """
    if q % 2 == 0:
        raise EvenModulus(f"modulus must be odd, got {q}")
    if q < 3:
        raise ValueError(f"modulus must be >= 3, got {q}")
    if max_n is not None and arr.n > max_n:
        raise CapExceeded(f"finite-field counting is capped at n <= {max_n} (got n={arr.n})")
    if arr.n == 0:
        return 1
    values = list(range(q))
    if jobs <= 1:
        return _count_prefix_values(arr, q, values)
    shards = [values[k::jobs] for k in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_count_prefix_values, [arr] * jobs, [q] * jobs, shards))


def modulus_schedule(n: int, q0: int | None = None) -> tuple[list[int], int]:
    """Sampling moduli and the extra verification modulus."""
    if q0 is None:
        q0 = 2 * n + 3
    if q0 % 2 == 0:
        raise EvenModulus(f"starting modulus must be odd, got {q0}")
    if q0 < 3:
        raise ValueError(f"starting modulus must be >= 3, got {q0}")
    samples = [q0 + 2 * k for k in range(n + 1)]
    return samples, q0 + 2 * (n + 1)


def char_poly(
    arr: TypeCSubarrangement,
    *,
    q0: int | None = None,
    jobs: int = 1,
    max_n: int | None = DEFAULT_MAX_N,
) -> Polynomial:
    samples, check = modulus_schedule(arr.n, q0)
    points = [(q, count_complement(arr, q, jobs=jobs, max_n=max_n)) for q in samples]
    chi = interpolate(points)
    extra = count_complement(arr, check, jobs=jobs, max_n=max_n)
    if poly_eval(chi, check) != extra:
        raise VerificationModulusMismatch(
            f"interpolant gives {poly_eval(chi, check)} at q={check} but the count is {extra}"
        )
    if chi.degree != arr.n or not chi.is_monic():
        raise VerificationModulusMismatch(f"expected a monic degree-{arr.n} polynomial, got {chi}")
    return chi


def regions_from_chi(chi: Polynomial, n: int) -> int:
    return (-1) ** n * poly_eval(chi, -1)


def bounded_regions_from_chi(chi: Polynomial, n: int) -> int:
    return (-1) ** n * poly_eval(chi, 1)


def regions(arr: TypeCSubarrangement, **kwargs) -> int:
    return regions_from_chi(char_poly(arr, **kwargs), arr.n)


def bounded_regions(arr: TypeCSubarrangement, **kwargs) -> int:
    return bounded_regions_from_chi(char_poly(arr, **kwargs), arr.n)
