"""Signed ordered partitions ("half-orders") labelling the regions of BT_n.

A region of BT_n is recorded by the second half of a symmetric total order on
the signed blocks of {-n..n}\\{0} together with the markers -1/2 and 1/2.  Only
the part from the middle onwards is stored: blocks B_1 < ... < B_k with a
sign each, and the position of the 1/2 marker among them.  Canonical
half-orders come in three shapes:

1. marker first, signs alternate;
2. marker after l >= 1 blocks, |B_1| > 1, signs alternate on each side of the
   marker (2a: marker last, 2b: at least one block after it);
3. marker after a singleton B_1 that has the same sign as B_2, signs
   alternate from B_2 on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, combinations
from typing import Iterator, Sequence

import numpy as np

from .arrangement import Kind, boxed_threshold_arrangement
from .errors import NotCanonical
from .formulas import boxed_region_subcounts
from .oracle import SignVector, sign_vector

HALF = Fraction(1, 2)


@dataclass(frozen=True, order=True)
class SignedBlock:
    elements: tuple[int, ...]
    sign: int

    def __post_init__(self):
        if not self.elements:
            raise ValueError("blocks are nonempty")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        object.__setattr__(self, "elements", tuple(sorted(self.elements)))

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + "{" + ",".join(map(str, self.elements)) + "}"

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "sign": "+" if self.sign > 0 else "-"}

    @classmethod
    def from_json(cls, obj: dict) -> SignedBlock:
        sign = {"+": 1, "-": -1}[obj["sign"]]
        return cls(tuple(int(e) for e in obj["elements"]), sign)


@dataclass(frozen=True)
class HalfOrder:
    blocks: tuple[SignedBlock, ...]
    half_position: int

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if not 0 <= self.half_position <= len(self.blocks):
            raise ValueError(f"marker position {self.half_position} out of range")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __str__(self) -> str:
        parts = [str(b) for b in self.blocks]
        parts.insert(self.half_position, "1/2")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"blocks": [b.to_json() for b in self.blocks], "half_position": self.half_position}

    @classmethod
    def from_json(cls, obj: dict) -> HalfOrder:
        return cls(tuple(SignedBlock.from_json(b) for b in obj["blocks"]), int(obj["half_position"]))


class FormTag(enum.Enum):
    FORM1 = 1
    FORM2 = 2
    FORM3 = 3


def _alternating(blocks: Sequence[SignedBlock]) -> bool:
    return all(a.sign != b.sign for a, b in zip(blocks, blocks[1:]))


def classify_form(h: HalfOrder) -> FormTag:
    n = h.n
    labels = sorted(chain.from_iterable(b.elements for b in h.blocks))
    if labels != list(range(1, n + 1)):
        raise NotCanonical(f"blocks do not partition [{n}]: {h}")
    bs, l = h.blocks, h.half_position
    if l == 0:
        if _alternating(bs):
            return FormTag.FORM1
        raise NotCanonical(f"signs after the marker must alternate: {h}")
    if len(bs[0]) > 1:
        if _alternating(bs[:l]) and _alternating(bs[l:]):
            return FormTag.FORM2
        raise NotCanonical(f"signs must alternate on each side of the marker: {h}")
    if l == 1 and len(bs) >= 2 and bs[0].sign == bs[1].sign and _alternating(bs[1:]):
        return FormTag.FORM3
    raise NotCanonical(f"no canonical form matches {h}")


def subform(h: HalfOrder) -> str:
    """Form label with form 2 split by whether any block follows the marker."""
    tag = classify_form(h)
    if tag is FormTag.FORM2:
        return "2a" if h.half_position == len(h.blocks) else "2b"
    return str(tag.value)


def ordered_partitions(elements: Sequence[int], min_first: int = 1) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Ordered set partitions of ``elements`` in lexicographic order of the
    block sequence (each block a sorted tuple)."""
    elems = tuple(sorted(elements))
    if not elems:
        yield ()
        return
    firsts = sorted(
        c for k in range(max(min_first, 1), len(elems) + 1) for c in combinations(elems, k)
    )
    for first in firsts:
        rest = tuple(e for e in elems if e not in first)
        for tail in ordered_partitions(rest):
            yield (first,) + tail


def _signed(parts, start_sign: int) -> tuple[SignedBlock, ...]:
    return tuple(SignedBlock(p, start_sign * (-1) ** k) for k, p in enumerate(parts))


SIGNS = (1, -1)


def _form1(n):
    for parts in ordered_partitions(range(1, n + 1)):
        for s in SIGNS:
            yield HalfOrder(_signed(parts, s), 0)


def _form2a(n):
    for parts in ordered_partitions(range(1, n + 1), min_first=2):
        for s in SIGNS:
            yield HalfOrder(_signed(parts, s), len(parts))


def _form2b(n):
    for parts in ordered_partitions(range(1, n + 1), min_first=2):
        k = len(parts)
        for s1 in SIGNS:
            for s2 in SIGNS:
                for l in range(1, k):
                    yield HalfOrder(_signed(parts[:l], s1) + _signed(parts[l:], s2), l)


def _form3(n):
    for i in range(1, n + 1):
        rest = [e for e in range(1, n + 1) if e != i]
        for parts in ordered_partitions(rest):
            for s in SIGNS:
                yield HalfOrder((SignedBlock((i,), s),) + _signed(parts, s), 1)


_FORM_STREAMS = {"1": _form1, "2a": _form2a, "2b": _form2b, "3": _form3}


def enumerate_half_orders(n: int, forms: Sequence[str] = ("1", "2a", "2b", "3")) -> Iterator[HalfOrder]:
    """Every canonical half-order on [n] exactly once.

    Order: by form (1, 2a, 2b, 3), then block contents, then signs, then
    marker position.
    """
    if n < 2:
        raise ValueError(f"half-orders are enumerated for n >= 2, got {n}")
    for f in forms:
        yield from _FORM_STREAMS[f](n)


def count_by_form(n: int, *, enumerate_: bool = False) -> dict[str, int]:
    """Per-form counts, from the closed forms or by walking the stream."""
    if not enumerate_:
        return boxed_region_subcounts(n)
    return {f: sum(1 for _ in _FORM_STREAMS[f](n)) for f in _FORM_STREAMS}


def representative_values(n: int) -> tuple[list[Fraction], list[Fraction]]:
    """Magnitudes used below and above 1/2 by ``order_to_point``."""
    d = 2 * n + 2
    return [Fraction(j, d) for j in range(1, n + 1)], [HALF + Fraction(j, d) for j in range(1, n + 1)]


def order_to_point(h: HalfOrder) -> list[Fraction]:
    n = h.n
    below, above = representative_values(n)
    x = [Fraction(0)] * n
    for idx, block in enumerate(h.blocks):
        if idx < h.half_position:
            c = below[idx]
        else:
            c = above[idx - h.half_position]
        for a in block.elements:
            x[a - 1] = block.sign * c
    return x


# -- region -> order ----------------------------------------------------------

_H, _L = "H", "L"


def point_to_order(p: Sequence, n: int | None = None) -> HalfOrder:
    """Half-order of the BT_n region containing ``p`` (p must avoid every hyperplane)."""
    n = len(p) if n is None else n
    arr = boxed_threshold_arrangement(n)
    return region_to_order(sign_vector(arr, p), n)


def region_to_order(sv: SignVector, n: int) -> HalfOrder:
    """Build the half-order from the sign data of a region alone.

    Relations x_a < x_b are read off the signs for comparable pairs only,
    blocks are the classes of same-sign elements with nothing in between,
    blocks and the two markers are ordered through chains of relations, and
    the one possible tie (a unique i strictly inside the box) is broken by
    the sign of the first block after 1/2.
    """
    if n < 2:
        raise ValueError(f"half-orders are defined for n >= 2, got {n}")
    arr = boxed_threshold_arrangement(n)
    sums, low, high = {}, {}, {}
    for hp, s in zip(arr.sorted(), sv):
        if hp.kind is Kind.SUM:
            sums[hp.i, hp.j] = sums[hp.j, hp.i] = s
        elif hp.kind is Kind.BOX_LOW:
            low[hp.i] = s  # sign of x_i + 1/2
        else:
            high[hp.i] = s  # sign of x_i - 1/2

    elems = [e for i in range(1, n + 1) for e in (i, -i)]
    nodes = elems + [_H, _L]
    index = {v: k for k, v in enumerate(nodes)}
    size = len(nodes)
    less = np.zeros((size, size), dtype=bool)

    def rel(u, v):
        less[index[u], index[v]] = True

    for u in elems:
        su, i = (1 if u > 0 else -1), abs(u)
        for v in elems:
            if (v > 0) != (u > 0) and abs(v) != i:
                # x_u - x_v = su * (x_i + x_|v|)
                if su * sums[i, abs(v)] < 0:
                    rel(u, v)
        # x_u against +1/2 and -1/2
        below_half = high[i] < 0 if su > 0 else low[i] > 0
        below_neg_half = low[i] < 0 if su > 0 else high[i] > 0
        rel(u, _H) if below_half else rel(_H, u)
        rel(u, _L) if below_neg_half else rel(_L, u)

    # same-sign elements are equivalent when nothing sits strictly between them
    between = (less.astype(np.int64) @ less.astype(np.int64)) > 0
    blocks: list[frozenset[int]] = []
    assigned: dict[int, int] = {}
    for u in elems:
        if u in assigned:
            continue
        cls = [
            v for v in elems
            if (v > 0) == (u > 0)
            and (v == u or not (between[index[u], index[v]] or between[index[v], index[u]]))
        ]
        for v in cls:
            if v in assigned:
                raise AssertionError("block relation is not transitive")
            assigned[v] = len(blocks)
        blocks.append(frozenset(cls))
    for b in blocks:
        for u, v in combinations(sorted(b), 2):
            if between[index[u], index[v]] or between[index[v], index[u]]:
                raise AssertionError("block relation is not transitive")

    reach = less.copy()
    for k in range(size):
        reach |= reach[:, [k]] & reach[[k], :]

    items: list = blocks + [_H, _L]

    def members(item):
        return [index[item]] if item in (_H, _L) else [index[e] for e in item]

    def item_less(x, y) -> bool:
        if x == _L and y == _H:
            return True
        if x == _H and y == _L:
            return False
        return any(reach[a, b] for a in members(x) for b in members(y))

    m = len(items)
    lt = [[item_less(items[a], items[b]) for b in range(m)] for a in range(m)]
    for a in range(m):
        if lt[a][a]:
            raise AssertionError(f"block {items[a]} precedes itself")
        for b in range(a + 1, m):
            if lt[a][b] and lt[b][a]:
                raise AssertionError("block order is not antisymmetric")
    open_pairs = [(a, b) for a in range(m) for b in range(a + 1, m) if not lt[a][b] and not lt[b][a]]

    rank = [sum(lt[b][a] for b in range(m)) for a in range(m)]
    order = sorted(range(m), key=lambda a: rank[a])
    if open_pairs:
        middle = [i for i in range(1, n + 1) if low[i] > 0 and high[i] < 0]
        if len(open_pairs) != 1 or len(middle) != 1:
            raise AssertionError(f"block order is not total: {len(open_pairs)} open pairs")
        i = middle[0]
        pair = {items[open_pairs[0][0]], items[open_pairs[0][1]]}
        if pair != {frozenset({i}), frozenset({-i})}:
            raise AssertionError("incomparable blocks are not {i}, {-i}")
        pos_h = order.index(items.index(_H))
        nxt = items[order[pos_h + 1]]
        b2_positive = next(iter(nxt)) > 0
        first, second = (frozenset({-i}), frozenset({i})) if b2_positive else (frozenset({i}), frozenset({-i}))
        # tied items have equal rank, so they sit next to each other
        slot = min(order.index(a) for a in open_pairs[0])
        order[slot:slot + 2] = [items.index(first), items.index(second)]

    seq = [items[a] for a in order]
    k = len(blocks) // 2

    def neg(item):
        if item == _H:
            return _L
        if item == _L:
            return _H
        return frozenset(-e for e in item)

    if any(seq[k - t] != neg(seq[k + 1 + t]) for t in range(k + 1)):
        raise AssertionError("order is not symmetric under negation")

    second_half = seq[k + 1:]
    out_blocks = []
    marker = None
    for item in second_half:
        if item == _H:
            marker = len(out_blocks)
        else:
            sign = 1 if next(iter(item)) > 0 else -1
            out_blocks.append(SignedBlock(tuple(abs(e) for e in item), sign))
    return HalfOrder(tuple(out_blocks), marker)


# -- the threshold arrangement T_n ---------------------------------------------


def enumerate_threshold_orders(n: int) -> Iterator[tuple[SignedBlock, ...]]:
    """Alternating-sign ordered partitions of [n] with first block of size > 1.

    For n = 1 the single block is reported as -{1}: with no pairs, its sign
    carries no information.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        yield (SignedBlock((1,), -1),)
        return
    for parts in ordered_partitions(range(1, n + 1), min_first=2):
        for s in SIGNS:
            yield _signed(parts, s)


def threshold_order_to_point(blocks: Sequence[SignedBlock]) -> list[Fraction]:
    n = sum(len(b) for b in blocks)
    x = [Fraction(0)] * n
    for idx, block in enumerate(blocks, start=1):
        for a in block.elements:
            x[a - 1] = Fraction(block.sign * idx)
    return x
