"""Labeled threshold graphs, colored threshold graphs, and their codecs.

A signed permutation i_1 ... i_n builds a graph by adding |i_k| in order,
adjacent to everything so far when i_k > 0 and isolated when i_k < 0.  The
colored variant carries a 1/2 marker: vertices added after it are colored,
blue when added adjacent to all and red when added isolated.  A marker at the
very end means no vertex is colored.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Sequence

from .arrangement import Kind, boxed_threshold_arrangement, threshold_arrangement
from .errors import NotThreshold
from .oracle import SignVector
from .orders import HalfOrder, SignedBlock, enumerate_half_orders, enumerate_threshold_orders

RED, BLUE = "red", "blue"


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge {(u, v)} has a label outside [{self.n}]")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def complete(cls, n: int) -> LabeledGraph:
        return cls(n, frozenset(combinations(range(1, n + 1), 2)))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbours(self) -> dict[int, set[int]]:
        adj = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, obj: dict) -> LabeledGraph:
        return cls(int(obj["n"]), frozenset(tuple(e) for e in obj.get("edges", [])))


@dataclass(frozen=True)
class ColoredThresholdGraph:
    """A labeled threshold graph plus a color (None, "red" or "blue") per label.

    ``colors[v - 1]`` is the color of vertex v.  Construction does not
    validate; ``from_json`` and ``is_colored_threshold`` do.
    """

    graph: LabeledGraph
    colors: tuple[str | None, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if len(self.colors) != self.graph.n:
            raise ValueError("one color slot per vertex")
        for c in self.colors:
            if c not in (None, RED, BLUE):
                raise ValueError(f"unknown color {c!r}")

    @property
    def n(self) -> int:
        return self.graph.n

    def color(self, v: int) -> str | None:
        return self.colors[v - 1]

    def to_json(self) -> dict:
        out = self.graph.to_json()
        out["colors"] = {str(v): c for v, c in enumerate(self.colors, start=1) if c is not None}
        return out

    @classmethod
    def from_json(cls, obj: dict) -> ColoredThresholdGraph:
        g = LabeledGraph.from_json(obj)
        raw = obj.get("colors", {})
        colors = tuple(raw.get(str(v)) for v in range(1, g.n + 1))
        out = cls(g, colors)
        if not is_colored_threshold(out):
            raise NotThreshold("graph/coloring pair is not a colored threshold graph")
        return out


@dataclass(frozen=True)
class SignedPermutation:
    entries: tuple[tuple[int, int], ...]
    half_marker: int | None = None

    def __post_init__(self):
        entries = tuple((int(a), int(s)) for a, s in self.entries)
        object.__setattr__(self, "entries", entries)
        labels = sorted(a for a, _ in entries)
        if labels != list(range(1, len(entries) + 1)):
            raise ValueError(f"labels are not a permutation of [{len(entries)}]")
        if any(s not in (1, -1) for _, s in entries):
            raise ValueError("signs must be +1 or -1")
        if self.half_marker is not None and not 0 <= self.half_marker <= len(entries):
            raise ValueError(f"marker position {self.half_marker} out of range")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_blocks(cls, blocks: Sequence[SignedBlock]) -> SignedPermutation:
        return cls(tuple((a, b.sign) for b in blocks for a in b.elements))

    @classmethod
    def from_half_order(cls, h: HalfOrder) -> SignedPermutation:
        marker = sum(len(b) for b in h.blocks[: h.half_position])
        return cls(cls.from_blocks(h.blocks).entries, marker)

    @classmethod
    def parse(cls, text: str) -> SignedPermutation:
        """Parse e.g. ``"+2 1/2 +1 +3 -4 -5"``."""
        entries, marker = [], None
        for tok in text.split():
            if tok in ("1/2", "½"):
                marker = len(entries)
            else:
                entries.append((abs(int(tok)), -1 if tok.startswith("-") else 1))
        return cls(tuple(entries), marker)

    def __str__(self) -> str:
        toks = [("+" if s > 0 else "-") + str(a) for a, s in self.entries]
        if self.half_marker is not None:
            toks.insert(self.half_marker, "1/2")
        return " ".join(toks)


def decode(sp: SignedPermutation) -> LabeledGraph | ColoredThresholdGraph:
    edges = []
    seen: list[int] = []
    colors: dict[int, str] = {}
    for k, (a, s) in enumerate(sp.entries):
        if s > 0:
            edges.extend((b, a) for b in seen)
        if sp.half_marker is not None and k >= sp.half_marker:
            colors[a] = BLUE if s > 0 else RED
        seen.append(a)
    g = LabeledGraph(sp.n, frozenset(edges))
    if sp.half_marker is None:
        return g
    return ColoredThresholdGraph(g, tuple(colors.get(v) for v in range(1, sp.n + 1)))


def canonical_blocks(sp: SignedPermutation) -> tuple[SignedBlock, ...]:
    """Alternating blocks of an unmarked signed permutation, with a leading
    singleton absorbed into the next block (its sign is irrelevant)."""
    runs: list[list[int]] = []
    signs: list[int] = []
    for a, s in sp.entries:
        if signs and signs[-1] == s:
            runs[-1].append(a)
        else:
            runs.append([a])
            signs.append(s)
    if len(runs) > 1 and len(runs[0]) == 1:
        runs[1] = runs[0] + runs[1]
        del runs[0], signs[0]
    if len(runs) == 1 and len(runs[0]) == 1:
        signs[0] = -1
    return tuple(SignedBlock(tuple(r), s) for r, s in zip(runs, signs))


def peel(g: LabeledGraph) -> tuple[SignedBlock, ...]:
    """Canonical alternating signed ordered partition of a threshold graph.

    Strip all isolated vertices (a negative block) or all dominating vertices
    (a positive block) until what is left is edgeless or complete; the blocks
    are then read back in reverse.
    """
    adj = g.neighbours()
    remaining = set(range(1, g.n + 1))
    peeled: list[SignedBlock] = []
    while remaining:
        deg = {v: len(adj[v] & remaining) for v in remaining}
        size = len(remaining)
        if all(d == 0 for d in deg.values()):
            peeled.append(SignedBlock(tuple(remaining), -1))
            break
        if all(d == size - 1 for d in deg.values()):
            peeled.append(SignedBlock(tuple(remaining), 1))
            break
        isolated = {v for v, d in deg.items() if d == 0}
        dominating = {v for v, d in deg.items() if d == size - 1}
        if isolated:
            peeled.append(SignedBlock(tuple(isolated), -1))
            remaining -= isolated
        elif dominating:
            peeled.append(SignedBlock(tuple(dominating), 1))
            remaining -= dominating
        else:
            raise NotThreshold(f"peeling stalls on {sorted(remaining)}")
    return tuple(reversed(peeled))


def is_threshold(g: LabeledGraph) -> bool:
    try:
        peel(g)
    except NotThreshold:
        return False
    return True


def is_colored_threshold(g: ColoredThresholdGraph) -> bool:
    """Check that some construction sequence produces this coloring.

    Colored vertices are removed last-added-first: a blue one must be
    adjacent to everything left, a red one to nothing left.  Removability only
    grows as vertices go, so a greedy sweep decides it.  The uncolored rest
    must then be an ordinary threshold graph.
    """
    adj = g.graph.neighbours()
    remaining = set(range(1, g.n + 1))
    pending = {v for v in remaining if g.color(v) is not None}
    while pending:
        size = len(remaining)
        for v in sorted(pending):
            d = len(adj[v] & remaining)
            if (g.color(v) == BLUE and d == size - 1) or (g.color(v) == RED and d == 0):
                remaining.discard(v)
                pending.discard(v)
                break
        else:
            return False
    rest = sorted(remaining)
    relabel = {v: k for k, v in enumerate(rest, start=1)}
    sub = LabeledGraph(
        len(rest),
        frozenset((relabel[u], relabel[v]) for u, v in g.graph.edges if u in relabel and v in relabel),
    )
    return is_threshold(sub)


def enumerate_colored(n: int) -> Iterator[ColoredThresholdGraph]:
    """Each labeled colored threshold graph on [n] once, via the half-orders."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        yield decode(SignedPermutation(((1, 1),), 1))
        yield decode(SignedPermutation(((1, -1),), 0))
        yield decode(SignedPermutation(((1, 1),), 0))
        return
    for h in enumerate_half_orders(n):
        yield decode(SignedPermutation.from_half_order(h))


def enumerate_threshold_graphs(n: int) -> Iterator[LabeledGraph]:
    for blocks in enumerate_threshold_orders(n):
        yield decode(SignedPermutation.from_blocks(blocks))


def all_signed_permutations(n: int, marked: bool = False) -> Iterator[SignedPermutation]:
    markers: Iterable = range(n + 1) if marked else (None,)
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            entries = tuple(zip(perm, signs))
            for m in markers:
                yield SignedPermutation(entries, m)


def graph_to_region(g: ColoredThresholdGraph) -> SignVector:
    """Sign vector over BT_n: edge means x_i + x_j > 0, blue means x_i > 1/2,
    red means x_i < -1/2, uncolored means strictly between the walls."""
    out = []
    for h in boxed_threshold_arrangement(g.n).sorted():
        if h.kind is Kind.SUM:
            out.append(1 if g.graph.has_edge(h.i, h.j) else -1)
        elif h.kind is Kind.BOX_LOW:
            out.append(-1 if g.color(h.i) == RED else 1)
        else:
            out.append(1 if g.color(h.i) == BLUE else -1)
    return tuple(out)


def threshold_region_dictionary(g: LabeledGraph) -> SignVector:
    if not is_threshold(g):
        raise NotThreshold("graph is not a threshold graph")
    return tuple(1 if g.has_edge(h.i, h.j) else -1 for h in threshold_arrangement(g.n).sorted())
