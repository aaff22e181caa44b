"""Heaps of words: labeled posets over a Coxeter graph.

The heap of a word w = s_{x_1} ... s_{x_m} lives on the positions 1..m
(0-based here): positions i < j are joined whenever their letters do not
commute (equal letters included, m = 1), every edge is oriented towards the
larger position, and the heap order is reachability of that orientation.
Each generator's occurrences form a chain (vertex chain) and each bonded
pair's occurrences form a chain (edge chain).

The order is stored as a reachability bit-relation over positions; Python
integers act as unbounded bitsets, so the same code covers any size.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .coxgraph import CoxeterGraph, Word
from .errors import ExtensionCapExceeded, GraphMismatch
from . import toric

DEFAULT_EXTENSION_CAP = 1_000_000


@dataclass(frozen=True)
class Heap:
    """Heap of a word: positions 0..m-1, labels word[i], reachability order."""

    graph: CoxeterGraph
    word: Word
    above: tuple[int, ...]  # above[i] = bitmask of positions j with i < j in the order

    @property
    def size(self) -> int:
        return len(self.word)

    def label(self, i: int) -> int:
        return self.word[i]

    def less(self, i: int, j: int) -> bool:
        return bool(self.above[i] >> j & 1)

    @cached_property
    def below(self) -> tuple[int, ...]:
        out = [0] * self.size
        for i, mask in enumerate(self.above):
            for j in _bits(mask):
                out[j] |= 1 << i
        return tuple(out)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def word_graph(g: CoxeterGraph, w: Word) -> toric.Graph:
    """Dependency graph of a word: {i, j} joined iff m(w_i, w_j) != 2."""
    word = g.check_word(w)
    m = len(word)
    edges = [
        (i, j)
        for i in range(m)
        for j in range(i + 1, m)
        if word[i] == word[j] or not g.commutes(word[i], word[j])
    ]
    return toric.Graph(m, tuple(edges))


def word_orientation(g: CoxeterGraph, w: Word) -> toric.AcyclicOrientation:
    """The position-increasing orientation of the word graph."""
    graph = word_graph(g, w)
    return toric.AcyclicOrientation(graph, (1 << len(graph.edges)) - 1)


def heap_of_word(g: CoxeterGraph, w: Word) -> Heap:
    """Heap of any word (reducedness is not required by the construction)."""
    word = g.check_word(w)
    m = len(word)
    above = [0] * m
    for i in range(m - 1, -1, -1):
        acc = 0
        for j in range(i + 1, m):
            if word[i] == word[j] or not g.commutes(word[i], word[j]):
                acc |= (1 << j) | above[j]
        above[i] = acc
    return Heap(g, word, tuple(above))


def closure_edges(h: Heap) -> tuple[tuple[int, int], ...]:
    """Transitive closure of the order, as directed position pairs."""
    return tuple((i, j) for i in range(h.size) for j in _bits(h.above[i]))


def hasse_edges(h: Heap) -> tuple[tuple[int, int], ...]:
    """Transitive reduction: covers (i, j) with nothing strictly between."""
    out = []
    below = h.below
    for i in range(h.size):
        for j in _bits(h.above[i]):
            if h.above[i] & below[j] == 0:
                out.append((i, j))
    return tuple(out)


def linear_extensions(h: Heap, cap: int = DEFAULT_EXTENSION_CAP) -> frozenset[Word]:
    """All labeled linear extensions of the heap, as words.

    Backtracking over minimal elements, smaller positions first; the result
    is the set L(H) of words whose heap is an extension of h.
    """
    m = h.size
    below = h.below
    out: set[Word] = set()
    prefix: list[int] = []
    emitted = 0

    def rec(used: int):
        nonlocal emitted
        if len(prefix) == m:
            emitted += 1
            if emitted > cap:
                raise ExtensionCapExceeded(f"more than {cap} linear extensions")
            out.add(tuple(h.word[i] for i in prefix))
            return
        for i in range(m):
            if used >> i & 1:
                continue
            if below[i] & ~used:
                continue
            prefix.append(i)
            rec(used | (1 << i))
            prefix.pop()

    rec(0)
    return frozenset(out)


def is_chain(h: Heap, subset: Iterable[int]) -> bool:
    """True iff the positions are totally ordered in the heap."""
    idx = sorted(set(subset))
    for i in idx:
        if not 0 <= i < h.size:
            raise IndexError(f"position {i} out of range")
    return all(h.less(a, b) for a, b in zip(idx, idx[1:]))


def occurrence_map(h1: Heap, h2: Heap) -> tuple[int, ...] | None:
    """The label-preserving map sending the k-th occurrence of each
    generator in h1 to its k-th occurrence in h2, or None if the words
    have different letter counts.

    Vertex chains are totally ordered, and occurrences appear in position
    order, so this is the only candidate isomorphism.
    """
    if len(h1.word) != len(h2.word):
        return None
    slots: dict[int, list[int]] = {}
    for j, s in enumerate(h2.word):
        slots.setdefault(s, []).append(j)
    taken: dict[int, int] = {}
    sigma = []
    for i, s in enumerate(h1.word):
        k = taken.get(s, 0)
        if s not in slots or k >= len(slots[s]):
            return None
        sigma.append(slots[s][k])
        taken[s] = k + 1
    if any(taken.get(s, 0) != len(pos) for s, pos in slots.items()):
        return None
    return tuple(sigma)


def heaps_isomorphic(h1: Heap, h2: Heap) -> bool:
    """Label-preserving order isomorphism test via the occurrence map."""
    if h1.graph != h2.graph:
        raise GraphMismatch("heaps live over different Coxeter graphs")
    sigma = occurrence_map(h1, h2)
    if sigma is None:
        return False
    for i in range(h1.size):
        for j in range(h1.size):
            if i == j:
                continue
            if h1.less(i, j) != h2.less(sigma[i], sigma[j]):
                return False
    return True
