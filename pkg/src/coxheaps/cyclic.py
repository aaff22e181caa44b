"""Cyclic words, cyclic/toric reducedness, and toric heaps of words.

A cyclic word is the rotation class of a word, held by its shortlex-least
rotation.  Rotating a reduced word conjugates the element by its initial
letter, so the closure of a word under rotations and braid moves models
conjugation at fixed length:

* cyclically reduced: every rotation is reduced;
* torically reduced: every word reachable by rotations and/or braids is
  reduced (strictly stronger);
* C_tor([w]): closure of [w] under rotations + short braid moves;
* R_tor([w]): closure of [w] under rotations + all braid moves.

The toric heap of a word is the toric poset of its dependency graph with
the position-increasing orientation, labeled by the letters; its total
toric extensions, read through the labels, give the set L_tor which the
suite checks equals C_tor([w]) by an independent route.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from . import toric
from .coxgraph import CoxeterGraph, Word
from .errors import (
    GraphMismatch,
    NotAcyclic,
    NotReduced,
    NotToricallyReduced,
    OrbitCapExceeded,
    TooLarge,
)
from .heaps import word_orientation
from .words import (
    DEFAULT_ORBIT_CAP,
    NormalForm,
    braid_moves,
    is_reduced,
    normal_form,
    reduced_words,
)


@dataclass(frozen=True, order=True)
class CyclicWord:
    """Rotation class of a word, keyed by its shortlex-least rotation."""

    canonical: Word

    def __len__(self) -> int:
        return len(self.canonical)


def cyclic_word(w: Iterable[int]) -> CyclicWord:
    word = tuple(w)
    if not word:
        return CyclicWord(())
    return CyclicWord(min(word[k:] + word[:k] for k in range(len(word))))


def rotations(cw: CyclicWord | Word) -> tuple[Word, ...]:
    """Distinct rotations, in rotation order starting from the canonical one."""
    word = cw.canonical if isinstance(cw, CyclicWord) else cyclic_word(cw).canonical
    out: list[Word] = []
    seen = set()
    for k in range(len(word)):
        rot = word[k:] + word[:k]
        if rot not in seen:
            seen.add(rot)
            out.append(rot)
    return tuple(out) if word else ((),)


def has_cyclic_repeat(word: Word) -> bool:
    """Two equal letters adjacent in the cyclic order (wrap-around included)."""
    m = len(word)
    return m > 1 and any(word[i] == word[(i + 1) % m] for i in range(m))


def is_cyclically_reduced_word(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    """Every rotation of the word is reduced."""
    word = g.check_word(w)
    return all(is_reduced(g, r, cap) for r in rotations(cyclic_word(word)))


def is_cyclically_reduced_element(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    """Every reduced word for the element of w is cyclically reduced."""
    if not is_reduced(g, w, cap):
        raise NotReduced(f"{g.format(w)} is not reduced")
    return all(is_cyclically_reduced_word(g, u, cap) for u in reduced_words(g, w, cap))


def toric_reduction_witness(
    g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP
) -> tuple[Word, ...] | None:
    """Search the rotation + braid closure of w for a non-reduced word.

    Returns a move-by-move chain from w to a word with two equal adjacent
    letters, or None when the closure is exhausted without one (w is then
    torically reduced).  Each consecutive pair differs by one rotation or
    one braid move.
    """
    start = g.check_word(w)
    parent: dict[Word, Word | None] = {start: None}

    def chain(word: Word) -> tuple[Word, ...]:
        out = [word]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])
        return tuple(reversed(out))

    if any(start[i] == start[i + 1] for i in range(len(start) - 1)):
        return (start,)
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        moves = [cur[k:] + cur[:k] for k in range(1, len(cur))]
        moves.extend(braid_moves(g, cur))
        for nxt in moves:
            if nxt in parent:
                continue
            if len(parent) >= cap:
                raise OrbitCapExceeded(f"rotation+braid closure of {g.format(w)} exceeds cap {cap}")
            parent[nxt] = cur
            if any(nxt[i] == nxt[i + 1] for i in range(len(nxt) - 1)):
                return chain(nxt)
            queue.append(nxt)
    return None


def is_torically_reduced(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    """Reduced under every sequence of rotations and/or braid moves.

    Word and element level coincide: any reduced word for a torically
    reduced element certifies all of them (asserted empirically in tests).
    """
    return toric_reduction_witness(g, w, cap) is None


def _cyclic_closure(
    g: CoxeterGraph, w: Word, cap: int, short_only: bool
) -> frozenset[CyclicWord]:
    """Closure of [w] under braid moves applied to any rotation.

    Raises NotToricallyReduced as soon as a visited cyclic word carries two
    equal cyclically-adjacent letters; by Tits' criterion the closure of a
    non-torically-reduced word always produces one.
    """
    start = cyclic_word(g.check_word(w))
    if has_cyclic_repeat(start.canonical):
        raise NotToricallyReduced(f"{g.format(w)} is not torically reduced")
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for rot in rotations(cur):
            for moved in braid_moves(g, rot, short_only=short_only):
                nxt = cyclic_word(moved)
                if nxt in seen:
                    continue
                if has_cyclic_repeat(nxt.canonical):
                    raise NotToricallyReduced(f"{g.format(w)} is not torically reduced")
                if len(seen) >= cap:
                    raise OrbitCapExceeded(f"cyclic closure of {g.format(w)} exceeds cap {cap}")
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def rtor_cyclic_class(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> frozenset[CyclicWord]:
    """R_tor([w]): cyclic words reachable by rotations and all braid moves.

    The full closure under all braids detects any failure of toric
    reducedness, so the precondition is checked by the search itself.
    """
    return _cyclic_closure(g, w, cap, short_only=False)


def ctor_class(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> frozenset[CyclicWord]:
    """C_tor([w]): cyclic words reachable by rotations and short braid moves."""
    if not is_torically_reduced(g, w, cap):
        raise NotToricallyReduced(f"{g.format(w)} is not torically reduced")
    return _cyclic_closure(g, w, cap, short_only=True)


def cyclic_decomposition(
    g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP
) -> tuple[frozenset[CyclicWord], ...]:
    """Partition of R_tor([w]) into cyclic commutativity classes."""
    whole = rtor_cyclic_class(g, w, cap)
    remaining = set(whole)
    classes = []
    while remaining:
        seed = min(remaining)
        cls = _cyclic_closure(g, seed.canonical, cap, short_only=True)
        if not cls <= remaining:
            raise AssertionError("cyclic commutativity class escaped R_tor([w])")
        classes.append(cls)
        remaining -= cls
    return tuple(sorted(classes, key=min))


def rtor_words(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> frozenset[Word]:
    """R_tor(w): the word-level class, i.e. every rotation of every cyclic
    word in R_tor([w])."""
    return frozenset(
        rot for cw in rtor_cyclic_class(g, w, cap) for rot in rotations(cw)
    )


def torically_equivalent_elements(
    g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP
) -> frozenset[NormalForm]:
    """[w]: the distinct group elements named by the words of R_tor(w)."""
    return frozenset(normal_form(g, u, cap) for u in rtor_words(g, w, cap))


@dataclass(frozen=True)
class ToricHeap:
    """Labeled toric poset of a word: positions carry the word's letters."""

    graph: CoxeterGraph
    word: Word
    poset: toric.ToricPoset

    @property
    def size(self) -> int:
        return len(self.word)

    def label(self, i: int) -> int:
        return self.word[i]


def toric_heap_of_word(g: CoxeterGraph, w: Word, cap: int = toric.DEFAULT_CLASS_CAP) -> ToricHeap:
    word = g.check_word(w)
    return ToricHeap(g, word, toric.ToricPoset(word_orientation(g, word), cap=cap))


def toric_heaps_isomorphic(t1: ToricHeap, t2: ToricHeap) -> bool:
    """Label-preserving toric poset isomorphism.

    Candidate bijections are the rotation-induced occurrence alignments:
    vertex preimages are toric chains whose cyclic order is fixed, so only
    the rotation offset is free.  For each rotation of t2's word with the
    same letters, align k-th occurrences and test whether the transported
    orientation lands in t1's toric class.  Cross-validated against a
    brute-force bijection search in the test suite.
    """
    if t1.graph != t2.graph:
        raise GraphMismatch("toric heaps live over different Coxeter graphs")
    if t1.size != t2.size:
        return False
    m = t1.size
    if m == 0:
        return True
    g1 = t1.poset.graph
    for k in range(m):
        rot = t2.word[k:] + t2.word[:k]
        sigma = _occurrence_alignment(t1.word, rot)
        if sigma is None:
            continue
        carried = _transport(t1.poset.representative, g1, sigma)
        if carried is None:
            continue
        # the rotated word's toric heap is isomorphic to t2's via the shift map
        if carried in toric.toric_class(word_orientation(t1.graph, rot), t2.poset.cap):
            return True
    return False


def _occurrence_alignment(w1: Word, w2: Word) -> tuple[int, ...] | None:
    """Map the k-th occurrence of each letter in w1 to the k-th in w2."""
    if len(w1) != len(w2):
        return None
    slots: dict[int, list[int]] = {}
    for j, s in enumerate(w2):
        slots.setdefault(s, []).append(j)
    taken: dict[int, int] = {}
    out = []
    for s in w1:
        k = taken.get(s, 0)
        if s not in slots or k >= len(slots[s]):
            return None
        out.append(slots[s][k])
        taken[s] = k + 1
    return tuple(out)


def _transport(
    o: toric.AcyclicOrientation, graph: toric.Graph, sigma: tuple[int, ...]
) -> toric.AcyclicOrientation | None:
    """Push an orientation through a vertex bijection; None if the image
    digraph has a cycle (the map is then not a poset morphism)."""
    pairs = [(sigma[a], sigma[b]) for a, b in o.directed_edges()]
    target_edges = tuple(sorted((min(a, b), max(a, b)) for a, b in pairs))
    target = toric.Graph(graph.n, target_edges)
    try:
        return toric.orientation_from_pairs(target, pairs)
    except NotAcyclic:
        return None


def ltor(t: ToricHeap, max_vertices: int = toric.MAX_TOTAL_ORDER_VERTICES) -> frozenset[CyclicWord]:
    """L_tor(T(w)): total toric extensions of the toric heap, as cyclic words.

    Each extension is a cyclic ordering of positions; reading it through the
    labels and merging duplicates yields cyclic words.
    """
    if t.size > max_vertices:
        raise TooLarge(f"word length {t.size} exceeds the total-order bound {max_vertices}")
    out = set()
    for cyc in toric.total_toric_extensions(t.poset, max_vertices):
        out.add(cyclic_word(tuple(t.word[i] for i in cyc)))
    return frozenset(out)
