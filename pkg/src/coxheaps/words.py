"""Word problem by braid-move search.

A braid move replaces a factor <s,t>_{m(s,t)} by <t,s>_{m(s,t)}; moves with
m = 2 are "short".  The closure of a word under all single braid moves is
its braid orbit, and a word is reduced iff no orbit member contains two
equal adjacent letters (Tits' solution to the word problem).  This is exact
and dependency-free, and adequate at desk scale; orbit searches carry a cap
and raise ``OrbitCapExceeded`` as an inconclusive outcome rather than ever
guessing.

All functions are pure; words are tuples of generator indices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterator

from .coxgraph import INF, CoxeterGraph, Word
from .errors import NotReduced, OrbitCapExceeded

DEFAULT_ORBIT_CAP = 2_000_000


@dataclass(frozen=True)
class BraidOrbit:
    """Closure of a seed word under single braid moves."""

    words: frozenset[Word]
    origin: Word
    truncated: bool

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True, order=True)
class NormalForm:
    """Canonical representative: the shortlex-least reduced word."""

    length: int
    word: Word

    def __iter__(self):
        return iter(self.word)


def has_adjacent_repeat(w: Word) -> bool:
    return any(w[i] == w[i + 1] for i in range(len(w) - 1))


def braid_moves(g: CoxeterGraph, w: Word, short_only: bool = False) -> Iterator[Word]:
    """All words obtainable from w by one braid move.

    Infinite bonds admit no finite braid relation, so they contribute no
    moves; they only forbid the m = 2 swap.
    """
    n = len(w)
    for i in range(n - 1):
        s, t = w[i], w[i + 1]
        if s == t:
            continue
        m = g.m(s, t)
        if m == 2:
            yield w[:i] + (t, s) + w[i + 2 :]
        elif not short_only and m != INF and i + m <= n:
            ok = True
            for k in range(2, int(m)):
                if w[i + k] != (s if k % 2 == 0 else t):
                    ok = False
                    break
            if ok:
                repl = tuple(t if k % 2 == 0 else s for k in range(int(m)))
                yield w[:i] + repl + w[i + int(m) :]


def _orbit(
    g: CoxeterGraph,
    w: Word,
    cap: int,
    short_only: bool = False,
    witness: Callable[[Word], bool] | None = None,
) -> tuple[set[Word], bool, Word | None]:
    """BFS closure under braid moves.

    Returns (visited, truncated, witness_word).  When a witness predicate is
    given, the search stops at the first word satisfying it.
    """
    start = g.check_word(w)
    if witness is not None and witness(start):
        return {start}, False, start
    seen = {start}
    queue = deque([start])
    truncated = False
    while queue:
        cur = queue.popleft()
        for nxt in braid_moves(g, cur, short_only):
            if nxt in seen:
                continue
            if witness is not None and witness(nxt):
                seen.add(nxt)
                return seen, truncated, nxt
            if len(seen) >= cap:
                truncated = True
                continue
            seen.add(nxt)
            queue.append(nxt)
    return seen, truncated, None


def braid_orbit(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> BraidOrbit:
    """BFS closure of {w} under all single braid moves.

    Truncation is a flagged result, not an error.
    """
    words, truncated, _ = _orbit(g, w, cap)
    return BraidOrbit(frozenset(words), g.check_word(w), truncated)


def commutativity_class(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> frozenset[Word]:
    """Closure of {w} under short braid moves only (the trace of w)."""
    words, truncated, _ = _orbit(g, w, cap, short_only=True)
    if truncated:
        raise OrbitCapExceeded(f"commutativity class of {g.format(w)} exceeds cap {cap}")
    return frozenset(words)


def is_reduced(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    """True iff no braid-orbit member contains two equal adjacent letters."""
    _, truncated, bad = _orbit(g, w, cap, witness=has_adjacent_repeat)
    if bad is not None:
        return False
    if truncated:
        raise OrbitCapExceeded(
            f"braid orbit of {g.format(w)} exceeds cap {cap} with no witness; reducedness undecided"
        )
    return True


def normal_form(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> NormalForm:
    """Shortlex-least reduced word for the element of w.

    Deletion is deterministic: take the shortlex-least orbit member with an
    adjacent equal pair and delete its leftmost such pair; repeat until the
    orbit is repeat-free, then return the shortlex minimum.
    """
    word = g.check_word(w)
    while True:
        orbit, truncated, _ = _orbit(g, word, cap)
        if truncated:
            raise OrbitCapExceeded(f"braid orbit exceeds cap {cap} while reducing {g.format(w)}")
        bad = [u for u in orbit if has_adjacent_repeat(u)]
        if not bad:
            least = min(orbit)
            return NormalForm(len(least), least)
        u = min(bad)
        i = next(k for k in range(len(u) - 1) if u[k] == u[k + 1])
        word = u[:i] + u[i + 2 :]


def reduced_words(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> frozenset[Word]:
    """R(w): all reduced words for the element of the reduced word w."""
    if not is_reduced(g, w, cap):
        raise NotReduced(f"{g.format(w)} is not reduced")
    words, truncated, _ = _orbit(g, w, cap)
    if truncated:
        raise OrbitCapExceeded(f"reduced-word set of {g.format(w)} exceeds cap {cap}")
    return frozenset(words)


def commutativity_classes(
    g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP
) -> tuple[frozenset[Word], ...]:
    """Partition of R(w) under short braid moves, ordered by least member."""
    rw = reduced_words(g, w, cap)
    remaining = set(rw)
    classes = []
    while remaining:
        seed = min(remaining)
        cls = commutativity_class(g, seed, cap)
        if not cls <= remaining:
            raise AssertionError("commutativity class escaped R(w)")
        classes.append(cls)
        remaining -= cls
    return tuple(sorted(classes, key=min))


def is_fc(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    """True iff R(w) is a single commutativity class (w must be reduced)."""
    if not is_reduced(g, w, cap):
        raise NotReduced(f"{g.format(w)} is not reduced")
    full, truncated, _ = _orbit(g, w, cap)
    if truncated:
        raise OrbitCapExceeded(f"braid orbit of {g.format(w)} exceeds cap {cap}")
    short = commutativity_class(g, w, cap)
    return len(short) == len(full)


def inverse(w: Word) -> Word:
    """Generators are involutions, so the inverse is the reversed word."""
    return tuple(reversed(w))


def multiply(g: CoxeterGraph, u: Word, v: Word, cap: int = DEFAULT_ORBIT_CAP) -> NormalForm:
    return normal_form(g, g.check_word(u) + g.check_word(v), cap)


def conjugate(g: CoxeterGraph, v: Word, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> NormalForm:
    """Normal form of v^-1 w v."""
    return normal_form(g, inverse(g.check_word(v)) + g.check_word(w) + g.check_word(v), cap)


def power_length(g: CoxeterGraph, w: Word, k: int, cap: int = DEFAULT_ORBIT_CAP) -> int:
    """Length of w^k, reducing incrementally so intermediate words stay short."""
    if k < 0:
        raise ValueError("k must be >= 0")
    word = g.check_word(w)
    cur: Word = ()
    for _ in range(k):
        cur = normal_form(g, cur + word, cap).word
    return len(cur)
