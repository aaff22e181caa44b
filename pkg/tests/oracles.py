"""Independent oracles for the test suite.

The main library decides everything by braid-move search on words.  The
oracles here go through the standard geometric representation instead:
each generator acts on the root-coordinate space by an exact matrix over a
quadratic integer ring (Z, Z[sqrt2], Z[phi], ...), which is faithful, so
matrix equality decides element equality and a Cayley-ball BFS gives true
lengths.  Nothing in this module calls the braid machinery.
"""

from __future__ import annotations

from collections import deque
from itertools import permutations

from coxheaps.coxgraph import INF, CoxeterGraph, Word

# ring element: (a, b) meaning a + b*xi with xi^2 = C0 + C1*xi


class QuadRing:
    """Z[xi] with xi^2 = c0 + c1*xi; c1 = 0, c0 = 0 degenerates to Z."""

    def __init__(self, c0: int, c1: int):
        self.c0 = c0
        self.c1 = c1

    def mul(self, x, y):
        a, b = x
        c, d = y
        bd = b * d
        return (a * c + bd * self.c0, a * d + b * c + bd * self.c1)

    def add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])


_TWO_COS = {2: "zero", 3: "one", 4: "sqrt2", 5: "phi", 6: "sqrt3", INF: "two"}
_RINGS = {"sqrt2": (2, 0), "phi": (1, 1), "sqrt3": (3, 0)}


def _ring_for(graph: CoxeterGraph) -> QuadRing:
    irrational = set()
    for _, _, m in graph.bonds():
        kind = _TWO_COS.get(m)
        if kind is None:
            raise ValueError(f"oracle does not support bond strength {m}")
        if kind in _RINGS:
            irrational.add(kind)
    if len(irrational) > 1:
        raise ValueError(f"oracle cannot mix {sorted(irrational)} in one ring")
    if irrational:
        return QuadRing(*_RINGS[irrational.pop()])
    return QuadRing(0, 0)


def _two_cos(ring: QuadRing, m) -> tuple[int, int]:
    kind = _TWO_COS[m]
    if kind == "zero":
        return (0, 0)
    if kind == "one":
        return (1, 0)
    if kind == "two":
        return (2, 0)
    return (0, 1)


class GroupOracle:
    """Exact reflection representation plus a Cayley ball of radius max_length."""

    def __init__(self, graph: CoxeterGraph, max_length: int):
        self.graph = graph
        self.max_length = max_length
        self.ring = _ring_for(graph)
        n = graph.rank
        self.gens = []
        for i in range(n):
            rows = []
            for k in range(n):
                row = []
                for j in range(n):
                    if k != i:
                        row.append((1, 0) if k == j else (0, 0))
                    elif j == i:
                        row.append((-1, 0))
                    else:
                        row.append(_two_cos(self.ring, graph.m(i, j)))
                rows.append(tuple(row))
            self.gens.append(tuple(rows))
        self.identity = tuple(
            tuple((1, 0) if i == j else (0, 0) for j in range(n)) for i in range(n)
        )
        self.dist: dict[tuple, int] = {self.identity: 0}
        self.complete = True
        frontier = [self.identity]
        for radius in range(1, max_length + 1):
            nxt = []
            for mat in frontier:
                for gen in self.gens:
                    prod = self._mul(mat, gen)
                    if prod not in self.dist:
                        self.dist[prod] = radius
                        nxt.append(prod)
            frontier = nxt
            if not frontier:
                break
        else:
            self.complete = not frontier

    def _mul(self, x, y):
        ring = self.ring
        n = len(x)
        out = []
        for i in range(n):
            row = []
            xi = x[i]
            for j in range(n):
                acc = (0, 0)
                for k in range(n):
                    acc = ring.add(acc, ring.mul(xi[k], y[k][j]))
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    @property
    def order(self) -> int:
        """Group order; only meaningful when the ball closed (finite group)."""
        if not self.complete:
            raise ValueError("ball did not close; group order unknown")
        return len(self.dist)

    def element(self, w: Word):
        mat = self.identity
        for s in w:
            mat = self._mul(mat, self.gens[s])
        return mat

    def length(self, w: Word) -> int:
        """True length; valid for any word of length <= max_length."""
        if len(w) > self.max_length and not self.complete:
            raise ValueError("word longer than the enumerated ball")
        return self.dist[self.element(w)]

    def is_reduced(self, w: Word) -> bool:
        return self.length(w) == len(w)

    def same_element(self, u: Word, v: Word) -> bool:
        return self.element(u) == self.element(v)

    def all_reduced_words(self, max_len: int):
        """Every reduced word of length <= max_len, by DFS with pruning
        (every prefix of a reduced word is reduced)."""
        if max_len > self.max_length and not self.complete:
            raise ValueError("ball radius too small for that length")
        out = []
        n = self.graph.rank

        def rec(word: tuple, mat, depth: int):
            out.append(word)
            if depth == max_len:
                return
            for s in range(n):
                nxt = self._mul(mat, self.gens[s])
                if self.dist.get(nxt, -1) == depth + 1:
                    rec(word + (s,), nxt, depth + 1)

        rec((), self.identity, 0)
        return out

    def reduced_word(self, mat) -> Word:
        """One reduced word for an enumerated element, by greedy descent."""
        out = []
        cur = mat
        while self.dist[cur] > 0:
            for s, gen in enumerate(self.gens):
                nxt = self._mul(cur, gen)
                if self.dist.get(nxt, 10 ** 9) == self.dist[cur] - 1:
                    out.append(s)
                    cur = nxt
                    break
            else:  # pragma: no cover
                raise AssertionError("descent failed")
        return tuple(reversed(out))

    def conjugacy_class(self, w: Word):
        """Closure of the element under conjugation by generators (finite groups)."""
        if not self.complete:
            raise ValueError("conjugacy enumeration needs a finite group")
        start = self.element(w)
        seen = {start}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for gen in self.gens:
                conj = self._mul(self._mul(gen, cur), gen)
                if conj not in seen:
                    seen.add(conj)
                    queue.append(conj)
        return frozenset(seen)


def strongly_cyclically_reduced(oracle: GroupOracle, w: Word) -> bool:
    """Minimal length within the conjugacy class (finite groups only)."""
    cls = oracle.conjugacy_class(w)
    return oracle.length(w) == min(oracle.dist[m] for m in cls)


# -- brute-force structural oracles ------------------------------------


def label_preserving_bijections(w1: Word, w2: Word):
    """All bijections of positions sending each letter's occurrences of w1
    onto the same letter's occurrences of w2."""
    if len(w1) != len(w2) or sorted(w1) != sorted(w2):
        return
    slots: dict[int, list[int]] = {}
    for j, s in enumerate(w2):
        slots.setdefault(s, []).append(j)
    letters = sorted(slots)
    positions = {s: [i for i, x in enumerate(w1) if x == s] for s in letters}

    def rec(idx: int, sigma: dict):
        if idx == len(letters):
            yield tuple(sigma[i] for i in range(len(w1)))
            return
        s = letters[idx]
        for perm in permutations(slots[s]):
            for i, j in zip(positions[s], perm):
                sigma[i] = j
            yield from rec(idx + 1, sigma)

    yield from rec(0, {})


def brute_heaps_isomorphic(h1, h2) -> bool:
    """Heap isomorphism by exhaustive label-preserving bijection search."""
    m = h1.size
    for sigma in label_preserving_bijections(h1.word, h2.word):
        if all(
            h1.less(i, j) == h2.less(sigma[i], sigma[j])
            for i in range(m)
            for j in range(m)
            if i != j
        ):
            return True
    return False


def brute_toric_heaps_isomorphic(t1, t2) -> bool:
    """Toric heap isomorphism over every label-preserving bijection."""
    from coxheaps.cyclic import _transport

    if t1.graph != t2.graph or t1.size != t2.size:
        return False
    members2 = t2.poset.members
    for sigma in label_preserving_bijections(t1.word, t2.word):
        carried = _transport(t1.poset.representative, t1.poset.graph, sigma)
        if carried is None:
            continue
        if carried.graph == t2.poset.graph and carried in members2:
            return True
    return False
