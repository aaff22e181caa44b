"""Acyclic orientations, source-to-sink equivalence, and toric posets.

A toric poset over a graph G is an equivalence class of acyclic
orientations of G under converting sources into sinks (and back); the class
is held here by a representative.  Orientations are stored as a bitmask
over the graph's canonical edge order: bit k set means edge (a, b) with
a < b points a -> b.  That bitstring is also the wire format used in JSON
class reports.

Counts: |Acyc(G)| = T_G(2, 0) and |Acyc(G)/~| = T_G(1, 0), where T_G is the
Tutte polynomial; both are exercised by the test suite.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Sequence

from .errors import ClassCapExceeded, GraphMismatch, NotAcyclic, NotASink, NotASource, TooLarge

DEFAULT_CLASS_CAP = 1_000_000
MAX_ENUM_EDGES = 24  # 2^E filter for exhaustive orientation enumeration
MAX_TUTTE_EDGES = 18
MAX_TOTAL_ORDER_VERTICES = 10


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1 with a canonical edge order."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for a, b in self.edges:
            if not (0 <= a < b < self.n):
                raise ValueError(f"edge {(a, b)} must be an increasing pair of vertices")
            if (a, b) in seen:
                raise ValueError(f"duplicate edge {(a, b)}")
            seen.add((a, b))
        if tuple(sorted(self.edges)) != self.edges:
            raise ValueError("edges must be sorted")

    @cached_property
    def incident(self) -> tuple[int, ...]:
        """incident[v] = bitmask of edge indices touching v."""
        out = [0] * self.n
        for k, (a, b) in enumerate(self.edges):
            out[a] |= 1 << k
            out[b] |= 1 << k
        return tuple(out)

    @cached_property
    def low_pattern(self) -> tuple[int, ...]:
        """low_pattern[v] = bitmask of incident edges where v is the low end."""
        out = [0] * self.n
        for k, (a, b) in enumerate(self.edges):
            out[a] |= 1 << k
        return tuple(out)


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    norm = sorted({(min(a, b), max(a, b)) for a, b in edges})
    return Graph(n, tuple(norm))


@dataclass(frozen=True)
class AcyclicOrientation:
    """An orientation of a graph, checked acyclic on construction."""

    graph: Graph
    forward: int  # bit k set: edges[k] points low -> high

    def __post_init__(self):
        if self.forward >> len(self.graph.edges):
            raise ValueError("direction mask has bits beyond the edge list")
        if _has_cycle(self.graph, self.forward):
            raise NotAcyclic("orientation contains a directed cycle")

    def directed_edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for k, (a, b) in enumerate(self.graph.edges):
            out.append((a, b) if self.forward >> k & 1 else (b, a))
        return tuple(out)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(b for a, b in self.directed_edges() if a == v)

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(a for a, b in self.directed_edges() if b == v)

    def is_source(self, v: int) -> bool:
        g = self.graph
        return g.incident[v] != 0 and (self.forward & g.incident[v]) == g.low_pattern[v] & g.incident[v]

    def is_sink(self, v: int) -> bool:
        g = self.graph
        inc = g.incident[v]
        return inc != 0 and (self.forward & inc) == inc & ~g.low_pattern[v]

    def sources(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.graph.n) if self.is_source(v))

    def sinks(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.graph.n) if self.is_sink(v))

    def bitstring(self) -> str:
        """Edge directions over the canonical edge order, '1' = low -> high."""
        return format(self.forward, f"0{len(self.graph.edges)}b")[::-1] if self.graph.edges else ""


def _has_cycle(graph: Graph, forward: int) -> bool:
    indeg = [0] * graph.n
    adj: list[list[int]] = [[] for _ in range(graph.n)]
    for k, (a, b) in enumerate(graph.edges):
        u, v = (a, b) if forward >> k & 1 else (b, a)
        adj[u].append(v)
        indeg[v] += 1
    queue = deque(v for v in range(graph.n) if indeg[v] == 0)
    seen = 0
    while queue:
        u = queue.popleft()
        seen += 1
        for v in adj[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return seen != graph.n


def orientation_from_pairs(graph: Graph, pairs: Iterable[tuple[int, int]]) -> AcyclicOrientation:
    """Build an orientation from explicit directed pairs (one per edge)."""
    index = {e: k for k, e in enumerate(graph.edges)}
    mask = 0
    covered = set()
    for u, v in pairs:
        key = (u, v) if u < v else (v, u)
        if key not in index:
            raise ValueError(f"{(u, v)} is not an edge of the graph")
        if key in covered:
            raise ValueError(f"edge {key} directed twice")
        covered.add(key)
        if u < v:
            mask |= 1 << index[key]
    if len(covered) != len(graph.edges):
        raise ValueError("every edge needs a direction")
    return AcyclicOrientation(graph, mask)


def orientation_from_linear_order(graph: Graph, order: Sequence[int]) -> AcyclicOrientation:
    """Orient every edge from the earlier to the later vertex of a total order."""
    pos = {v: i for i, v in enumerate(order)}
    if sorted(pos) != list(range(graph.n)):
        raise ValueError("order must list every vertex exactly once")
    mask = 0
    for k, (a, b) in enumerate(graph.edges):
        if pos[a] < pos[b]:
            mask |= 1 << k
    return AcyclicOrientation(graph, mask)


def all_acyclic_orientations(graph: Graph, max_edges: int = MAX_ENUM_EDGES) -> tuple[AcyclicOrientation, ...]:
    """Exhaustive enumeration by filtering all 2^E direction assignments."""
    e = len(graph.edges)
    if e > max_edges:
        raise TooLarge(f"{e} edges exceeds the exhaustive enumeration bound {max_edges}")
    out = []
    for mask in range(1 << e):
        if not _has_cycle(graph, mask):
            out.append(AcyclicOrientation(graph, mask))
    return tuple(out)


def flip_source(o: AcyclicOrientation, v: int) -> AcyclicOrientation:
    """Convert a source vertex into a sink by reversing its edges."""
    if not o.is_source(v):
        raise NotASource(f"vertex {v} is not a source")
    return AcyclicOrientation(o.graph, o.forward ^ o.graph.incident[v])

def flip_sink(o: AcyclicOrientation, v: int) -> AcyclicOrientation:
    """Convert a sink vertex into a source by reversing its edges."""
    if not o.is_sink(v):
        raise NotASink(f"vertex {v} is not a sink")
    return AcyclicOrientation(o.graph, o.forward ^ o.graph.incident[v])


def _class_masks(graph: Graph, start: int, cap: int) -> set[int]:
    """BFS closure under source->sink and sink->source conversions.

    The relation is generated by one-directional moves, but the equivalence
    is its symmetric closure; flipping both ways makes the BFS complete.
    """
    seen = {start}
    queue = deque([start])
    while queue:
        mask = queue.popleft()
        for v in range(graph.n):
            inc = graph.incident[v]
            if inc == 0:
                continue
            cur = mask & inc
            low = graph.low_pattern[v] & inc
            if cur == low or cur == inc & ~low:  # source or sink
                nxt = mask ^ inc
                if nxt not in seen:
                    if len(seen) >= cap:
                        raise ClassCapExceeded(f"toric class exceeds cap {cap}")
                    seen.add(nxt)
                    queue.append(nxt)
    return seen


def toric_class(o: AcyclicOrientation, cap: int = DEFAULT_CLASS_CAP) -> frozenset[AcyclicOrientation]:
    masks = _class_masks(o.graph, o.forward, cap)
    return frozenset(AcyclicOrientation(o.graph, m) for m in masks)


def toric_classes(graph: Graph, cap: int = DEFAULT_CLASS_CAP) -> tuple[frozenset[AcyclicOrientation], ...]:
    """Partition of Acyc(graph) into toric equivalence classes."""
    remaining = {o.forward for o in all_acyclic_orientations(graph)}
    classes = []
    while remaining:
        seed = min(remaining)
        masks = _class_masks(graph, seed, cap)
        if not masks <= remaining:
            raise AssertionError("toric class escaped Acyc(G)")
        classes.append(frozenset(AcyclicOrientation(graph, m) for m in masks))
        remaining -= masks
    return tuple(sorted(classes, key=lambda c: min(o.forward for o in c)))


class ToricPoset:
    """A toric poset held by a representative orientation.

    The materialized equivalence class is cached on first use; the cap makes
    blow-ups a typed error instead of silent truncation.
    """

    __slots__ = ("representative", "cap", "_members")

    def __init__(self, representative: AcyclicOrientation, cap: int = DEFAULT_CLASS_CAP):
        self.representative = representative
        self.cap = cap
        self._members: frozenset[AcyclicOrientation] | None = None

    @property
    def graph(self) -> Graph:
        return self.representative.graph

    @property
    def members(self) -> frozenset[AcyclicOrientation]:
        if self._members is None:
            self._members = toric_class(self.representative, self.cap)
        return self._members

    def canonical_mask(self) -> int:
        return min(o.forward for o in self.members)

    def __contains__(self, o: AcyclicOrientation) -> bool:
        return o in self.members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ToricPoset):
            return NotImplemented
        return self.graph == other.graph and self.canonical_mask() == other.canonical_mask()

    def __hash__(self) -> int:
        return hash((self.graph, self.canonical_mask()))

    def __repr__(self) -> str:
        return f"ToricPoset({self.representative.bitstring()!r} on {self.graph.n} vertices)"


def is_toric_directed_path(o: AcyclicOrientation, seq: Sequence[int]) -> bool:
    """A directed path i1 -> ... -> ik whose closing edge i1 -> ik is present.

    Vertices, edges and the empty sequence count as toric directed paths.
    """
    seq = list(seq)
    for v in seq:
        if not 0 <= v < o.graph.n:
            raise IndexError(f"vertex {v} out of range")
    if len(set(seq)) != len(seq):
        return False
    if len(seq) <= 1:
        return True
    directed = set(o.directed_edges())
    if any((a, b) not in directed for a, b in zip(seq, seq[1:])):
        return False
    return (seq[0], seq[-1]) in directed


def _covering_toric_path_exists(o: AcyclicOrientation, targets: frozenset[int]) -> bool:
    """Is there a toric directed path whose vertex set covers ``targets``?

    Tries every directed edge (start, goal) as the closing edge and searches
    the simple directed start -> goal paths it closes; a path never reuses
    the closing edge because reaching the goal terminates it.
    """
    adj: dict[int, list[int]] = {}
    for a, b in o.directed_edges():
        adj.setdefault(a, []).append(b)

    def dfs(cur: int, goal: int, visited: set[int]) -> bool:
        if cur == goal:
            return targets <= visited
        for nxt in adj.get(cur, ()):
            if nxt in visited:
                continue
            visited.add(nxt)
            if dfs(nxt, goal, visited):
                return True
            visited.remove(nxt)
        return False

    for start, goal in o.directed_edges():
        if targets <= {start, goal}:
            return True  # the edge itself is a two-element toric directed path
        for mid in adj.get(start, ()):
            if mid == goal:
                continue
            if dfs(mid, goal, {start, mid}):
                return True
    return False


def is_toric_chain(t: ToricPoset, subset: Iterable[int]) -> bool:
    """True iff the subset lies on a toric directed path of the representative.

    Singletons and the empty set are vacuously toric chains.  The verdict
    does not depend on the choice of representative (exercised in tests).
    """
    targets = frozenset(subset)
    for v in targets:
        if not 0 <= v < t.graph.n:
            raise IndexError(f"vertex {v} out of range")
    if len(targets) <= 1:
        return True
    return _covering_toric_path_exists(t.representative, targets)


def toric_transitive_closure(t: ToricPoset) -> Graph:
    """Add every non-edge whose endpoints form a toric chain."""
    g = t.graph
    present = set(g.edges)
    added = [
        (i, j)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if (i, j) not in present and is_toric_chain(t, (i, j))
    ]
    return Graph(g.n, tuple(sorted(present | set(added))))


def _restrict(o: AcyclicOrientation, subgraph: Graph) -> AcyclicOrientation:
    """Forget the directions of edges outside the subgraph."""
    index = {e: k for k, e in enumerate(o.graph.edges)}
    mask = 0
    for k, e in enumerate(subgraph.edges):
        if e not in index:
            raise GraphMismatch(f"{e} is not an edge of the larger graph")
        if o.forward >> index[e] & 1:
            mask |= 1 << k
    return AcyclicOrientation(subgraph, mask)


def toric_hasse(t: ToricPoset) -> Graph:
    """Remove every edge whose removal preserves the total toric extensions.

    Greedy over the canonical edge order; equality of total-toric-extension
    sets is a faithful finite proxy because a toric poset is determined by
    its total toric extensions.
    """
    base = total_toric_extensions(t)
    g = t.graph
    keep = list(g.edges)
    for e in g.edges:
        trial = [f for f in keep if f != e]
        sub = Graph(g.n, tuple(trial))
        t_try = ToricPoset(_restrict(t.representative, sub), cap=t.cap)
        if total_toric_extensions(t_try) == base:
            keep = trial
    return Graph(g.n, tuple(keep))


def is_toric_extension(t_big: ToricPoset, t: ToricPoset) -> bool:
    """Whether t_big (over a supergraph G') torically extends t (over G).

    True iff some representative of the larger class restricts on G to a
    member of the smaller class; the quantification over representatives is
    existential.
    """
    if t_big.graph.n != t.graph.n:
        raise GraphMismatch("toric extension needs a common vertex set")
    if not set(t.graph.edges) <= set(t_big.graph.edges):
        raise GraphMismatch("edges of the smaller graph must be contained in the larger")
    members = t.members
    return any(_restrict(o, t.graph) in members for o in t_big.members)


def canonical_cycle(order: Sequence[int]) -> tuple[int, ...]:
    """Rotate a cyclic ordering so its smallest vertex comes first."""
    order = tuple(order)
    if not order:
        return order
    k = order.index(min(order))
    return order[k:] + order[:k]


def _topological_orders(o: AcyclicOrientation):
    """All vertex orders that linearize the orientation (backtracking)."""
    n = o.graph.n
    preds = [0] * n
    for a, b in o.directed_edges():
        preds[b] |= 1 << a
    order: list[int] = []

    def rec(used: int):
        if len(order) == n:
            yield tuple(order)
            return
        for v in range(n):
            if used >> v & 1 or preds[v] & ~used:
                continue
            order.append(v)
            yield from rec(used | (1 << v))
            order.pop()

    yield from rec(0)


def total_toric_extensions(
    t: ToricPoset, max_vertices: int = MAX_TOTAL_ORDER_VERTICES
) -> frozenset[tuple[int, ...]]:
    """All total toric orders extending t, as canonical cyclic orderings.

    A cyclic ordering extends t exactly when one of its linearizations,
    read as an orientation of the complete graph, restricts on G to a class
    member; equivalently (and computed here) it linearizes some member of
    the class.  The brute-force scan over all (n-1)! cyclic orderings is
    kept in the test suite as an independent oracle.
    """
    n = t.graph.n
    if n > max_vertices:
        raise TooLarge(f"{n} vertices exceeds the total-order search bound {max_vertices}")
    out: set[tuple[int, ...]] = set()
    for member in t.members:
        for order in _topological_orders(member):
            out.add(canonical_cycle(order))
    return frozenset(out)


def total_toric_order(n: int, order: Sequence[int], cap: int = DEFAULT_CLASS_CAP) -> ToricPoset:
    """The toric poset over K_n represented by a cyclic ordering."""
    edges = tuple((i, j) for i in range(n) for j in range(i + 1, n))
    return ToricPoset(orientation_from_linear_order(Graph(n, edges), order), cap=cap)


def cycle_imbalance(o: AcyclicOrientation) -> int:
    """On a cycle graph: (#edges oriented with the cycle) - (#against).

    Constant across a toric class, which separates classes that share all
    their toric chains.
    """
    g = o.graph
    degs = [bin(g.incident[v]).count("1") for v in range(g.n)]
    if any(d != 2 for d in degs) or len(g.edges) != g.n:
        raise ValueError("cycle_imbalance is only defined on cycle graphs")
    # walk the cycle starting at vertex 0
    walk = [0]
    prev = None
    while True:
        cur = walk[-1]
        nbrs = [b if a == cur else a for a, b in g.edges if cur in (a, b)]
        nxt = nbrs[0] if nbrs[0] != prev else nbrs[1]
        if nxt == 0:
            break
        prev = cur
        walk.append(nxt)
    if len(walk) != g.n:
        raise ValueError("cycle_imbalance needs a single connected cycle")
    directed = set(o.directed_edges())
    bal = 0
    for a, b in zip(walk, walk[1:] + [walk[0]]):
        bal += 1 if (a, b) in directed else -1
    return bal


def tutte(graph: Graph, x: int, y: int, max_edges: int = MAX_TUTTE_EDGES) -> int:
    """Tutte polynomial T_G(x, y) by deletion-contraction on multigraphs.

    T(2, 0) counts acyclic orientations and T(1, 0) their toric equivalence
    classes.  Contractions are memoized on a relabeled canonical form.
    """
    if len(graph.edges) > max_edges:
        raise TooLarge(f"{len(graph.edges)} edges exceeds the Tutte bound {max_edges}")
    memo: dict[tuple, int] = {}

    def canon(edges: tuple[tuple[int, int], ...]) -> tuple:
        relabel: dict[int, int] = {}
        for a, b in edges:
            for v in (a, b):
                if v not in relabel:
                    relabel[v] = len(relabel)
        return tuple(sorted((min(relabel[a], relabel[b]), max(relabel[a], relabel[b])) for a, b in edges))

    def components(edges, verts) -> int:
        parent = {v: v for v in verts}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b in edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        return len({find(v) for v in verts})

    def rec(edges: tuple[tuple[int, int], ...]) -> int:
        if not edges:
            return 1
        key = canon(edges)
        if key in memo:
            return memo[key]
        a, b = edges[0]
        rest = edges[1:]
        if a == b:  # loop
            val = y * rec(rest)
        else:
            verts = {v for e in edges for v in e}
            bridge = components(rest, verts) > components(edges, verts)
            contracted = tuple(
                sorted((b if u == a else u, b if v == a else v) for u, v in rest)
            )
            contracted = tuple((min(u, v), max(u, v)) for u, v in contracted)
            if bridge:
                val = x * rec(contracted)
            else:
                val = rec(rest) + rec(contracted)
        memo[key] = val
        return val

    return rec(graph.edges)


def brute_total_toric_extensions(t: ToricPoset) -> frozenset[tuple[int, ...]]:
    """Direct (n-1)!-scan definition of total toric extensions.

    For each cyclic ordering, accept iff one of its n linearizations, read
    as an orientation of K_V, restricts on G to a class member.  Quadratic
    in the factorial; meant for cross-validation at small n.
    """
    n = t.graph.n
    members = {o.forward for o in t.members}
    edge_index = {e: k for k, e in enumerate(t.graph.edges)}
    out = set()
    for tail in permutations(range(1, n)):
        cyc = (0,) + tail
        for r in range(n):
            lin = cyc[r:] + cyc[:r]
            pos = {v: i for i, v in enumerate(lin)}
            mask = 0
            for (a, b), k in edge_index.items():
                if pos[a] < pos[b]:
                    mask |= 1 << k
            if mask in members:
                out.add(cyc)
                break
    return frozenset(out)
