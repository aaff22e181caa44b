"""Coxeter systems as weighted graphs.

A Coxeter system is presented by a finite set of involutive generators
together with a bond strength m(s, t) for each unordered pair: m = 2 means
s and t commute, m >= 3 (or infinity) means they satisfy the braid relation
<s,t>_m = <t,s>_m (no finite relation when m is infinite).  Only bonds with
m >= 3 are stored; absence means m = 2, and m(s, s) = 1 implicitly.

Generators carry a display name and a dense integer index; all word-level
code works on indices (declaration order is the tie-break order everywhere).
Words are plain tuples of generator indices; the empty tuple is the
identity.  Everything in this module is immutable after construction and
safe to share between threads.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Mapping

from .errors import GraphSpecError, UnknownGenerator, WordSyntaxError

# Bond strength of a pair with no finite braid relation.  Kept as a real
# infinity so comparisons like m >= 3 stay honest.
INF = math.inf

Word = tuple[int, ...]

Bond = int | float  # int >= 3, or INF


class CoxeterGraph:
    """Immutable Coxeter graph: generator names plus symmetric bond map."""

    __slots__ = ("generators", "_index", "_bonds", "_key")

    def __init__(self, generators: Iterable[str], bonds: Mapping[tuple[str, str], Bond] | Iterable[tuple[str, str, Bond]] = ()):
        gens = tuple(generators)
        for name in gens:
            if not isinstance(name, str) or not name or any(c.isspace() for c in name):
                raise GraphSpecError(f"bad generator name: {name!r}")
        if len(set(gens)) != len(gens):
            raise GraphSpecError("duplicate generator names")
        index = {name: i for i, name in enumerate(gens)}

        if isinstance(bonds, Mapping):
            items = [(s, t, m) for (s, t), m in bonds.items()]
        else:
            items = [(s, t, m) for s, t, m in bonds]
        bond_map: dict[tuple[int, int], Bond] = {}
        for s, t, m in items:
            if s not in index or t not in index:
                missing = s if s not in index else t
                raise GraphSpecError(f"bond references unknown generator {missing!r}")
            i, j = index[s], index[t]
            if i == j:
                raise GraphSpecError(f"self-bond on {s!r}")
            m = _check_bond(s, t, m)
            key = (i, j) if i < j else (j, i)
            if key in bond_map:
                raise GraphSpecError(f"duplicate bond for pair ({s!r}, {t!r})")
            bond_map[key] = m

        self.generators = gens
        self._index = index
        self._bonds = bond_map
        self._key = (gens, tuple(sorted(bond_map.items())))

    # -- basic queries ------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.generators)

    def as_index(self, s: str | int) -> int:
        """Accept a generator by name or index; return its index."""
        if isinstance(s, str):
            try:
                return self._index[s]
            except KeyError:
                raise UnknownGenerator(f"unknown generator {s!r}") from None
        if isinstance(s, int) and 0 <= s < len(self.generators):
            return s
        raise UnknownGenerator(f"generator index out of range: {s!r}")

    def name(self, i: int) -> str:
        return self.generators[self.as_index(i)]

    def m(self, s: str | int, t: str | int) -> Bond:
        """Bond strength m(s, t); 1 on the diagonal, 2 off stored bonds."""
        i, j = self.as_index(s), self.as_index(t)
        if i == j:
            return 1
        key = (i, j) if i < j else (j, i)
        return self._bonds.get(key, 2)

    def commutes(self, s: str | int, t: str | int) -> bool:
        """True iff s != t and m(s, t) = 2."""
        return self.m(s, t) == 2

    def bonds(self) -> tuple[tuple[int, int, Bond], ...]:
        """Stored bonds as (i, j, m) with i < j, in index order."""
        return tuple((i, j, m) for (i, j), m in sorted(self._bonds.items()))

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Underlying simple graph: the pairs with m >= 3 (edges of the diagram)."""
        return tuple(sorted(self._bonds))

    def neighbors(self, s: str | int) -> tuple[int, ...]:
        i = self.as_index(s)
        return tuple(sorted(j for pair in self._bonds for j in pair if i in pair and j != i))

    def degree(self, s: str | int) -> int:
        return len(self.neighbors(s))

    def induced(self, keep: Iterable[str | int]) -> "CoxeterGraph":
        """Subgraph on a generator subset, with inherited bonds.

        Declaration order of the kept generators is preserved.
        """
        idx = sorted({self.as_index(s) for s in keep})
        names = [self.generators[i] for i in idx]
        sub = [
            (self.generators[i], self.generators[j], m)
            for (i, j), m in sorted(self._bonds.items())
            if i in idx and j in idx
        ]
        return CoxeterGraph(names, sub)

    # -- word helpers ---------------------------------------------------

    def check_word(self, w: Iterable[int]) -> Word:
        word = tuple(w)
        for i in word:
            if not (isinstance(i, int) and 0 <= i < len(self.generators)):
                raise UnknownGenerator(f"letter index out of range: {i!r}")
        return word

    def word(self, text: str) -> Word:
        return parse_word(self, text)

    def format(self, w: Iterable[int]) -> str:
        return format_word(self, w)

    # -- serialization --------------------------------------------------

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "bonds": [
                [self.generators[i], self.generators[j], "inf" if m == INF else m]
                for (i, j), m in sorted(self._bonds.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CoxeterGraph":
        if not isinstance(data, dict) or "generators" not in data:
            raise GraphSpecError("graph document needs a 'generators' field")
        gens = data["generators"]
        bonds = data.get("bonds", [])
        if not isinstance(gens, list) or not isinstance(bonds, list):
            raise GraphSpecError("'generators' and 'bonds' must be arrays")
        items = []
        for entry in bonds:
            if not (isinstance(entry, list) and len(entry) == 3):
                raise GraphSpecError(f"bond entry must be [name, name, strength]: {entry!r}")
            items.append(tuple(entry))
        return cls(gens, items)

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CoxeterGraph) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        bonds = ", ".join(
            f"({self.generators[i]},{self.generators[j]}):{m}" for (i, j), m in sorted(self._bonds.items())
        )
        return f"CoxeterGraph([{', '.join(self.generators)}]; {bonds or 'no bonds'})"


def _check_bond(s, t, m) -> Bond:
    if m == "inf" or m == INF:
        return INF
    if isinstance(m, bool) or not isinstance(m, int):
        raise GraphSpecError(f"bond ({s!r}, {t!r}) has non-integer strength {m!r}")
    if m <= 2:
        raise GraphSpecError(
            f"bond ({s!r}, {t!r}) has strength {m}; m = 2 pairs must be omitted and m = 1 is the diagonal"
        )
    return m


def load_coxeter_graph(path: str) -> CoxeterGraph:
    """Load and validate a graph file (JSON with 'generators' and 'bonds')."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GraphSpecError(f"not a JSON document: {exc}") from None
    return CoxeterGraph.from_json(data)


def parse_word(g: CoxeterGraph, text: str) -> Word:
    """Parse whitespace-separated generator names, or compact 1-based
    index digits ("31212") when the rank is at most 9.

    A digit string that happens to be a declared generator name is read as
    that single generator; names win over the compact form.
    """
    tokens = text.split()
    if not tokens:
        return ()
    if all(tok in g._index for tok in tokens):
        return tuple(g._index[tok] for tok in tokens)
    if len(tokens) == 1 and tokens[0].isdigit() and g.rank <= 9:
        out = []
        for c in tokens[0]:
            i = int(c) - 1
            if not 0 <= i < g.rank:
                raise WordSyntaxError(f"digit {c} is out of range for rank {g.rank}")
            out.append(i)
        return tuple(out)
    bad = next(tok for tok in tokens if tok not in g._index)
    raise WordSyntaxError(f"unknown generator {bad!r} in word {text!r}")


def format_word(g: CoxeterGraph, w: Iterable[int]) -> str:
    return " ".join(g.generators[i] for i in g.check_word(w))


def support(w: Iterable[int]) -> frozenset[int]:
    """Set of distinct letters appearing in the word."""
    return frozenset(w)
