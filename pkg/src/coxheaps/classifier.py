"""FC / CFC / TFC / faux-CFC verdicts and the structural probes around them.

Vocabulary (all for a fixed Coxeter system):

* FC: the reduced words form a single commutativity class;
* CFC: every rotation of every reduced word is reduced and FC;
* TFC: torically reduced with a single cyclic commutativity class;
* faux CFC: TFC but not CFC.

CFC implies FC and TFC; the reverse inclusions fail.  The probes
(logarithmic, braid-shortening) are explicitly partial: they report
evidence bounded by their inputs, never theorems.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import toric
from .coxgraph import INF, CoxeterGraph, Word
from .cyclic import cyclic_decomposition, rtor_words, toric_reduction_witness
from .errors import (
    NotACoxeterWord,
    NotReduced,
    NotToricallyReduced,
    OrbitCapExceeded,
    SeedWordError,
    ShapeMismatch,
    SpokeError,
)
from .words import (
    DEFAULT_ORBIT_CAP,
    _orbit,
    commutativity_class,
    commutativity_classes,
    has_adjacent_repeat,
    is_fc,
    is_reduced,
    power_length,
    reduced_words,
)

__all__ = [
    "ClassificationReport",
    "classify",
    "is_fc",
    "is_cfc",
    "is_tfc",
    "is_faux_cfc",
    "LogProbe",
    "logarithmic_probe",
    "coxeter_to_orientation",
    "orientation_to_coxeter",
    "coxeter_elements",
    "coxeter_conjugacy_classes",
    "odd_braid_obstruction",
    "TfcConstruction",
    "tfc_constructor",
    "ConjectureProbe",
    "conjecture_probe",
]


def is_cfc(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    """For every reduced word of w, every rotation is reduced and FC.

    The verdict quantifies over the full reduced-word set; a braid orbit is
    shared by all its members, so each distinct element met along the way is
    settled by a single orbit search.
    """
    if not is_reduced(g, w, cap):
        raise NotReduced(f"{g.format(w)} is not reduced")
    verdict: dict[Word, bool] = {}
    for u in reduced_words(g, w, cap):
        for k in range(len(u)):
            r = u[k:] + u[:k]
            if r in verdict:
                if not verdict[r]:
                    return False
                continue
            orbit, truncated, bad = _orbit(g, r, cap, witness=has_adjacent_repeat)
            if bad is not None:
                return False  # a rotation is not even reduced
            if truncated:
                raise OrbitCapExceeded(f"braid orbit of {g.format(r)} exceeds cap {cap}")
            short = commutativity_class(g, r, cap)
            ok = len(short) == len(orbit)
            for member in orbit:
                verdict[member] = ok
            if not ok:
                return False
    return True


def is_tfc(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    """Torically reduced with exactly one cyclic commutativity class."""
    try:
        return len(cyclic_decomposition(g, w, cap)) == 1
    except NotToricallyReduced:
        return False


def is_faux_cfc(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    if not is_tfc(g, w, cap):
        return False
    return not is_cfc(g, w, cap)


@dataclass(frozen=True)
class ClassificationReport:
    """Full verdict sheet for one input word.

    ``cyclically_reduced`` is the element-level notion (every reduced word
    of the element is cyclically reduced); a non-reduced input fails every
    cyclic notion by definition.  Counts are None where the underlying
    notion does not apply.
    """

    word: Word
    reduced: bool
    cyclically_reduced: bool
    torically_reduced: bool
    fc: bool
    cfc: bool
    tfc: bool
    faux_cfc: bool
    counts: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    def to_json(self, g: CoxeterGraph) -> dict:
        def fmt(word):
            return g.format(word)

        witnesses = {}
        if "nonReducedRotation" in self.witnesses:
            witnesses["nonReducedRotation"] = fmt(self.witnesses["nonReducedRotation"])
        if "toricWitnessChain" in self.witnesses:
            witnesses["toricWitnessChain"] = [fmt(u) for u in self.witnesses["toricWitnessChain"]]
        return {
            "word": fmt(self.word),
            "reduced": self.reduced,
            "cyclicallyReduced": self.cyclically_reduced,
            "toricallyReduced": self.torically_reduced,
            "fc": self.fc,
            "cfc": self.cfc,
            "tfc": self.tfc,
            "fauxCfc": self.faux_cfc,
            "counts": dict(self.counts),
            "witnesses": witnesses,
        }


def classify(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> ClassificationReport:
    word = g.check_word(w)
    if not is_reduced(g, word, cap):
        return ClassificationReport(
            word=word,
            reduced=False,
            cyclically_reduced=False,
            torically_reduced=False,
            fc=False,
            cfc=False,
            tfc=False,
            faux_cfc=False,
            counts={"reducedWords": None, "commutativityClasses": None,
                    "cyclicWords": None, "cyclicCommutativityClasses": None},
            witnesses={"nonReducedRotation": word},
        )
    classes = commutativity_classes(g, word, cap)
    n_words = sum(len(c) for c in classes)
    fc = len(classes) == 1
    counts: dict = {"reducedWords": n_words, "commutativityClasses": len(classes)}
    witnesses: dict = {}

    cyc_word_reduced, bad_rotation = _cyclic_word_check(g, word, cap)
    cyclically_reduced = cyc_word_reduced and all(
        _cyclic_word_check(g, u, cap)[0] for u in reduced_words(g, word, cap)
    )
    if bad_rotation is not None:
        witnesses["nonReducedRotation"] = bad_rotation

    chain = toric_reduction_witness(g, word, cap)
    torically_reduced = chain is None
    if chain is not None:
        witnesses["toricWitnessChain"] = chain
        counts["cyclicWords"] = None
        counts["cyclicCommutativityClasses"] = None
        tfc = False
        cfc = is_cfc(g, word, cap)
    else:
        decomposition = cyclic_decomposition(g, word, cap)
        counts["cyclicWords"] = sum(len(c) for c in decomposition)
        counts["cyclicCommutativityClasses"] = len(decomposition)
        tfc = len(decomposition) == 1
        cfc = is_cfc(g, word, cap)
    return ClassificationReport(
        word=word,
        reduced=True,
        cyclically_reduced=cyclically_reduced,
        torically_reduced=torically_reduced,
        fc=fc,
        cfc=cfc,
        tfc=tfc,
        faux_cfc=tfc and not cfc,
        counts=counts,
        witnesses=witnesses,
    )


def _cyclic_word_check(g: CoxeterGraph, w: Word, cap: int) -> tuple[bool, Word | None]:
    for k in range(len(w)):
        r = w[k:] + w[:k]
        if not is_reduced(g, r, cap):
            return False, r
    return True, None


@dataclass(frozen=True)
class LogProbe:
    """K-bounded logarithmicity check; a positive report is not a proof."""

    word: Word
    up_to: int
    lengths: tuple[int, ...]  # lengths of w^1 .. w^K
    violation_at: int | None

    @property
    def holds(self) -> bool:
        return self.violation_at is None


def logarithmic_probe(g: CoxeterGraph, w: Word, up_to: int, cap: int = DEFAULT_ORBIT_CAP) -> LogProbe:
    """First k <= up_to with l(w^k) < k*l(w), if any.

    Partial verification only: "holds" means no violation below the bound.
    """
    if not is_reduced(g, w, cap):
        raise NotReduced(f"{g.format(w)} is not reduced")
    if up_to < 1:
        raise ValueError("up_to must be >= 1")
    base = len(w)
    lengths = []
    violation = None
    for k in range(1, up_to + 1):
        lk = power_length(g, w, k, cap)
        lengths.append(lk)
        if violation is None and lk < k * base:
            violation = k
            break
    return LogProbe(g.check_word(w), up_to, tuple(lengths), violation)


# -- Coxeter elements and their conjugacy ------------------------------


def coxeter_graph_skeleton(g: CoxeterGraph) -> toric.Graph:
    """The diagram as a plain graph: vertices are generator indices."""
    return toric.Graph(g.rank, g.edges())


def coxeter_to_orientation(g: CoxeterGraph, c: Word) -> toric.AcyclicOrientation:
    """Orient each bond towards the generator appearing later in the word."""
    word = g.check_word(c)
    if sorted(word) != list(range(g.rank)):
        raise NotACoxeterWord(f"{g.format(c)} does not use each generator exactly once")
    pos = {s: i for i, s in enumerate(word)}
    skel = coxeter_graph_skeleton(g)
    mask = 0
    for k, (a, b) in enumerate(skel.edges):
        if pos[a] < pos[b]:
            mask |= 1 << k
    return toric.AcyclicOrientation(skel, mask)


def orientation_to_coxeter(g: CoxeterGraph, o: toric.AcyclicOrientation) -> Word:
    """Shortlex-least linear extension of the oriented diagram, as a word."""
    skel = coxeter_graph_skeleton(g)
    if o.graph != skel:
        raise NotACoxeterWord("orientation does not live on this Coxeter graph")
    preds = [0] * g.rank
    for a, b in o.directed_edges():
        preds[b] |= 1 << a
    out = []
    used = 0
    for _ in range(g.rank):
        v = next(v for v in range(g.rank) if not used >> v & 1 and not preds[v] & ~used)
        out.append(v)
        used |= 1 << v
    return tuple(out)


def coxeter_elements(g: CoxeterGraph) -> tuple[Word, ...]:
    """Canonical words for all Coxeter elements, one per acyclic orientation."""
    skel = coxeter_graph_skeleton(g)
    return tuple(
        sorted(orientation_to_coxeter(g, o) for o in toric.all_acyclic_orientations(skel))
    )


def coxeter_conjugacy_classes(
    g: CoxeterGraph, cap: int = toric.DEFAULT_CLASS_CAP
) -> tuple[tuple[Word, ...], ...]:
    """Conjugacy classes of Coxeter elements via source-to-sink equivalence.

    Two Coxeter elements are conjugate iff their diagram orientations are
    torically equivalent, so the partition is the pullback of the toric
    classes through the bijection.  Classes are listed by least member.
    """
    skel = coxeter_graph_skeleton(g)
    out = []
    for cls in toric.toric_classes(skel, cap):
        out.append(tuple(sorted(orientation_to_coxeter(g, o) for o in cls)))
    return tuple(sorted(out))


def source_flip_conjugator(
    g: CoxeterGraph, start: toric.AcyclicOrientation, goal: toric.AcyclicOrientation,
    cap: int = toric.DEFAULT_CLASS_CAP,
) -> Word | None:
    """A word v with v^-1 c(start) v = c(goal), as a product of flipped
    vertices, or None when the orientations are not torically equivalent.

    Flipping a source s conjugates by s (a cyclic shift); flipping a sink
    likewise, since generators are involutions.
    """
    if start.graph != goal.graph:
        raise NotACoxeterWord("orientations live on different graphs")
    frontier = {start.forward: ()}
    queue = [start.forward]
    seen = {start.forward}
    graph = start.graph
    while queue:
        cur = queue.pop(0)
        if cur == goal.forward:
            return frontier[cur]
        o = toric.AcyclicOrientation(graph, cur)
        for v in range(graph.n):
            if o.is_source(v) or o.is_sink(v):
                nxt = cur ^ graph.incident[v]
                if nxt not in seen:
                    if len(seen) >= cap:
                        raise toric.ClassCapExceeded(f"toric class exceeds cap {cap}")
                    seen.add(nxt)
                    frontier[nxt] = frontier[cur] + (v,)
                    queue.append(nxt)
    return None


# -- section-7 style probes ---------------------------------------------


def odd_braid_obstruction(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    """Does some word of R_tor(w) contain a factor <s,t>_m with odd m >= 3?

    A faux-CFC element can never produce one (an odd braid move changes the
    letter multiset), so False is a necessary condition for faux CFC.
    """
    for u in rtor_words(g, w, cap):
        if _has_odd_long_braid_factor(g, u):
            return True
    return False


def _has_odd_long_braid_factor(g: CoxeterGraph, u: Word) -> bool:
    n = len(u)
    for i in range(n - 2):
        s, t = u[i], u[i + 1]
        if s == t:
            continue
        m = g.m(s, t)
        if m == INF or m < 3 or m % 2 == 0 or i + m > n:
            continue
        if all(u[i + k] == (s if k % 2 == 0 else t) for k in range(2, int(m))):
            return True
    return False


def alternating(s: int, t: int, m: int) -> Word:
    """The word <s,t>_m = stst... with m letters."""
    return tuple(s if k % 2 == 0 else t for k in range(m))


@dataclass(frozen=True)
class TfcConstruction:
    word: Word
    tfc: bool


def tfc_constructor(
    g: CoxeterGraph, spoke: tuple[str | int, str | int], u: Word, cap: int = DEFAULT_ORBIT_CAP
) -> TfcConstruction:
    """Build <s,t>_{m(s,t)} u from an even spoke (s, t) and a CFC seed u.

    Preconditions (typed errors): s is an endpoint of the diagram, m(s, t)
    is even and finite, u avoids s and t, and u is a reduced word for a CFC
    element.  The returned verdict is computed, not assumed.
    """
    s, t = (g.as_index(x) for x in spoke)
    m = g.m(s, t)
    if m == 2 or m == 1:
        raise SpokeError(f"({g.name(s)}, {g.name(t)}) is not an edge of the diagram")
    if g.degree(s) != 1:
        raise SpokeError(f"{g.name(s)} is not an endpoint of the diagram")
    if m == INF or int(m) % 2 != 0:
        raise SpokeError(f"m({g.name(s)}, {g.name(t)}) = {m} is not even and finite")
    seed = g.check_word(u)
    if s in seed or t in seed:
        raise SeedWordError("seed word must avoid both spoke generators")
    if not is_reduced(g, seed, cap):
        raise SeedWordError("seed word is not reduced")
    if not is_cfc(g, seed, cap):
        raise SeedWordError("seed word is not CFC")
    word = alternating(s, t, int(m)) + seed
    return TfcConstruction(word, is_tfc(g, word, cap))


@dataclass(frozen=True)
class ConjectureProbe:
    """Evidence row for the braid-shortening conjecture; never a proof.

    For a faux-CFC word <s,t>_m u the conjecture predicts that
    <s,t>_{m-2} u is TFC whenever u is torically reduced.  Shapes whose
    seed is not torically reduced fall outside the hypothesis and are
    reported with ``applicable = False``.
    """

    word: Word
    shortened: Word
    seed_torically_reduced: bool
    shortened_tfc: bool
    shortened_cfc: bool

    note: str = "evidence only, not a theorem"

    @property
    def applicable(self) -> bool:
        return self.seed_torically_reduced

    @property
    def confirmed(self) -> bool | None:
        return self.shortened_tfc if self.applicable else None


def conjecture_probe(g: CoxeterGraph, w: Word, cap: int = DEFAULT_ORBIT_CAP) -> ConjectureProbe:
    """Split w = <s,t>_{m(s,t)} u, require w faux CFC, and classify the
    shortened word <s,t>_{m-2} u."""
    word = g.check_word(w)
    if len(word) < 3 or word[0] == word[1]:
        raise ShapeMismatch("word does not start with an alternating braid factor")
    s, t = word[0], word[1]
    m = g.m(s, t)
    if m == INF or m < 3:
        raise ShapeMismatch(f"m({g.name(s)}, {g.name(t)}) = {m} admits no finite braid prefix")
    m = int(m)
    if word[:m] != alternating(s, t, m):
        raise ShapeMismatch(f"word does not start with the full factor <{g.name(s)},{g.name(t)}>_{m}")
    seed = word[m:]
    if not is_faux_cfc(g, word, cap):
        raise ShapeMismatch(f"{g.format(w)} is not faux CFC")
    seed_tor = toric_reduction_witness(g, seed, cap) is None
    shortened = alternating(s, t, m - 2) + seed
    return ConjectureProbe(
        word=word,
        shortened=shortened,
        seed_torically_reduced=seed_tor,
        shortened_tfc=is_tfc(g, shortened, cap),
        shortened_cfc=is_reduced(g, shortened, cap) and is_cfc(g, shortened, cap),
    )
