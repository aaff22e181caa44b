import pytest

from coxheaps import catalog
from coxheaps import classifier as CL
from coxheaps import toric as T
from coxheaps import words as W
from coxheaps.coxgraph import CoxeterGraph
from coxheaps.errors import (
    NotACoxeterWord,
    NotReduced,
    SeedWordError,
    ShapeMismatch,
    SpokeError,
)


@pytest.fixture(scope="module")
def affine_c3():
    return catalog.coxeter_graph("C~3")


@pytest.fixture(scope="module")
def paw():
    return CoxeterGraph(
        ["s", "t", "a", "b"],
        [("s", "t", 4), ("t", "a", 3), ("t", "b", 3), ("a", "b", 4)],
    )


def test_is_fc_examples(b3, h3):
    w = "s3 s1 s2 s1 s2"
    assert CL.is_fc(h3, h3.word(w))
    assert not CL.is_fc(b3, b3.word(w))
    for c in CL.coxeter_elements(b3):
        assert CL.is_fc(b3, c)


def test_is_fc_requires_reduced(a3):
    with pytest.raises(NotReduced):
        CL.is_fc(a3, a3.word("s1 s1"))


def test_is_cfc_examples(b3):
    c4t = catalog.coxeter_graph("C~4")
    assert CL.is_cfc(c4t, c4t.word("s0 s1 s2 s3 s4 s3 s2 s1"))
    assert not CL.is_cfc(b3, b3.word("s3 s1 s2 s1 s2"))
    e6t = catalog.coxeter_graph("E~6")
    assert CL.is_cfc(e6t, e6t.word("s1 s3 s2 s4 s3 s5 s4 s6 s0 s3 s2 s6"))


def test_is_tfc_and_faux(b3, affine_c3, paw):
    w = b3.word("s3 s1 s2 s1 s2")
    assert CL.is_tfc(b3, w)
    assert CL.is_faux_cfc(b3, w)
    assert CL.is_faux_cfc(affine_c3, affine_c3.word("s0 s1 s0 s1 s2 s3 s2 s3"))
    assert CL.is_faux_cfc(paw, paw.word("s t s t a b a"))
    # not torically reduced -> not TFC, no error
    assert not CL.is_tfc(b3, b3.word("s3 s2 s1 s2"))


def test_classification_report_consistency(b3):
    rep = CL.classify(b3, b3.word("s3 s1 s2 s1 s2"))
    assert rep.reduced and rep.torically_reduced and rep.cyclically_reduced
    assert not rep.fc and not rep.cfc
    assert rep.tfc and rep.faux_cfc
    assert rep.faux_cfc == (rep.tfc and not rep.cfc)
    assert rep.counts == {
        "reducedWords": 3,
        "commutativityClasses": 2,
        "cyclicWords": 2,
        "cyclicCommutativityClasses": 1,
    }
    doc = rep.to_json(b3)
    assert set(doc) == {
        "word", "reduced", "cyclicallyReduced", "toricallyReduced",
        "fc", "cfc", "tfc", "fauxCfc", "counts", "witnesses",
    }


def test_classification_of_non_reduced_word(a3):
    rep = CL.classify(a3, a3.word("s3 s1 s2 s1 s2"))
    assert not rep.reduced
    assert not (rep.fc or rep.cfc or rep.tfc or rep.faux_cfc)
    assert rep.counts["reducedWords"] is None


def test_classification_witness_chain(b3):
    rep = CL.classify(b3, b3.word("s3 s2 s1 s2"))
    assert rep.reduced and rep.cyclically_reduced and not rep.torically_reduced
    chain = rep.witnesses["toricWitnessChain"]
    assert chain[0] == b3.word("s3 s2 s1 s2")
    last = chain[-1]
    assert any(last[i] == last[i + 1] for i in range(len(last) - 1))


def test_logarithmic_probe(affine_c2, affine_a2):
    w = affine_c2.word("s0 s1 s0 s1 s2")
    probe = CL.logarithmic_probe(affine_c2, w, 2)
    assert probe.violation_at == 2
    assert probe.lengths == (5, 8)
    a1 = CoxeterGraph(["s"])
    probe = CL.logarithmic_probe(a1, (0,), 2)
    assert probe.violation_at == 2 and probe.lengths[-1] == 0
    cox = affine_a2.word("s0 s1 s2")
    probe = CL.logarithmic_probe(affine_a2, cox, 4)
    assert probe.holds and probe.up_to == 4


def test_coxeter_orientation_bijection(affine_a3):
    g = affine_a3
    o = CL.coxeter_to_orientation(g, g.word("s1 s2 s3 s4"))
    assert set(o.directed_edges()) == {(0, 1), (1, 2), (2, 3), (0, 3)}
    back = CL.orientation_to_coxeter(g, o)
    assert W.normal_form(g, back) == W.normal_form(g, g.word("s1 s2 s3 s4"))
    assert len(CL.coxeter_elements(g)) == 14
    with pytest.raises(NotACoxeterWord):
        CL.coxeter_to_orientation(g, g.word("s1 s2 s3"))
    with pytest.raises(NotACoxeterWord):
        CL.coxeter_to_orientation(g, g.word("s1 s2 s3 s3"))


def test_roundtrip_all_orientations(affine_a3):
    g = affine_a3
    skel = CL.coxeter_graph_skeleton(g)
    for o in T.all_acyclic_orientations(skel):
        word = CL.orientation_to_coxeter(g, o)
        assert CL.coxeter_to_orientation(g, word) == o


def test_coxeter_conjugacy_classes(affine_a3):
    classes = CL.coxeter_conjugacy_classes(affine_a3)
    assert sorted(len(c) for c in classes) == [4, 4, 6]
    a2 = catalog.coxeter_graph("A2")
    classes = CL.coxeter_conjugacy_classes(a2)
    assert [len(c) for c in classes] == [2]
    a1 = catalog.coxeter_graph("A1")
    assert [len(c) for c in CL.coxeter_conjugacy_classes(a1)] == [1]


def test_source_flip_conjugator(affine_a3):
    g = affine_a3
    for cls in CL.coxeter_conjugacy_classes(g):
        base = cls[0]
        target = CL.coxeter_to_orientation(g, base)
        for other in cls[1:]:
            v = CL.source_flip_conjugator(
                g, CL.coxeter_to_orientation(g, base), CL.coxeter_to_orientation(g, other)
            )
            assert v is not None
            assert W.conjugate(g, v, base) == W.normal_form(g, other)
        del target
    # inequivalent orientations have no flip path
    c1 = CL.coxeter_to_orientation(g, g.word("s1 s2 s3 s4"))
    c3 = CL.coxeter_to_orientation(g, g.word("s1 s4 s3 s2"))
    assert CL.source_flip_conjugator(g, c1, c3) is None


def test_odd_braid_obstruction(b3, affine_a2):
    assert not CL.odd_braid_obstruction(b3, b3.word("s3 s1 s2 s1 s2"))
    assert CL.odd_braid_obstruction(affine_a2, affine_a2.word("s2 s0 s1 s0"))
    assert not CL.odd_braid_obstruction(b3, ())


def test_tfc_constructor(b3):
    built = CL.tfc_constructor(b3, ("s1", "s2"), b3.word("s3"))
    assert b3.format(built.word) == "s1 s2 s1 s2 s3"
    assert built.tfc


def test_tfc_constructor_rejections(b3, affine_c3):
    with pytest.raises(SeedWordError):
        CL.tfc_constructor(affine_c3, ("s0", "s1"), affine_c3.word("s2 s3 s2 s3"))
    with pytest.raises(SeedWordError):
        CL.tfc_constructor(b3, ("s1", "s2"), b3.word("s1"))
    with pytest.raises(SpokeError):
        CL.tfc_constructor(b3, ("s2", "s1"), b3.word("s3"))  # s2 is not an endpoint
    with pytest.raises(SpokeError):
        CL.tfc_constructor(b3, ("s3", "s2"), b3.word("s1"))  # m = 3 is odd
    with pytest.raises(SpokeError):
        CL.tfc_constructor(b3, ("s1", "s3"), ())  # not an edge


def test_conjecture_probe_three_shapes(b3, affine_c3, paw):
    probe = CL.conjecture_probe(b3, b3.word("s1 s2 s1 s2 s3"))
    assert probe.applicable and probe.confirmed and probe.shortened_cfc
    probe = CL.conjecture_probe(affine_c3, affine_c3.word("s0 s1 s0 s1 s2 s3 s2 s3"))
    assert probe.applicable and probe.confirmed and not probe.shortened_cfc
    probe = CL.conjecture_probe(paw, paw.word("s t s t a b a"))
    assert not probe.applicable
    assert not probe.shortened_tfc
    assert probe.confirmed is None
    assert "not a theorem" in probe.note


def test_conjecture_probe_shape_errors(b3):
    with pytest.raises(ShapeMismatch):
        CL.conjecture_probe(b3, b3.word("s3 s1 s2 s1 s2"))  # no braid prefix
    with pytest.raises(ShapeMismatch):
        CL.conjecture_probe(b3, b3.word("s1 s2 s3"))  # not faux CFC


def test_classify_identity(b3):
    rep = CL.classify(b3, ())
    assert rep.reduced and rep.fc and rep.cfc and rep.tfc and not rep.faux_cfc


def test_finite_group_conjugacy_matches_toric_classes():
    """Coxeter-element conjugacy from exact group enumeration agrees with
    the source-to-sink partition."""
    from oracles import GroupOracle

    for name, radius in (("A3", 8), ("B3", 10), ("H3", 16)):
        g = catalog.coxeter_graph(name)
        oracle = GroupOracle(g, radius)
        coxeter_keys = {oracle.element(c) for c in CL.coxeter_elements(g)}
        for cls in CL.coxeter_conjugacy_classes(g):
            keys = {oracle.element(w) for w in cls}
            full = oracle.conjugacy_class(cls[0])
            assert keys == full & coxeter_keys


def test_strong_cyclic_reducedness_separation(b3):
    """A cyclically reduced element need not have minimal length in its
    conjugacy class; torically reduced corpus elements do."""
    from corpus import SystemCorpus
    from oracles import GroupOracle, strongly_cyclically_reduced

    oracle = GroupOracle(b3, 10)
    w = b3.word("s3 s2 s1 s2")
    from coxheaps import cyclic as CY

    assert CY.is_cyclically_reduced_element(b3, w)
    assert not strongly_cyclically_reduced(oracle, w)  # conjugates down to s2 s1
    corpus = SystemCorpus("B3", b3, 8, 10)
    for word in corpus.words:
        if corpus.torically_reduced(word):
            assert strongly_cyclically_reduced(oracle, word), word


def test_power_collapse_factorization_regression(affine_c2):
    """w = s0s1s0s1s2 factors as w_I * n_I = n_I * w_I with w_I = s0 and
    n_I = s1s0s1s2, which forces l(w^2) < 2 l(w)."""
    g = affine_c2
    w = g.word("s0 s1 s0 s1 s2")
    w_i = g.word("s0")
    n_i = g.word("s1 s0 s1 s2")
    nf = W.normal_form(g, w)
    assert W.multiply(g, w_i, n_i) == nf
    assert W.multiply(g, n_i, w_i) == nf
    square = W.normal_form(g, w + w)
    assert square.length == 8
    assert square == W.normal_form(g, g.word("s1 s0 s1 s2 s1 s0 s1 s2"))
