import json

import pytest

from carterd.coset import todd_coxeter
from carterd.diagram import Diagram
from carterd.perm import all_reflections, identity
from carterd.presentation import (
    GeneratorWord,
    Presentation,
    cameron_presentation,
    claimed_presentation,
    claimed_tc_relator,
    commutator,
    dual_presentation,
    evaluate_word,
    export,
    format_conjugate,
    freely_conjugate,
    make_relator,
    positive_tc_relation,
    reflection_word,
    reflection_word_parts,
    s,
    tc_variants,
    to_gap,
    to_kbmag,
)
from carterd.quasi import representative
from helpers import all_classes


def test_word_algebra():
    w = GeneratorWord.of("a", "b") * GeneratorWord.gen("b", -1)
    assert str(w.free_reduce()) == "a"
    assert str(GeneratorWord.of("a", "b").inverse()) == "b^-1 a^-1"
    assert str(GeneratorWord.gen("a").conjugate(GeneratorWord.gen("b"))) == "b^-1 a b"
    c = GeneratorWord.of("a", "b") * GeneratorWord.gen("a", -1)
    assert str(c.cyclic_reduce()) == "b"
    assert freely_conjugate(GeneratorWord.of("a", "b", "c"), GeneratorWord.of("c", "a", "b"))
    assert not freely_conjugate(GeneratorWord.of("a", "b"), GeneratorWord.of("a", "c"))


def test_commutator_convention():
    a, b = GeneratorWord.gen("a"), GeneratorWord.gen("b")
    assert commutator(a, b) == GeneratorWord((("a", 1), ("b", 1), ("a", -1), ("b", -1)))


def test_make_relator():
    assert str(make_relator("braid", "x", "y")) == "x y x y^-1 x^-1 y^-1"
    assert str(make_relator("comm", "x", "y")) == "x y x^-1 y^-1"
    with pytest.raises(TypeError):
        make_relator("braid", "x")
    with pytest.raises(ValueError):
        make_relator("twist", "x", "y")


@pytest.mark.parametrize("n,m", [(4, 1), (4, 2), (5, 2), (6, 3)])
def test_relator_counts(n, m):
    pairs = n * (n - 1) // 2
    assert len(claimed_presentation(n, m).relators) == pairs + (m >= 2)
    assert len(cameron_presentation(n, m).relators) == n + pairs + (m >= 2)


def test_claimed_d4_has_seven_relators():
    p = claimed_presentation(4, 2)
    assert len(p.relators) == 7
    assert p.relators[-1] == claimed_tc_relator(2)
    assert str(claimed_tc_relator(2)) == "s1 s2^-1 s3 s4 s3^-1 s2 s1^-1 s2^-1 s3 s4^-1 s3^-1 s2"


@pytest.mark.parametrize("n,m", list(all_classes(8)))
def test_relators_hold_in_w(n, m):
    assign = representative(n, m).assignment()
    e = identity(n)
    for p in (claimed_presentation(n, m), cameron_presentation(n, m)):
        assert all(evaluate_word(r, assign) == e for r in p.relators)
    if m >= 2:
        assert all(evaluate_word(r, assign) == e for r in tc_variants(m).values())
        lhs, rhs = positive_tc_relation(m)
        assert evaluate_word(lhs, assign) == evaluate_word(rhs, assign)


def test_positive_form_is_not_a_free_reduction_of_tc():
    for m in (2, 3, 4):
        lhs, rhs = positive_tc_relation(m)
        positive = (lhs * rhs.inverse()).cyclic_reduce()
        tc = claimed_tc_relator(m).cyclic_reduce()
        assert len(positive) == 14 and len(tc) == 12
        assert not freely_conjugate(positive, tc)
        assert not freely_conjugate(positive, tc.inverse())


@pytest.mark.slow
def test_tc_and_positive_form_agree_in_cubic_quotient():
    """Without the quadratic relators the two cycle relators still give the same quotient
    once every generator is forced to have order three."""
    base = claimed_presentation(4, 2)
    diagram_rels = base.relators[:-1]
    cubes = tuple(s(i) * s(i) * s(i) for i in range(1, 5))
    lhs, rhs = positive_tc_relation(2)
    positive = lhs * rhs.inverse()
    with_tc = Presentation(base.generators, diagram_rels + cubes + (claimed_tc_relator(2),), "test", {})
    with_pos = Presentation(base.generators, diagram_rels + cubes + (positive,), "test", {})
    t1 = todd_coxeter(with_tc, cap=2_000_000)
    t2 = todd_coxeter(with_pos, cap=2_000_000)
    assert t1.index == t2.index == 155520
    assert all(t1.act(c, positive) == c for c in range(t1.index))
    assert all(t2.act(c, claimed_tc_relator(2)) == c for c in range(t2.index))


@pytest.mark.parametrize("n,m", list(all_classes(7)))
def test_reflection_words_evaluate_correctly(n, m):
    c = representative(n, m)
    assign = c.assignment()
    for t in all_reflections(n):
        for lifted in (False, True):
            assert evaluate_word(reflection_word(t, c, lifted), assign) == t.perm(n)


def test_reflection_word_format():
    from carterd.perm import Reflection

    c = representative(4, 2)
    assert format_conjugate(*reflection_word_parts(Reflection(1, 4), c, True)) == "s4^{s3^-1 s2^-1}"
    assert format_conjugate(*reflection_word_parts(Reflection(2, 3), c, True)) == "s3"


def test_json_round_trip():
    for p in (claimed_presentation(5, 2), cameron_presentation(4, 1), dual_presentation(representative(4, 2).w)):
        text = p.to_json()
        assert json.loads(text)["schema"] == "carterd.presentation/1"
        assert Presentation.from_json(text) == p


def test_presentation_validates_names():
    with pytest.raises(ValueError):
        Presentation(("a",), (GeneratorWord.gen("b"),), "test", {})


def test_gap_export():
    text = to_gap(claimed_presentation(5, 2))
    assert 'F := FreeGroup("s1", "s2", "s3", "s4", "s5");' in text
    assert "s1*s2^-1*s3*s4*s3^-1*s2*s1^-1*s2^-1*s3*s4^-1*s3^-1*s2" in text
    assert text.rstrip().endswith("G := F / rels;")
    dual = to_gap(dual_presentation(representative(4, 1).w))
    assert "x1 := F.1;" in dual


def test_kbmag_export():
    text = to_kbmag(cameron_presentation(4, 2))
    assert text.startswith("_RWS := rec(")
    assert 'ordering := "shortlex"' in text
    assert "IdWord" in text


def test_export_dispatch():
    p = claimed_presentation(4, 2)
    assert export(p, "gap") == to_gap(p)
    d = representative(4, 2).diagram
    assert export(d, "dot") == d.to_dot()
    with pytest.raises(ValueError):
        export(p, "dot")
    with pytest.raises(ValueError):
        export(Diagram(("a",), ()), "gap")


def test_dual_presentation_quotients():
    for m in (1, 2):
        p = dual_presentation(representative(4, m).w)
        squares = tuple(GeneratorWord.gen(g) * GeneratorWord.gen(g) for g in p.generators)
        q = Presentation(p.generators, squares + p.relators, "dual", {})
        assert todd_coxeter(q).index == 192
