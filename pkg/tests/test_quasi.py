import random

import pytest

from carterd.absolute import bfs_lengths
from carterd.diagram import classify_diagram
from carterd.hurwitz import reduced_decompositions
from carterd.perm import (
    Reflection,
    all_reflections,
    compose,
    format_cycles,
    inverse,
    product,
    reflection_length,
)
from carterd.quasi import (
    carter_generators,
    check_range,
    generates_full_group,
    generator_diagram,
    group_order,
    is_coxeter_element_of,
    is_parabolic,
    is_quasi_coxeter,
    parabolic_closure,
    representative,
    signed_cycle_type,
    simple_system,
    subgroup_closure,
)
from helpers import all_classes, random_element


def test_running_example_representative():
    c = representative(5, 2)
    assert format_cycles(c.w) == "(~1,2)(5,4,~3)"
    assert [str(t) for t in c.generators] == ["(~2,~3)", "(1,2)", "(2,3)", "(3,4)", "(4,5)"]


@pytest.mark.parametrize("n,m", list(all_classes(8)))
def test_generators_multiply_to_w(n, m):
    c = representative(n, m)
    assert product((c.s(i).perm(n) for i in c.word_order()), n) == c.w
    assert reflection_length(c.w) == n
    assert generates_full_group(c.generators, n)


@pytest.mark.parametrize("n,m", list(all_classes(8)))
def test_carter_diagram_matches_generators(n, m):
    c = representative(n, m)
    computed = generator_diagram(c.generators, n, names=[f"s{i}" for i in range(1, n + 1)])
    assert computed.edge_names() == c.diagram.edge_names()
    label = classify_diagram(c.diagram).label
    assert label == (f"D{n}" if m == 1 else f"Delta({m},{n})")


def test_range_checks():
    with pytest.raises(ValueError):
        check_range(3, 1)
    with pytest.raises(ValueError):
        check_range(6, 4)
    with pytest.raises(ValueError):
        check_range(6, 0)


@pytest.mark.parametrize("n", [4, 5])
def test_fast_generation_agrees_with_exhaustive(n):
    rng = random.Random(20 + n)
    ts = all_reflections(n)
    for _ in range(60):
        gens = rng.sample(ts, rng.randint(1, n + 1))
        assert generates_full_group(gens, n) == generates_full_group(gens, n, exhaustive=True)


def test_group_order():
    for n in range(4, 7):
        assert len(subgroup_closure((t.perm(n) for t in carter_generators(n, 2)), n)) == group_order(n)


def test_signed_cycle_type_separates_classes():
    for n in range(4, 9):
        types = {signed_cycle_type(representative(n, m).w) for m in range(1, n // 2 + 1)}
        assert len(types) == n // 2


def test_signed_cycle_type_is_conjugation_invariant():
    rng = random.Random(21)
    for _ in range(2000):
        n = rng.randint(4, 8)
        w, g = random_element(rng, n), random_element(rng, n)
        assert signed_cycle_type(compose(compose(inverse(g), w), g)) == signed_cycle_type(w)


def test_quasi_coxeter_in_d4():
    # In D4 the full-length elements that are quasi-Coxeter are exactly those
    # of the two signed cycle types of the representatives.
    wanted = {signed_cycle_type(representative(4, m).w) for m in (1, 2)}
    for w in bfs_lengths(4):
        if reflection_length(w) == 4:
            assert is_quasi_coxeter(w) == (signed_cycle_type(w) in wanted), str(w)


def test_parabolic_closure_of_divisor():
    # w(1,2) in D5 with decomposition (1,3)(~1,~3)(3,4)(4,5) generates a D4 subgroup
    c = representative(5, 2)
    w0 = compose(c.w, Reflection(1, 2).perm(5))
    closure = parabolic_closure(w0)
    assert len(closure) == 192
    ts = [Reflection(1, 3), Reflection(1, 3, True), Reflection(3, 4), Reflection(4, 5)]
    assert is_parabolic(ts, 5)
    assert is_coxeter_element_of(w0, ts)


def test_parabolic_closure_rejects_bad_decomposition():
    from carterd.perm import ReflectionTuple

    w = representative(4, 2).w
    bad = ReflectionTuple(4, (Reflection(1, 2),))
    with pytest.raises(ValueError):
        parabolic_closure(w, bad)


def test_non_parabolic_reflection_subgroup():
    # the span of e1-e2, e1+e2, e3-e4, e3+e4 also holds e1-e3, which is missing
    assert not is_parabolic([Reflection(1, 2), Reflection(1, 2, True), Reflection(3, 4), Reflection(3, 4, True)], 4)
    assert is_parabolic([Reflection(1, 2), Reflection(2, 3)], 4)


@pytest.mark.parametrize("n", [4, 5])
def test_coxeter_element_detection(n):
    for m in range(1, n // 2 + 1):
        c = representative(n, m)
        assert is_coxeter_element_of(c.w, c.generators) == (m == 1)


def test_simple_system_of_whole_group_has_rank_n():
    for n in range(4, 7):
        assert len(simple_system(all_reflections(n), n)) == n


def test_every_reduced_decomposition_of_representative_generates():
    for m in (1, 2):
        w = representative(4, m).w
        assert all(generates_full_group(d.factors, 4) for d in reduced_decompositions(w))
