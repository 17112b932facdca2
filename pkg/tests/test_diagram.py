import pytest

from carterd.diagram import Diagram, UnrecognizedDiagram, classify_diagram


def path(k):
    return Diagram(tuple(f"v{i}" for i in range(k)), tuple((i, i + 1, 3) for i in range(k - 1)))


def test_paths_and_forks():
    assert classify_diagram(path(1)).label == "A1"
    assert classify_diagram(path(5)).label == "A5"
    fork = Diagram(tuple("abcde"), ((0, 2, 3), (1, 2, 3), (2, 3, 3), (3, 4, 3)))
    assert classify_diagram(fork).label == "D5"


def test_four_cycle_with_tails():
    square = Diagram(tuple("abcd"), ((0, 1, 3), (1, 2, 3), (2, 3, 3), (0, 3, 3)))
    c = classify_diagram(square)
    assert c.label == "Delta(2,4)" and c.proper and not c.is_coxeter
    tails = Diagram(tuple("abcdefg"), ((0, 1, 3), (1, 2, 3), (2, 3, 3), (0, 3, 3),
                                     (0, 4, 3), (4, 5, 3), (2, 6, 3)))
    assert classify_diagram(tails).label == "Delta(3,7)"


def test_components_are_ordered():
    d = Diagram(tuple("abcdefg"), ((0, 1, 3), (2, 3, 3), (3, 4, 3), (2, 5, 3), (3, 6, 3)))
    # a-b is A2; c,d,e,f,g: d has neighbours c,e,g and c has f, so a fork D5
    assert classify_diagram(d).label == "D5+A2"


def test_unrecognized():
    triangle = Diagram(tuple("abc"), ((0, 1, 3), (1, 2, 3), (0, 2, 3)))
    with pytest.raises(UnrecognizedDiagram):
        classify_diagram(triangle)


def test_validation():
    with pytest.raises(ValueError):
        Diagram(("a",), ((0, 0, 3),))
    with pytest.raises(ValueError):
        Diagram(("a", "b"), ((0, 1, 2),))
    with pytest.raises(ValueError):
        Diagram(("a", "b"), ((0, 1, 3), (1, 0, 4)))


def test_dot_and_json():
    d = Diagram(("s1", "s2", "s3"), ((1, 0, 3), (1, 2, 4)))
    assert d.to_dot() == (
        'graph G {\n  v0 [label="s1"];\n  v1 [label="s2"];\n  v2 [label="s3"];\n'
        '  v0 -- v1;\n  v1 -- v2 [label="4"];\n}\n'
    )
    assert Diagram.from_json(d.to_json()) == d
