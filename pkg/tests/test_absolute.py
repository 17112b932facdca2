from math import comb

import pytest

from carterd.absolute import (
    bfs_lengths,
    divides,
    find_bowtie,
    interval,
    is_balanced,
    is_lattice,
    left_divisors_bruteforce,
    maximal_divisors,
    minimal_upper_bounds,
)
from carterd.caps import CapExceeded
from carterd.perm import Reflection, compose, identity, parse_cycles, reflection_length
from carterd.quasi import representative


def noncrossing_count_d(n):
    return (3 * n - 2) * comb(2 * n - 2, n - 1) // n


@pytest.mark.parametrize("n", [4, 5, 6])
def test_coxeter_interval_size_is_type_d_catalan(n):
    assert len(interval(representative(n, 1).w)) == noncrossing_count_d(n)


@pytest.mark.parametrize("n", [4, 5])
def test_interval_matches_bruteforce(n):
    group = list(bfs_lengths(n))
    for m in range(1, n // 2 + 1):
        w = representative(n, m).w
        assert set(interval(w).elements) == left_divisors_bruteforce(w, group)


def test_known_interval_sizes():
    sizes = {(n, m): len(interval(representative(n, m).w)) for n in (4, 5, 6) for m in range(1, n // 2 + 1)}
    assert sizes == {(4, 1): 50, (4, 2): 54, (5, 1): 182, (5, 2): 204, (6, 1): 672, (6, 2): 770, (6, 3): 800}


@pytest.mark.parametrize("n,m", [(4, 1), (4, 2), (5, 2)])
def test_interval_is_graded(n, m):
    p = interval(representative(n, m).w)
    for lo, hi in p.covers:
        assert p.rank[p.elements[hi]] == p.rank[p.elements[lo]] + 1
    assert p.elements[0] == identity(n)
    assert p.elements[-1] == p.top
    for g in p.elements:
        assert p.leq(identity(n), g) and p.leq(g, p.top)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_lattice_dichotomy(n):
    for m in range(1, n // 2 + 1):
        w = representative(n, m).w
        p = interval(w)
        rep = is_lattice(p)
        bow = find_bowtie(w, p)
        if m == 1:
            assert rep.is_lattice and bow is None
        else:
            assert not rep.is_lattice and rep.missing == "join"
            t1, t2 = bow
            a, b = t1.perm(n), t2.perm(n)
            assert compose(a, b) == compose(b, a)
            assert a in p and b in p and compose(a, b) not in p
            assert len(minimal_upper_bounds(p, a, b)) >= 2


def test_bowtie_witness_for_d4():
    w = representative(4, 2).w
    assert find_bowtie(w) == (Reflection(1, 2), Reflection(1, 2, True))


@pytest.mark.parametrize("n,m", [(4, 1), (4, 2), (5, 1), (5, 2)])
def test_balanced(n, m):
    assert is_balanced(representative(n, m).w)


def test_maximal_divisors():
    w = representative(5, 2).w
    divs = maximal_divisors(w)
    assert len(divs) == 20
    for t, v in divs:
        assert reflection_length(v) == 4 and divides(v, w)
    with pytest.raises(ValueError):
        maximal_divisors(parse_cycles("(1,2)", 4))


def test_right_division():
    w = representative(4, 2).w
    for t, v in maximal_divisors(w):
        assert divides(v, w, side="left")
    with pytest.raises(ValueError):
        divides(w, w, side="middle")


def test_interval_cap():
    with pytest.raises(CapExceeded):
        interval(representative(5, 2).w, cap=10)
