"""Quasi-Coxeter elements: Carter data, generation tests, cycle types and closures."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .caps import CapExceeded, get_cap
from .diagram import Diagram
from .perm import (
    MarkedPermutation,
    Reflection,
    ReflectionTuple,
    all_reflections,
    as_reflection,
    compose,
    from_cycles,
    identity,
    inverse,
    marked_cycles,
    product,
    reflection_length,
)


def group_order(n: int) -> int:
    return 2 ** (n - 1) * factorial(n)


def check_range(n: int, m: int) -> None:
    if n < 4:
        raise ValueError(f"rank must be at least 4, got {n}")
    if not 1 <= m <= n // 2:
        raise ValueError(f"class index m must lie in 1..{n // 2}, got {m}")


@dataclass(frozen=True)
class CarterData:
    n: int
    m: int
    w: MarkedPermutation
    generators: tuple[Reflection, ...]  # s_1 .. s_n
    diagram: Diagram

    def s(self, i: int) -> Reflection:
        return self.generators[i - 1]

    def assignment(self) -> dict[str, MarkedPermutation]:
        return {f"s{i}": t.perm(self.n) for i, t in enumerate(self.generators, start=1)}

    def word_order(self) -> list[int]:
        """Indices i with w = s_2 ... s_m s_1 s_{m+1} ... s_n."""
        return list(range(2, self.m + 1)) + [1] + list(range(self.m + 1, self.n + 1))


def carter_generators(n: int, m: int) -> tuple[Reflection, ...]:
    check_range(n, m)
    return (Reflection(m, m + 1, True),) + tuple(Reflection(i, i + 1) for i in range(1, n))


def carter_diagram(n: int, m: int) -> Diagram:
    check_range(n, m)
    names = tuple(f"s{i}" for i in range(1, n + 1))
    pairs: list[tuple[int, int]] = []
    if m == 1:
        # Coxeter diagram of D_n: s1 and s2 both attached to s3, then a path
        pairs += [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n)]
    else:
        pairs += [(i, i + 1) for i in range(2, m)]
        pairs += [(m, m + 1), (m, 1), (m + 2, m + 1), (m + 2, 1)]
        pairs += [(i, i + 1) for i in range(m + 2, n)]
    return Diagram(names, tuple((a - 1, b - 1, 3) for a, b in pairs))


def representative(n: int, m: int) -> CarterData:
    """The class representative (m,...,2,~1)(n,...,m+1 barred) with its Carter generators."""
    check_range(n, m)
    first = tuple(range(m, 1, -1)) + (-1,)
    second = tuple(range(n, m + 1, -1)) + (-(m + 1),)
    w = from_cycles([first, second], n)
    return CarterData(n, m, w, carter_generators(n, m), carter_diagram(n, m))


def generator_diagram(ts: Sequence[Reflection], n: int, names: Sequence[str] | None = None) -> Diagram:
    perms = [t.perm(n) for t in ts]
    edges = []
    for a in range(len(ts)):
        for b in range(a + 1, len(ts)):
            if compose(perms[a], perms[b]) != compose(perms[b], perms[a]):
                edges.append((a, b, 3))
    labels = tuple(names) if names is not None else tuple(str(t) for t in ts)
    return Diagram(labels, tuple(edges))


# ------------------------------------------------------------- subgroups

def subgroup_closure(gens: Iterable[MarkedPermutation], n: int, cap: int | None = None) -> set[MarkedPermutation]:
    limit = get_cap("closure", cap)
    gens = list(gens)
    e = identity(n)
    seen = {e}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(g, s)
            if h not in seen:
                seen.add(h)
                if len(seen) > limit:
                    raise CapExceeded(f"subgroup closure exceeds cap {limit}")
                queue.append(h)
    return seen


def reflection_closure(ts: Iterable[Reflection], n: int) -> set[Reflection]:
    """Reflections of the subgroup generated by ``ts``: the closure of ``ts`` under mutual conjugation."""
    found = set(ts)
    queue = deque(found)
    while queue:
        a = queue.popleft()
        pa = a.perm(n)
        for b in list(found):
            pb = b.perm(n)
            for c in (as_reflection(compose(compose(pa, pb), pa)), as_reflection(compose(compose(pb, pa), pb))):
                if c not in found:
                    found.add(c)
                    queue.append(c)
    return found


def generates_full_group(ts: Iterable[Reflection], n: int | None = None, *, exhaustive: bool = False,
                         cap: int | None = None) -> bool:
    """Whether the reflections generate all of W(D_n).

    The default test compares reflection sets, which suffices because a
    subgroup generated by reflections contains no reflections other than
    conjugates of its generators.  ``exhaustive`` counts the subgroup instead.
    """
    ts = list(ts)
    if n is None:
        n = max(t.j for t in ts)
    if exhaustive:
        return len(subgroup_closure((t.perm(n) for t in ts), n, cap)) == group_order(n)
    return len(reflection_closure(ts, n)) == n * (n - 1)


def is_quasi_coxeter(w: MarkedPermutation, cap: int | None = None) -> bool:
    from .hurwitz import reduced_decompositions

    n = w.degree
    if reflection_length(w) != n:
        return False
    return any(generates_full_group(d.factors, n) for d in reduced_decompositions(w, cap))


def signed_cycle_type(w: MarkedPermutation) -> tuple[tuple[int, str], ...]:
    """Sorted (length, sign) per cycle, sign ``'-'`` for an odd number of overlines."""
    kinds = Counter(
        (len(c), "-" if sum(1 for a in c if a < 0) % 2 else "+") for c in marked_cycles(w)
    )
    return tuple(sorted(kinds.elements()))


def parabolic_closure(w: MarkedPermutation, decomposition: ReflectionTuple | None = None,
                      cap: int | None = None) -> frozenset[MarkedPermutation]:
    if decomposition is None:
        from .hurwitz import reduced_decompositions

        decs = reduced_decompositions(w, cap)
        decomposition = min(decs, key=lambda d: tuple(t.sort_key() for t in d.factors))
    if decomposition.product() != w or len(decomposition) != reflection_length(w):
        raise ValueError("not a reduced decomposition of w")
    n = w.degree
    return frozenset(subgroup_closure((t.perm(n) for t in decomposition.factors), n, cap))


# ------------------------------------------------------------- root data

def _rank(vectors: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def is_parabolic(ts: Iterable[Reflection], n: int) -> bool:
    """Whether the subgroup generated by ``ts`` is parabolic.

    It is parabolic exactly when it contains every reflection of W whose root
    lies in the span of its own roots (the fixator of its fixed space).
    """
    inside = reflection_closure(ts, n)
    roots = [t.root(n) for t in inside]
    r = _rank(roots)
    for t in all_reflections(n):
        if t not in inside and _rank(roots + [t.root(n)]) == r:
            return False
    return True


def simple_system(ts: Iterable[Reflection], n: int) -> list[Reflection]:
    """Simple reflections of the reflection subgroup generated by ``ts`` for a fixed generic functional."""
    refl = reflection_closure(ts, n)
    weight = [2 ** (n - k) for k in range(1, n + 1)]

    def positive(t: Reflection) -> tuple[int, ...]:
        v = t.root(n)
        return v if sum(a * b for a, b in zip(v, weight)) > 0 else tuple(-a for a in v)

    pos = {positive(t): t for t in refl}
    simple = []
    for v, t in pos.items():
        decomposable = any(
            tuple(a - b for a, b in zip(v, u)) in pos for u in pos if u != v
        )
        if not decomposable:
            simple.append(t)
    return sorted(simple, key=Reflection.sort_key)


def is_coxeter_element_of(w: MarkedPermutation, ts: Iterable[Reflection], cap: int | None = None) -> bool:
    """Whether ``w`` is conjugate, inside the subgroup generated by ``ts``, to a product of its simple reflections."""
    ts = list(ts)
    n = w.degree
    simple = simple_system(ts, n)
    c = product((t.perm(n) for t in simple), n)
    group = subgroup_closure((t.perm(n) for t in ts), n, cap)
    return any(compose(compose(inverse(g), c), g) == w for g in group)
