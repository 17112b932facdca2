"""Hurwitz action of the braid group on reflection tuples."""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from .caps import CapExceeded, get_cap
from .perm import (
    MarkedPermutation,
    ReflectionTuple,
    all_reflections,
    as_reflection,
    compose,
    inverse,
    reflection_length,
)

FORWARD = "forward"
INVERSE = "inverse"


@lru_cache(maxsize=None)
def _tables(n: int):
    """Index tables for degree n: reflections, their permutations and ``conj[a][b] = t_a t_b t_a``."""
    refl = all_reflections(n)
    perms = [t.perm(n) for t in refl]
    index = {p: k for k, p in enumerate(perms)}
    conj = [[index[compose(compose(a, b), a)] for b in perms] for a in perms]
    return refl, perms, index, conj


def hurwitz_move(t: ReflectionTuple, i: int, direction: str = FORWARD) -> ReflectionTuple:
    """Braid generator sigma_i (1-based) or its inverse."""
    k = len(t.factors)
    if not 1 <= i <= k - 1:
        raise IndexError(f"position {i} out of range for a tuple of length {k}")
    n = t.degree
    f = list(t.factors)
    a, b = f[i - 1], f[i]
    pa, pb = a.perm(n), b.perm(n)
    if direction == FORWARD:
        f[i - 1], f[i] = as_reflection(compose(compose(pa, pb), pa)), a
    elif direction == INVERSE:
        f[i - 1], f[i] = b, as_reflection(compose(compose(pb, pa), pb))
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return ReflectionTuple(n, tuple(f))


def _orbit_indices(start: tuple[int, ...], conj, limit: int) -> set[tuple[int, ...]]:
    seen = {start}
    queue = deque([start])
    k = len(start)
    while queue:
        cur = queue.popleft()
        for i in range(k - 1):
            a, b = cur[i], cur[i + 1]
            fwd = cur[:i] + (conj[a][b], a) + cur[i + 2:]
            bwd = cur[:i] + (b, conj[b][a]) + cur[i + 2:]
            for nxt in (fwd, bwd):
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > limit:
                        raise CapExceeded(f"Hurwitz orbit exceeds cap {limit}")
                    queue.append(nxt)
    return seen


def hurwitz_orbit(t: ReflectionTuple, cap: int | None = None) -> set[ReflectionTuple]:
    limit = get_cap("orbit", cap)
    if limit <= 0:
        raise ValueError("cap must be positive")
    n = t.degree
    refl, perms, index, conj = _tables(n)
    start = tuple(index[f.perm(n)] for f in t.factors)
    orbit = _orbit_indices(start, conj, limit)
    return {ReflectionTuple(n, tuple(refl[k] for k in tup)) for tup in orbit}


def _check_oracle_cap(w: MarkedPermutation, max_length: int = 5, max_degree: int = 6) -> int:
    length = reflection_length(w)
    if length > max_length or w.degree > max_degree:
        raise CapExceeded(
            f"exhaustive scan limited to length <= {max_length} and degree <= {max_degree}"
        )
    return length


def all_reduced_decompositions(w: MarkedPermutation) -> set[ReflectionTuple]:
    """Exhaustive oracle: every tuple of l(w) reflections, kept when its product is ``w``.

    No pruning is applied, so for degree 5 and length 5 all 20**5 tuples are visited.
    """
    length = _check_oracle_cap(w)
    n = w.degree
    refl, perms, index, conj = _tables(n)
    out = set()
    path: list[int] = []

    def scan(g: MarkedPermutation, depth: int) -> None:
        if depth == length:
            if g == w:
                out.add(ReflectionTuple(n, tuple(refl[k] for k in path)))
            return
        for k, t in enumerate(perms):
            path.append(k)
            scan(compose(g, t), depth + 1)
            path.pop()

    scan(compose(w, inverse(w)), 0)
    return out


def reduced_decompositions(w: MarkedPermutation, cap: int | None = None) -> set[ReflectionTuple]:
    """All reduced decompositions, by recursion over reflections t with l(tw) = l(w) - 1."""
    limit = get_cap("orbit", cap)
    n = w.degree
    refl, perms, index, conj = _tables(n)
    memo: dict[MarkedPermutation, list[tuple[int, ...]]] = {}

    def rec(g: MarkedPermutation) -> list[tuple[int, ...]]:
        if g in memo:
            return memo[g]
        r = reflection_length(g)
        if r == 0:
            res = [()]
        elif r == 1:
            res = [(index[g],)]
        else:
            res = []
            for k, t in enumerate(perms):
                h = compose(t, g)
                if reflection_length(h) == r - 1:
                    res.extend((k,) + rest for rest in rec(h))
                    if len(res) > limit:
                        raise CapExceeded(f"decomposition count exceeds cap {limit}")
        memo[g] = res
        return res

    return {ReflectionTuple(n, tuple(refl[k] for k in tup)) for tup in rec(w)}


def is_hurwitz_transitive(w: MarkedPermutation, cap: int | None = None) -> bool:
    decs = reduced_decompositions(w, cap)
    first = min(decs, key=lambda d: tuple(t.sort_key() for t in d.factors))
    return hurwitz_orbit(first, cap) == decs


def orbit_partition(w: MarkedPermutation, cap: int | None = None) -> list[set[ReflectionTuple]]:
    remaining = set(reduced_decompositions(w, cap))
    orbits = []
    while remaining:
        first = min(remaining, key=lambda d: tuple(t.sort_key() for t in d.factors))
        orb = hurwitz_orbit(first, cap)
        orbits.append(orb)
        remaining -= orb
    return orbits
