"""Absolute order: divisibility, intervals and lattice diagnostics."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .caps import CapExceeded, get_cap
from .perm import (
    DegreeMismatch,
    MarkedPermutation,
    Reflection,
    all_reflections,
    as_reflection,
    compose,
    format_cycles,
    identity,
    inverse,
    reflection_length,
)


def divides(v: MarkedPermutation, w: MarkedPermutation, side: str = "left") -> bool:
    if v.degree != w.degree:
        raise DegreeMismatch(f"degrees {v.degree} and {w.degree} differ")
    if side == "left":
        rest = compose(inverse(v), w)
    elif side == "right":
        rest = compose(w, inverse(v))
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return reflection_length(v) + reflection_length(rest) == reflection_length(w)


@dataclass(frozen=True)
class IntervalPoset:
    top: MarkedPermutation
    elements: tuple[MarkedPermutation, ...]
    rank: dict = field(compare=False)
    covers: tuple[tuple[int, int], ...]

    @cached_property
    def index(self) -> dict[MarkedPermutation, int]:
        return {g: k for k, g in enumerate(self.elements)}

    def __contains__(self, g: MarkedPermutation) -> bool:
        return g in self.index

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def down_sets(self) -> list[int]:
        """Bitmask of the elements below each element (itself included)."""
        below: list[list[int]] = [[] for _ in self.elements]
        for lo, hi in self.covers:
            below[hi].append(lo)
        masks = [0] * len(self.elements)
        for k in range(len(self.elements)):  # elements are sorted by rank
            m = 1 << k
            for lo in below[k]:
                m |= masks[lo]
            masks[k] = m
        return masks

    @cached_property
    def up_sets(self) -> list[int]:
        above: list[list[int]] = [[] for _ in self.elements]
        for lo, hi in self.covers:
            above[lo].append(hi)
        masks = [0] * len(self.elements)
        for k in reversed(range(len(self.elements))):
            m = 1 << k
            for hi in above[k]:
                m |= masks[hi]
            masks[k] = m
        return masks

    def leq(self, a: MarkedPermutation, b: MarkedPermutation) -> bool:
        return bool(self.down_sets[self.index[b]] >> self.index[a] & 1)

    def to_json(self) -> str:
        data = {
            "schema": "carterd.interval/1",
            "degree": self.top.degree,
            "top": format_cycles(self.top),
            "elements": [format_cycles(g) for g in self.elements],
            "rank": [self.rank[g] for g in self.elements],
            "covers": [list(c) for c in self.covers],
        }
        return json.dumps(data, indent=1)


def interval(w: MarkedPermutation, cap: int | None = None, side: str = "left") -> IntervalPoset:
    """All divisors of ``w``, found by stepping down from ``w`` one reflection at a time.

    For the left interval a divisor ``v`` of rank k-1 sits below ``u`` exactly
    when ``u = v t`` for a reflection ``t``; the right interval uses ``t v``.
    """
    limit = get_cap("interval", cap)
    n = w.degree
    refl = [t.perm(n) for t in all_reflections(n)]
    rank = {w: reflection_length(w)}
    cover_pairs: set[tuple[MarkedPermutation, MarkedPermutation]] = set()
    layer = [w]
    while layer:
        nxt: dict[MarkedPermutation, None] = {}
        for u in layer:
            r = rank[u]
            for t in refl:
                v = compose(u, t) if side == "left" else compose(t, u)
                if reflection_length(v) == r - 1:
                    cover_pairs.add((v, u))
                    if v not in rank:
                        rank[v] = r - 1
                        nxt[v] = None
                        if len(rank) > limit:
                            raise CapExceeded(f"interval exceeds cap {limit}")
        layer = list(nxt)
    elements = tuple(sorted(rank, key=lambda g: (rank[g], format_cycles(g))))
    pos = {g: k for k, g in enumerate(elements)}
    covers = tuple(sorted((pos[a], pos[b]) for a, b in cover_pairs))
    return IntervalPoset(top=w, elements=elements, rank=rank, covers=covers)


def maximal_divisors(w: MarkedPermutation) -> list[tuple[Reflection, MarkedPermutation]]:
    n = w.degree
    if reflection_length(w) != n:
        raise ValueError(f"{w} does not have full reflection length {n}")
    return [(t, compose(w, t.perm(n))) for t in all_reflections(n)]


@dataclass(frozen=True)
class LatticeReport:
    is_lattice: bool
    witness: tuple[MarkedPermutation, MarkedPermutation] | None = None
    missing: str | None = None  # "meet" or "join"

    def __bool__(self) -> bool:
        return self.is_lattice


def _bound_exists(masks: list[int], a: int, b: int, lookup: dict[int, int]) -> bool:
    return (masks[a] & masks[b]) in lookup


def is_lattice(p: IntervalPoset) -> LatticeReport:
    """Check every pair for a meet and a join; report the first failing pair.

    A meet of a and b exists iff the common lower set is itself a principal
    down-set, and dually for joins.
    """
    down, up = p.down_sets, p.up_sets
    down_lookup = {m: k for k, m in enumerate(down)}
    up_lookup = {m: k for k, m in enumerate(up)}
    size = len(p.elements)
    for a in range(size):
        for b in range(a + 1, size):
            if not _bound_exists(down, a, b, down_lookup):
                return LatticeReport(False, (p.elements[a], p.elements[b]), "meet")
            if not _bound_exists(up, a, b, up_lookup):
                return LatticeReport(False, (p.elements[a], p.elements[b]), "join")
    return LatticeReport(True)


def minimal_upper_bounds(p: IntervalPoset, a: MarkedPermutation, b: MarkedPermutation) -> list[MarkedPermutation]:
    """Minimal elements among the common upper bounds of ``a`` and ``b``."""
    common = p.up_sets[p.index[a]] & p.up_sets[p.index[b]]
    out = []
    for k, g in enumerate(p.elements):
        if common >> k & 1 and (p.down_sets[k] & common) == 1 << k:
            out.append(g)
    return out


def find_bowtie(w: MarkedPermutation, p: IntervalPoset | None = None) -> tuple[Reflection, Reflection] | None:
    """Two commuting reflections below ``w`` whose product is not below ``w``.

    The pair is only reported when it has at least two minimal common upper
    bounds, so that it really has no join.
    """
    n = w.degree
    if p is None:
        p = interval(w)
    atoms = sorted(
        (as_reflection(g) for g in p.elements if p.rank[g] == 1),
        key=Reflection.sort_key,
    )
    for k, t1 in enumerate(atoms):
        a = t1.perm(n)
        for t2 in atoms[k + 1:]:
            b = t2.perm(n)
            ab = compose(a, b)
            if ab == compose(b, a) and ab not in p and len(minimal_upper_bounds(p, a, b)) >= 2:
                return (t1, t2)
    return None


def is_balanced(w: MarkedPermutation) -> bool:
    left = interval(w, side="left")
    right = interval(w, side="right")
    return set(left.elements) == set(right.elements)


def left_divisors_bruteforce(w: MarkedPermutation, group) -> set[MarkedPermutation]:
    """Oracle: scan a full element list for left divisors of ``w``."""
    return {v for v in group if divides(v, w)}


def bfs_lengths(n: int) -> dict[MarkedPermutation, int]:
    """Word length of every element of W(D_n) over the generating set of reflections."""
    refl = [t.perm(n) for t in all_reflections(n)]
    e = identity(n)
    dist = {e: 0}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for t in refl:
            h = compose(g, t)
            if h not in dist:
                dist[h] = dist[g] + 1
                queue.append(h)
    return dist
