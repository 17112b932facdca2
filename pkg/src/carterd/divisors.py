"""Maximal divisors of the class representatives and their reduced decompositions.

Every maximal divisor ``w t`` of ``w = (m,...,~1)(n,...,~(m+1))`` falls into
one of eleven closed forms.  Forms 1-5 are single n-cycles (type I), forms
6-8 and 9-11 are products of three cycles (types II and III).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .diagram import Classification, Diagram, classify_diagram
from .perm import (
    MarkedPermutation,
    Reflection,
    ReflectionTuple,
    all_reflections,
    compose,
    format_cycle,
    from_cycles,
    marked_cycles,
)
from .quasi import CarterData, generator_diagram


class ClosedFormMismatch(AssertionError):
    pass


# A closed form is a list of cycles; each cycle is a list of runs
# (start, stop, barred) read start, start-1, ..., stop with the bar on stop.

def _expand(cycles: Sequence[Sequence[tuple[int, int, bool]]]) -> list[tuple[int, ...]]:
    out = []
    for runs in cycles:
        entries: list[int] = []
        for a, b, bar in runs:
            if a < b:
                if bar:
                    raise ClosedFormMismatch(f"overline on an empty run {a}..{b}")
                continue
            run = list(range(a, b - 1, -1))
            if bar:
                run[-1] = -run[-1]
            entries.extend(run)
        if entries:
            out.append(tuple(entries))
    return out


def closed_form(n: int, m: int, t: Reflection) -> tuple[int, list[tuple[int, ...]]]:
    """Equation number and cycles of ``w t`` as written in the closed forms."""
    i, j, bar = t.i, t.j, t.barred
    if i <= m < j:
        if not bar:
            return 1, _expand([[(n, j + 1, False), (i, 1, True), (m, i + 1, False), (j, m + 1, True)]])
        if i != m and j != n:
            return 2, _expand([[(n, j + 1, True), (i, 1, True), (m, i + 1, True), (j, m + 1, True)]])
        if i == m and j != n:
            return 3, _expand([[(n, j + 1, True), (m, 1, False), (j, m + 1, True)]])
        if i != m:
            return 4, _expand([[(n, m + 1, False), (i, 1, True), (m, i + 1, True)]])
        return 5, _expand([[(n, 1, False)]])
    if j <= m:
        if not bar:
            return 6, _expand([[(m, j + 1, False), (i, 1, True)],
                               [(i + 1, i + 1, False), (j, i + 2, False)],
                               [(n, m + 1, True)]])
        if j != m:
            return 7, _expand([[(m, j + 1, True), (i, 1, True)],
                               [(i + 1, i + 1, True), (j, i + 2, False)],
                               [(n, m + 1, True)]])
        return 8, _expand([[(i, 1, False)],
                           [(i + 1, i + 1, True), (m, i + 2, False)],
                           [(n, m + 1, True)]])
    if not bar:
        return 9, _expand([[(m, 1, True)], [(n, j + 1, False), (i, m + 1, True)], [(j, i + 1, False)]])
    if j != n:
        return 10, _expand([[(m, 1, True)], [(n, j + 1, True), (i, m + 1, True)], [(j, i + 1, True)]])
    return 11, _expand([[(m, 1, True)], [(i, m + 1, False)], [(n, i + 1, True)]])


def _overlines(cycle: Sequence[int]) -> int:
    return sum(1 for a in cycle if a < 0)


def _rotate_to_n(cycle: Sequence[int], n: int) -> tuple[int, ...]:
    cyc = tuple(cycle)
    absv = [abs(a) for a in cyc]
    if len(cyc) >= 3 and n in absv:
        k = absv.index(n)
        return cyc[k:] + cyc[:k]
    return cyc


def _rotate_bar_last(cycle: Sequence[int]) -> tuple[int, ...]:
    cyc = tuple(cycle)
    bars = [k for k, a in enumerate(cyc) if a < 0]
    if len(bars) != 1:
        return cyc
    k = bars[0] + 1
    return cyc[k:] + cyc[:k]


@dataclass(frozen=True)
class DivisorCase:
    divisor_type: str  # "I", "II" or "III"
    equation_id: int
    t: Reflection
    w0: MarkedPermutation
    cycles: tuple[tuple[int, ...], ...]  # the single cycle, or (x, y, z)

    @property
    def i(self) -> int:
        return self.t.i

    @property
    def j(self) -> int:
        return self.t.j

    @property
    def x(self) -> tuple[int, ...]:
        return self.cycles[0]

    @property
    def y(self) -> tuple[int, ...]:
        return self.cycles[1]

    @property
    def z(self) -> tuple[int, ...]:
        return self.cycles[2]

    @property
    def written(self) -> str:
        return "".join(format_cycle(c) for c in self.cycles)


def divisor_type(m: int, t: Reflection) -> str:
    if t.i <= m < t.j:
        return "I"
    if t.j <= m:
        return "II"
    return "III"


def three_cycle_split(cycles: Sequence[Sequence[int]], n: int) -> tuple[tuple[int, ...], ...]:
    """Order the cycles of a type II/III divisor as (x, y, z).

    z carries evenly many overlines.  x is the other cycle through n when
    there is one, otherwise the one with the larger maximal entry.
    """
    if len(cycles) != 3:
        raise ValueError(f"expected three cycles, got {len(cycles)}")
    even = [c for c in cycles if _overlines(c) % 2 == 0]
    odd = [c for c in cycles if _overlines(c) % 2 == 1]
    if len(even) != 1 or len(odd) != 2:
        raise ValueError("need exactly one cycle with evenly many overlines")
    odd.sort(key=lambda c: (n not in map(abs, c), -max(map(abs, c))))
    x, y = (_rotate_to_n(_rotate_bar_last(c), n) for c in odd)
    z = _rotate_to_n(even[0], n)
    return (x, y, z)


def classify_divisor(carter: CarterData, t: Reflection) -> DivisorCase:
    n, m = carter.n, carter.m
    eq, cycles = closed_form(n, m, t)
    # complete with fixed points so that every index is covered
    covered = {abs(a) for c in cycles for a in c}
    cycles += [(k,) for k in range(1, n + 1) if k not in covered]
    w0 = from_cycles(cycles, n)
    direct = compose(carter.w, t.perm(n))
    if w0 != direct:
        raise ClosedFormMismatch(f"closed form {eq} for {t} gives {w0}, product gives {direct}")
    kind = divisor_type(m, t)
    if kind == "I":
        if len(cycles) != 1:
            raise ClosedFormMismatch(f"type I divisor {w0} is not an n-cycle")
        shaped = (_rotate_to_n(cycles[0], n),)
    else:
        shaped = three_cycle_split(cycles, n)
    return DivisorCase(kind, eq, t, w0, shaped)


# ------------------------------------------------------------- procedures

def peel(cycle: Sequence[int]) -> list[Reflection]:
    """Reflections applied while stripping a cycle from the right, in order of use.

    At step k the pair of the k-th and (k+1)-th entries is used; when the
    k-th entry is overlined the barred pair is used and the mark of the last
    entry flips.
    """
    entries = list(cycle)
    used = []
    for k in range(len(entries) - 1):
        p, q = abs(entries[k]), abs(entries[k + 1])
        if entries[k] < 0:
            used.append(Reflection(p, q, True))
            entries[-1] = -entries[-1]
        else:
            used.append(Reflection(p, q))
    return used


def reduce_type_I(cycle: Sequence[int] | MarkedPermutation, n: int | None = None) -> ReflectionTuple:
    """Reduced decomposition of a single marked cycle: peeled reflections in reverse order.

    A MarkedPermutation argument must be one cycle through every index; it
    is read starting from n.
    """
    if isinstance(cycle, MarkedPermutation):
        n = cycle.degree
        cycles = marked_cycles(cycle)
        if len(cycles) != 1:
            raise ValueError(f"{cycle} is not a single n-cycle")
        cycle = _rotate_to_n(cycles[0], n)
    cycle = tuple(cycle)
    if len({abs(a) for a in cycle}) != len(cycle) or 0 in cycle:
        raise ValueError(f"malformed cycle {cycle}")
    if _overlines(cycle) % 2:
        raise ValueError(f"cycle {format_cycle(cycle)} has an odd number of overlines")
    if n is None:
        n = max(abs(a) for a in cycle)
    return ReflectionTuple(n, tuple(reversed(peel(cycle))))


def reduce_type_II_III(case: DivisorCase) -> ReflectionTuple:
    if case.divisor_type == "I":
        raise ValueError("type I divisors are handled by reduce_type_I")
    x, y, z = case.cycles
    n = case.w0.degree
    rz, rx, ry = peel(z), peel(x), peel(y)
    u, v = sorted((abs(x[-1]), abs(y[-1])))
    head = [Reflection(u, v), Reflection(u, v, True)]
    factors = head + ry[::-1] + rx[::-1] + rz[::-1]
    return ReflectionTuple(n, tuple(factors))


def decompose_divisor(carter: CarterData, t: Reflection) -> tuple[DivisorCase, ReflectionTuple]:
    case = classify_divisor(carter, t)
    if case.divisor_type == "I":
        dec = reduce_type_I(case.cycles[0], carter.n)
    else:
        dec = reduce_type_II_III(case)
    return case, dec


def decomposition_diagram(ts: ReflectionTuple) -> Diagram:
    return generator_diagram(ts.factors, ts.degree)


@dataclass(frozen=True)
class DivisorRow:
    case: DivisorCase
    decomposition: ReflectionTuple
    diagram: Diagram
    classification: Classification

    @property
    def proper(self) -> bool:
        return self.classification.proper


def divisor_row(carter: CarterData, t: Reflection) -> DivisorRow:
    case, dec = decompose_divisor(carter, t)
    dia = decomposition_diagram(dec)
    return DivisorRow(case, dec, dia, classify_diagram(dia))


def table_order(m: int, ts: Sequence[Reflection] | None = None, n: int | None = None) -> list[Reflection]:
    """Reflections ordered by divisor type, then plain before barred, then by indices."""
    if ts is None:
        ts = all_reflections(n)
    rank = {"I": 0, "II": 1, "III": 2}
    return sorted(ts, key=lambda t: (rank[divisor_type(m, t)], t.barred, t.i, t.j))


def expected_shape(case: DivisorCase, n: int) -> str:
    """Diagram label predicted from the cycle lengths of a divisor."""
    if case.divisor_type == "I":
        return f"A{n - 1}"
    p, q, r = len(case.x), len(case.y), len(case.z)
    p, q = sorted((p, q))
    parts = []
    if p == 1 and q == 1:
        main = ["A1", "A1"]
    elif p == 1 and q == 2:
        main = ["A3"]
    elif p == 1:
        main = [f"D{q + 1}"]
    else:
        main = [f"Delta({p},{p + q})"]
    parts = main + ([f"A{r - 1}"] if r > 1 else [])
    return "+".join(_sort_labels(parts))


def _sort_labels(labels: list[str]) -> list[str]:
    def key(lab: str):
        if lab.startswith("Delta"):
            k = int(lab.split(",")[1][:-1])
            return (0, -k)
        return ({"D": 1, "A": 2}[lab[0]], -int(lab[1:]))

    return sorted(labels, key=key)
