"""Coset enumeration (HLT strategy, no lookahead)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .caps import get_cap
from .presentation import GeneratorWord, Presentation

COMPLETE = "complete"
CAPPED = "capped"


@dataclass(frozen=True)
class CosetTable:
    generators: tuple[str, ...]
    rows: tuple[tuple[int | None, ...], ...]  # columns: g1, g1^-1, g2, g2^-1, ...
    status: str
    defined: int  # total cosets defined during the run

    @property
    def index(self) -> int | None:
        return len(self.rows) if self.status == COMPLETE else None

    def column(self, gen: str, exponent: int = 1) -> int:
        return 2 * self.generators.index(gen) + (0 if exponent == 1 else 1)

    def act(self, coset: int, word: GeneratorWord) -> int:
        for g, e in word.letters:
            coset = self.rows[coset][self.column(g, e)]
        return coset


class _Enumerator:
    def __init__(self, ngens: int, limit: int):
        self.ncols = 2 * ngens
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.parent = [0]
        self.limit = limit
        self.capped = False

    @staticmethod
    def inv(c: int) -> int:
        return c ^ 1

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def define(self, c: int, x: int) -> bool:
        if len(self.table) >= self.limit:
            self.capped = True
            return False
        new = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(new)
        self.table[c][x] = new
        self.table[new][self.inv(x)] = c
        return True

    def merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            self.parent[hi] = lo
            queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self.merge(a, b, queue)
        k = 0
        while k < len(queue):
            g = queue[k]
            k += 1
            for x in range(self.ncols):
                d = self.table[g][x]
                if d is None:
                    continue
                xi = self.inv(x)
                if self.table[d][xi] == g:
                    self.table[d][xi] = None
                mu, nu = self.rep(g), self.rep(d)
                if self.table[mu][x] is not None:
                    self.merge(nu, self.table[mu][x], queue)
                elif self.table[nu][xi] is not None:
                    self.merge(mu, self.table[nu][xi], queue)
                else:
                    self.table[mu][x] = nu
                    self.table[nu][xi] = mu

    def scan_and_fill(self, c: int, word: Sequence[int]) -> None:
        f, b = c, c
        i, j = 0, len(word) - 1
        table = self.table
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][self.inv(word[j])] is not None:
                b = table[b][self.inv(word[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][self.inv(word[i])] = f
                return
            if not self.define(f, word[i]):
                return


def _encode(word: GeneratorWord, gens: Sequence[str]) -> list[int]:
    pos = {g: k for k, g in enumerate(gens)}
    return [2 * pos[g] + (0 if e == 1 else 1) for g, e in word.letters]


def todd_coxeter(p: Presentation, subgroup_gens: Sequence[GeneratorWord] = (), cap: int | None = None) -> CosetTable:
    """Enumerate the cosets of the subgroup generated by ``subgroup_gens``.

    When the cap is reached the table is returned with status ``capped`` and
    no index.
    """
    limit = get_cap("cosets", cap)
    gens = p.generators
    rels = [_encode(r.free_reduce(), gens) for r in p.relators]
    rels = [r for r in rels if r]
    sub = [_encode(h, gens) for h in subgroup_gens]
    en = _Enumerator(len(gens), limit)
    for h in sub:
        if h:
            en.scan_and_fill(0, h)
    c = 0
    while c < len(en.table) and not en.capped:
        if en.alive(c):
            for r in rels:
                en.scan_and_fill(c, r)
                if not en.alive(c) or en.capped:
                    break
            if en.alive(c) and not en.capped:
                for x in range(en.ncols):
                    if en.table[c][x] is None:
                        if not en.define(c, x):
                            break
        c += 1
    live = [k for k in range(len(en.table)) if en.alive(k)]
    if en.capped:
        return CosetTable(tuple(gens), (), CAPPED, len(en.table))
    renum = {k: idx for idx, k in enumerate(live)}
    rows = tuple(tuple(renum[en.rep(x)] if x is not None else None for x in en.table[k]) for k in live)
    table = CosetTable(tuple(gens), rows, COMPLETE, len(en.table))
    _check_closed(table, rels, sub)
    return table


def _check_closed(table: CosetTable, rels: list[list[int]], sub: list[list[int]]) -> None:
    for k, row in enumerate(table.rows):
        if any(x is None for x in row):
            raise AssertionError(f"coset {k} has undefined entries")
        for r in rels:
            c = k
            for x in r:
                c = table.rows[c][x]
            if c != k:
                raise AssertionError(f"relator does not close at coset {k}")
    for h in sub:
        c = 0
        for x in h:
            c = table.rows[c][x]
        if c != 0:
            raise AssertionError("subgroup generator does not fix the trivial coset")
