"""Words, presentations and their exporters."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Mapping

from .absolute import IntervalPoset, interval
from .diagram import Diagram
from .perm import (
    MarkedPermutation,
    Reflection,
    all_reflections,
    as_reflection,
    compose,
    format_cycles,
    identity,
    inverse,
)
from .quasi import CarterData, carter_diagram, check_range

Letter = tuple[str, int]

SCHEMA = "carterd.presentation/1"


@dataclass(frozen=True)
class GeneratorWord:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple((str(g), int(e)) for g, e in self.letters)
        for g, e in letters:
            if e not in (1, -1):
                raise ValueError(f"exponent {e} is not +1 or -1")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def gen(cls, name: str, exponent: int = 1) -> GeneratorWord:
        return cls(((name, exponent),))

    @classmethod
    def of(cls, *parts: str | GeneratorWord) -> GeneratorWord:
        out = cls()
        for p in parts:
            out = out * (cls.gen(p) if isinstance(p, str) else p)
        return out

    def __mul__(self, other: GeneratorWord) -> GeneratorWord:
        return GeneratorWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> GeneratorWord:
        return GeneratorWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def conjugate(self, by: GeneratorWord) -> GeneratorWord:
        """``self^by = by^-1 self by``."""
        return by.inverse() * self * by

    def free_reduce(self) -> GeneratorWord:
        stack: list[Letter] = []
        for g, e in self.letters:
            if stack and stack[-1] == (g, -e):
                stack.pop()
            else:
                stack.append((g, e))
        return GeneratorWord(tuple(stack))

    def cyclic_reduce(self) -> GeneratorWord:
        w = list(self.free_reduce().letters)
        while len(w) >= 2 and w[0] == (w[-1][0], -w[-1][1]):
            w = w[1:-1]
        return GeneratorWord(tuple(w))

    def generators(self) -> set[str]:
        return {g for g, _ in self.letters}

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(g if e == 1 else f"{g}^-1" for g, e in self.letters)


def commutator(a: GeneratorWord, b: GeneratorWord) -> GeneratorWord:
    """``[a,b] = a b a^-1 b^-1``."""
    return a * b * a.inverse() * b.inverse()


def freely_conjugate(u: GeneratorWord, v: GeneratorWord) -> bool:
    """Whether two words are conjugate in the free group (cyclic rotations of their cyclic reductions)."""
    a, b = u.cyclic_reduce().letters, v.cyclic_reduce().letters
    if len(a) != len(b):
        return False
    if not a:
        return True
    return any(a[k:] + a[:k] == b for k in range(len(a)))


def _word(x: str | GeneratorWord) -> GeneratorWord:
    return GeneratorWord.gen(x) if isinstance(x, str) else x


_ARITY = {"braid": 2, "comm": 2, "tc": 4, "cc": 4}


def make_relator(kind: str, *gens: str | GeneratorWord) -> GeneratorWord:
    if kind not in _ARITY:
        raise ValueError(f"unknown relator kind {kind!r}")
    if len(gens) != _ARITY[kind]:
        raise TypeError(f"{kind} takes {_ARITY[kind]} generators, got {len(gens)}")
    ws = [_word(g) for g in gens]
    if kind == "braid":
        x, y = ws
        return x * y * x * (y * x * y).inverse()
    if kind == "comm":
        x, y = ws
        return x * y * (y * x).inverse()
    x, y, z, t = ws
    if kind == "tc":
        return commutator(x, y * z.inverse() * t * z * y.inverse())
    return commutator(x, y * z * t * z.inverse() * y.inverse())


def evaluate_word(word: GeneratorWord, assignment: Mapping[str, MarkedPermutation]) -> MarkedPermutation:
    if not assignment:
        raise ValueError("empty assignment")
    degrees = {g.degree for g in assignment.values()}
    if len(degrees) != 1:
        raise ValueError("assignment mixes degrees")
    out = identity(degrees.pop())
    for g, e in word.letters:
        if g not in assignment:
            raise KeyError(f"generator {g!r} is not assigned")
        img = assignment[g]
        out = compose(out, img if e == 1 else inverse(img))
    return out


# ----------------------------------------------------------- presentations

@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[GeneratorWord, ...]
    source: str
    metadata: dict = field(default_factory=dict, compare=True, hash=False)

    def __post_init__(self) -> None:
        names = set(self.generators)
        for r in self.relators:
            extra = r.generators() - names
            if extra:
                raise ValueError(f"relator {r} uses undeclared generators {sorted(extra)}")

    def to_json(self) -> str:
        data = {
            "schema": SCHEMA,
            "source": self.source,
            "metadata": self.metadata,
            "generators": list(self.generators),
            "relators": [[[g, e] for g, e in r.letters] for r in self.relators],
        }
        return json.dumps(data, indent=1, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> Presentation:
        data = json.loads(text)
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {data.get('schema')!r}")
        rels = tuple(GeneratorWord(tuple((g, e) for g, e in r)) for r in data["relators"])
        return cls(tuple(data["generators"]), rels, data["source"], data["metadata"])


def s(i: int, e: int = 1) -> GeneratorWord:
    return GeneratorWord.gen(f"s{i}", e)


def _diagram_relators(d: Diagram) -> list[GeneratorWord]:
    rels = []
    edges = {(a, b) for a, b, _ in d.edges}
    names = d.vertices
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            kind = "braid" if (a, b) in edges else "comm"
            rels.append(make_relator(kind, names[a], names[b]))
    return rels


def claimed_tc_relator(m: int) -> GeneratorWord:
    """``[s1, s_m^-1 s_{m+1} s_{m+2} s_{m+1}^-1 s_m]``."""
    return commutator(s(1), s(m, -1) * s(m + 1) * s(m + 2) * s(m + 1, -1) * s(m))


def cycle_commutator_relator(m: int) -> GeneratorWord:
    """``[s_m, s_{m+1} s_{m+2} s_1 s_{m+2} s_{m+1}]`` with positive letters only."""
    return commutator(s(m), s(m + 1) * s(m + 2) * s(1) * s(m + 2) * s(m + 1))


def tc_variants(m: int) -> dict[str, GeneratorWord]:
    """The relator at each corner of the square s1, s_m, s_{m+1}, s_{m+2}."""
    a, b, c, d = 1, m, m + 1, m + 2
    return {
        f"s{a}": commutator(s(a), s(d).conjugate(s(c, -1) * s(b))),
        f"s{b}": commutator(s(b), s(a).conjugate(s(d, -1) * s(c))),
        f"s{c}": commutator(s(c), s(d).conjugate(s(a, -1) * s(b))),
        f"s{d}": commutator(s(d), s(a).conjugate(s(b, -1) * s(c))),
    }


def positive_tc_relation(m: int) -> tuple[GeneratorWord, GeneratorWord]:
    """Both sides of ``s_m P = P s_m`` with ``P = s1 s_{m+1} s_{m+2} s_m s_{m+1} s1``."""
    p = s(1) * s(m + 1) * s(m + 2) * s(m) * s(m + 1) * s(1)
    return s(m) * p, p * s(m)


def claimed_presentation(n: int, m: int) -> Presentation:
    check_range(n, m)
    rels = _diagram_relators(carter_diagram(n, m))
    if m >= 2:
        rels.append(claimed_tc_relator(m))
    gens = tuple(f"s{i}" for i in range(1, n + 1))
    return Presentation(gens, tuple(rels), "claimed", {"n": n, "m": m})


def cameron_presentation(n: int, m: int) -> Presentation:
    check_range(n, m)
    rels = [s(i) * s(i) for i in range(1, n + 1)]
    rels += _diagram_relators(carter_diagram(n, m))
    if m >= 2:
        rels.append(cycle_commutator_relator(m))
    gens = tuple(f"s{i}" for i in range(1, n + 1))
    return Presentation(gens, tuple(rels), "cameron", {"n": n, "m": m})


def claimed_with_quadratics(n: int, m: int) -> Presentation:
    base = claimed_presentation(n, m)
    quad = tuple(s(i) * s(i) for i in range(1, n + 1))
    return Presentation(base.generators, quad + base.relators, "claimed", dict(base.metadata, quadratics=True))


def dual_presentation(w: MarkedPermutation, poset: IntervalPoset | None = None) -> Presentation:
    n = w.degree
    if poset is None:
        poset = interval(w)
    refl = sorted(all_reflections(n), key=Reflection.sort_key)
    names = {t: str(t) for t in refl}
    perms = {t: t.perm(n) for t in refl}
    rels = []
    for t in refl:
        for u in refl:
            if t == u:
                continue
            tu = compose(perms[t], perms[u])
            if tu not in poset:
                continue
            v = as_reflection(compose(compose(perms[u], perms[t]), perms[u]))
            if v == t:
                if t.sort_key() < u.sort_key():
                    rels.append(make_relator("comm", names[t], names[u]))
                continue
            lhs = GeneratorWord.of(names[t], names[u])
            rhs = GeneratorWord.of(names[u], names[v])
            rels.append(lhs * rhs.inverse())
    gens = tuple(names[t] for t in refl)
    return Presentation(gens, tuple(rels), "dual", {"w": format_cycles(w), "n": n})


# ---------------------------------------------------------- reflection words

def _run(a: int, b: int, e: int) -> GeneratorWord:
    """s_a s_{a+1} ... s_b (increasing) or s_a s_{a-1} ... s_b (decreasing), each with exponent e."""
    step = 1 if a <= b else -1
    return GeneratorWord(tuple((f"s{k}", e) for k in range(a, b + step, step)))


def _empty_if(cond: bool, w: GeneratorWord) -> GeneratorWord:
    return GeneratorWord() if cond else w


def reflection_word_parts(t: Reflection, carter: CarterData, lifted: bool) -> tuple[int, GeneratorWord]:
    """Base generator index and conjugating word with ``t = s_base^word``."""
    m = carter.m
    i, j = t.i, t.j
    neg = -1 if lifted else 1
    if not t.barred:
        return j, _empty_if(j - 1 < i + 1, _run(j - 1, i + 1, neg))
    if i <= m < j:
        return 1, _empty_if(j < m + 2, _run(m + 2, j, 1)) * _empty_if(m < i + 1, _run(m, i + 1, neg))
    if j <= m:
        return 1, (_empty_if(m < i + 1, _run(m, i + 1, neg)) * s(m + 1)
                   * _empty_if(m < j + 1, _run(m, j + 1, neg)))
    return 1, (_empty_if(j < m + 2, _run(m + 2, j, 1)) * s(m + 1, neg)
               * _empty_if(i < m + 2, _run(m + 2, i, 1)))


def reflection_word(t: Reflection, carter: CarterData, lifted: bool = True) -> GeneratorWord:
    base, conj = reflection_word_parts(t, carter, lifted)
    return s(base).conjugate(conj)


def format_conjugate(base: int, conj: GeneratorWord) -> str:
    if not conj.letters:
        return f"s{base}"
    return f"s{base}^{{{conj}}}"


# ---------------------------------------------------------------- exporters

_IDENT = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


def _identifiers(p: Presentation) -> tuple[list[str], bool]:
    if all(_IDENT.match(g) for g in p.generators):
        return list(p.generators), False
    return [f"x{k}" for k in range(1, len(p.generators) + 1)], True


def _gap_word(word: GeneratorWord, names: Mapping[str, str]) -> str:
    if not word.letters:
        return "One(F)"
    return "*".join(names[g] if e == 1 else f"{names[g]}^-1" for g, e in word.letters)


def to_gap(p: Presentation) -> str:
    idents, renamed = _identifiers(p)
    names = dict(zip(p.generators, idents))
    lines = [f"# source: {p.source}; " + ", ".join(f"{k}={v}" for k, v in sorted(p.metadata.items()))]
    if renamed:
        for g, x in names.items():
            lines.append(f"# {x} = {g}")
    lines.append("F := FreeGroup(" + ", ".join(f'"{x}"' for x in idents) + ");")
    for k, x in enumerate(idents, start=1):
        lines.append(f"{x} := F.{k};")
    lines.append("rels := [")
    body = [f"  {_gap_word(r, names)}" for r in p.relators]
    lines.append(",\n".join(body))
    lines.append("];")
    lines.append("G := F / rels;")
    return "\n".join(lines) + "\n"


def to_kbmag(p: Presentation) -> str:
    idents, renamed = _identifiers(p)
    names = dict(zip(p.generators, idents))
    inv = {x: x.upper() if x.upper() != x else x + "_inv" for x in idents}
    order = []
    for x in idents:
        order += [x, inv[x]]
    inverses = []
    for x in idents:
        inverses += [inv[x], x]

    def word(w: GeneratorWord) -> str:
        if not w.letters:
            return "IdWord"
        return "*".join(names[g] if e == 1 else inv[names[g]] for g, e in w.letters)

    lines = []
    if renamed:
        for g, x in names.items():
            lines.append(f"# {x} = {g}")
    lines.append("_RWS := rec(")
    lines.append('  isRWS := true,')
    lines.append('  ordering := "shortlex",')
    lines.append("  generatorOrder := [" + ",".join(order) + "],")
    lines.append("  inverses := [" + ",".join(inverses) + "],")
    lines.append("  equations := [")
    eqs = [f"    [{word(r)},IdWord]" for r in p.relators]
    lines.append(",\n".join(eqs))
    lines.append("  ]")
    lines.append(");")
    return "\n".join(lines) + "\n"


def export(item, fmt: str) -> str:
    if isinstance(item, Presentation):
        if fmt == "gap":
            return to_gap(item)
        if fmt == "kbmag":
            return to_kbmag(item)
        if fmt == "json":
            return item.to_json() + "\n"
    elif isinstance(item, Diagram):
        if fmt == "dot":
            return item.to_dot()
        if fmt == "json":
            return item.to_json() + "\n"
    elif isinstance(item, IntervalPoset):
        if fmt == "json":
            return item.to_json() + "\n"
    raise ValueError(f"cannot export {type(item).__name__} as {fmt!r}")
