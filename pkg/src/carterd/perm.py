"""Signed permutations of type D.

An element of W(D_n) is stored as its monomial matrix: ``image[i-1]`` is the
signed column of the nonzero entry in row ``i``.  Products agree with the
matrix product, so ``(u * v).image[i-1]`` is ``v`` applied to ``u``'s image
with the sign carried along.

Cycle text uses ``~`` for an overline::

    >>> w = parse_cycles("(2,~1)(5,4,~3)", 5)
    >>> str(w * Reflection(1, 4).perm(5))
    '(5,~1,2,4,~3)'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


class DegreeMismatch(ValueError):
    pass


def _check_image(image: Sequence[int]) -> None:
    n = len(image)
    if n < 1:
        raise ValueError("degree must be positive")
    if sorted(abs(a) for a in image) != list(range(1, n + 1)):
        raise ValueError(f"not a signed permutation: {tuple(image)}")
    if sum(1 for a in image if a < 0) % 2:
        raise ValueError("odd number of sign changes, not in type D")


@dataclass(frozen=True)
class MarkedPermutation:
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_image(self.image)

    @classmethod
    def _raw(cls, image: tuple[int, ...]) -> MarkedPermutation:
        # skips validation; only for images produced by closed operations
        obj = object.__new__(cls)
        object.__setattr__(obj, "image", image)
        return obj

    @property
    def degree(self) -> int:
        return len(self.image)

    def __mul__(self, other: MarkedPermutation) -> MarkedPermutation:
        return compose(self, other)

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"MarkedPermutation({format_cycles(self)!r}, n={self.degree})"

    def sort_key(self) -> tuple[int, str]:
        return (reflection_length(self), format_cycles(self))


def identity(n: int) -> MarkedPermutation:
    return MarkedPermutation._raw(tuple(range(1, n + 1)))


def compose(u: MarkedPermutation, v: MarkedPermutation) -> MarkedPermutation:
    if u.degree != v.degree:
        raise DegreeMismatch(f"degrees {u.degree} and {v.degree} differ")
    vi = v.image
    return MarkedPermutation._raw(tuple(vi[a - 1] if a > 0 else -vi[-a - 1] for a in u.image))


def product(elements: Iterable[MarkedPermutation], n: int) -> MarkedPermutation:
    out = identity(n)
    for g in elements:
        out = compose(out, g)
    return out


def inverse(w: MarkedPermutation) -> MarkedPermutation:
    inv = [0] * w.degree
    for i, a in enumerate(w.image, start=1):
        inv[abs(a) - 1] = i if a > 0 else -i
    return MarkedPermutation._raw(tuple(inv))


def power(w: MarkedPermutation, k: int) -> MarkedPermutation:
    base = w if k >= 0 else inverse(w)
    out = identity(w.degree)
    for _ in range(abs(k)):
        out = compose(out, base)
    return out


def element_order(w: MarkedPermutation) -> int:
    e = identity(w.degree)
    g, k = w, 1
    while g != e:
        g = compose(g, w)
        k += 1
    return k


# ---------------------------------------------------------------- matrices

def to_matrix(w: MarkedPermutation) -> list[list[int]]:
    n = w.degree
    rows = [[0] * n for _ in range(n)]
    for i, a in enumerate(w.image):
        rows[i][abs(a) - 1] = 1 if a > 0 else -1
    return rows


def from_matrix(rows: Sequence[Sequence[int]]) -> MarkedPermutation:
    n = len(rows)
    image = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError("matrix is not square")
        nz = [(c, x) for c, x in enumerate(row, start=1) if x != 0]
        if len(nz) != 1 or nz[0][1] not in (1, -1):
            raise ValueError(f"row {i + 1} is not a signed unit row")
        c, x = nz[0]
        image.append(c * x)
    return MarkedPermutation(tuple(image))


# ------------------------------------------------------------------ cycles

def marked_cycles(w: MarkedPermutation, *, include_fixed: bool = True) -> list[tuple[int, ...]]:
    """Cycles as signed entries, each started at its minimal absolute entry."""
    seen = set()
    out = []
    for start in range(1, w.degree + 1):
        if start in seen:
            continue
        cyc = []
        i = start
        while i not in seen:
            seen.add(i)
            a = w.image[i - 1]
            cyc.append(i if a > 0 else -i)
            i = abs(a)
        if len(cyc) == 1 and cyc[0] > 0 and not include_fixed:
            continue
        out.append(tuple(cyc))
    return out


def canonical_rotation(cycle: Sequence[int], n: int) -> tuple[int, ...]:
    cyc = tuple(cycle)
    absv = [abs(a) for a in cyc]
    if len(cyc) >= 3 and n in absv:
        k = absv.index(n)
    else:
        k = absv.index(min(absv))
    return cyc[k:] + cyc[:k]


def format_entry(a: int) -> str:
    return f"~{-a}" if a < 0 else str(a)


def format_cycle(cycle: Sequence[int]) -> str:
    return "(" + ",".join(format_entry(a) for a in cycle) + ")"


def format_cycles(w: MarkedPermutation) -> str:
    cycles = marked_cycles(w, include_fixed=False)
    if not cycles:
        return "()"
    return "".join(format_cycle(canonical_rotation(c, w.degree)) for c in cycles)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycle_list(text: str) -> list[tuple[int, ...]]:
    text = text.replace(" ", "")
    cycles = []
    pos = 0
    for mt in _CYCLE_RE.finditer(text):
        if mt.start() != pos:
            raise ValueError(f"unexpected text {text[pos:mt.start()]!r}")
        pos = mt.end()
        body = mt.group(1)
        if not body:
            continue
        entries = []
        for tok in body.split(","):
            neg = tok.startswith("~")
            digits = tok[1:] if neg else tok
            if not digits.isdigit() or int(digits) == 0:
                raise ValueError(f"bad cycle entry {tok!r}")
            entries.append(-int(digits) if neg else int(digits))
        cycles.append(tuple(entries))
    if pos != len(text) or (not cycles and text not in ("", "()")):
        raise ValueError(f"cannot parse cycles from {text!r}")
    return cycles


def from_cycles(cycles: Iterable[Sequence[int]], n: int) -> MarkedPermutation:
    image = list(range(1, n + 1))
    used: set[int] = set()
    for cyc in cycles:
        for k, a in enumerate(cyc):
            i = abs(a)
            if i > n:
                raise ValueError(f"entry {i} exceeds degree {n}")
            if i in used:
                raise ValueError(f"index {i} repeated")
            used.add(i)
            nxt = abs(cyc[(k + 1) % len(cyc)])
            image[i - 1] = -nxt if a < 0 else nxt
    return MarkedPermutation(tuple(image))


def parse_cycles(text: str, n: int | None = None) -> MarkedPermutation:
    cycles = parse_cycle_list(text)
    if n is None:
        n = max((abs(a) for c in cycles for a in c), default=1)
    return from_cycles(cycles, n)


# -------------------------------------------------------------- reflections

@dataclass(frozen=True, order=True)
class Reflection:
    """The plain pair ``(i,j)`` or, with ``barred``, the pair ``(~i,~j)``."""

    i: int
    j: int
    barred: bool = False

    def __post_init__(self) -> None:
        if self.i == self.j or min(self.i, self.j) < 1:
            raise ValueError(f"invalid reflection indices {self.i}, {self.j}")
        if self.i > self.j:
            a, b = self.j, self.i
            object.__setattr__(self, "i", a)
            object.__setattr__(self, "j", b)

    @property
    def kind(self) -> str:
        return "barred" if self.barred else "plain"

    def perm(self, n: int) -> MarkedPermutation:
        if self.j > n:
            raise DegreeMismatch(f"{self} does not live in degree {n}")
        img = list(range(1, n + 1))
        sgn = -1 if self.barred else 1
        img[self.i - 1] = sgn * self.j
        img[self.j - 1] = sgn * self.i
        return MarkedPermutation._raw(tuple(img))

    def root(self, n: int) -> tuple[int, ...]:
        v = [0] * n
        v[self.i - 1] = 1
        v[self.j - 1] = 1 if self.barred else -1
        return tuple(v)

    def __str__(self) -> str:
        if self.barred:
            return f"(~{self.i},~{self.j})"
        return f"({self.i},{self.j})"

    def sort_key(self) -> tuple[int, int, int]:
        return (int(self.barred), self.i, self.j)


def parse_reflection(text: str) -> Reflection:
    cycles = parse_cycle_list(text)
    if len(cycles) != 1 or len(cycles[0]) != 2:
        raise ValueError(f"not a reflection: {text!r}")
    a, b = cycles[0]
    if (a < 0) != (b < 0):
        raise ValueError(f"not a reflection: {text!r}")
    return Reflection(abs(a), abs(b), a < 0)


def as_reflection(w: MarkedPermutation) -> Reflection:
    cycles = marked_cycles(w, include_fixed=False)
    if len(cycles) == 1 and len(cycles[0]) == 2:
        a, b = cycles[0]
        if (a < 0) == (b < 0):
            return Reflection(abs(a), abs(b), a < 0)
    raise ValueError(f"{w} is not a reflection")


@lru_cache(maxsize=None)
def _all_reflections(n: int) -> tuple[Reflection, ...]:
    plain = [Reflection(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    barred = [Reflection(i, j, True) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return tuple(plain + barred)


def all_reflections(n: int) -> tuple[Reflection, ...]:
    """All n(n-1) reflections: plain pairs first, then barred, each lexicographic."""
    if n < 2:
        raise ValueError("type D needs n >= 2")
    return _all_reflections(n)


@dataclass(frozen=True)
class ReflectionTuple:
    degree: int
    factors: tuple[Reflection, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        for t in self.factors:
            if t.j > self.degree:
                raise DegreeMismatch(f"{t} does not live in degree {self.degree}")

    def product(self) -> MarkedPermutation:
        return product((t.perm(self.degree) for t in self.factors), self.degree)

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return "".join(str(t) for t in self.factors)


# ----------------------------------------------------------------- lengths

def reflection_length(w: MarkedPermutation) -> int:
    """n minus the number of cycles (fixed points included) with evenly many overlines."""
    even = sum(1 for c in marked_cycles(w) if sum(1 for a in c if a < 0) % 2 == 0)
    return w.degree - even


def conjugate(t: Reflection, g: MarkedPermutation) -> Reflection:
    """``t^g = g^-1 t g``."""
    n = g.degree
    return as_reflection(compose(compose(inverse(g), t.perm(n)), g))


def order_of_product(t: Reflection, u: Reflection, n: int | None = None) -> int:
    if n is None:
        n = max(t.j, u.j)
    return element_order(compose(t.perm(n), u.perm(n)))
