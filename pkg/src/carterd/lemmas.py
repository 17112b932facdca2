"""Closed-form reduced decompositions of the type I divisors (and one type III family).

Each form is a mix of Carter generators ``s_k`` and explicit reflections.
``printed=True`` returns the forms exactly as originally stated, including
one known slip (see ``KNOWN_SLIPS``); the default returns corrected forms.
"""

from __future__ import annotations

from .perm import Reflection
from .quasi import CarterData

KNOWN_SLIPS = {
    ("4.3", 2): "the leading run of generators stops at s_{n-2}, not s_{n-1}",
}


def _run(carter: CarterData, a: int, b: int) -> list[Reflection]:
    """s_a s_{a+1} ... s_b, empty when a > b."""
    return [carter.s(k) for k in range(a, b + 1)]


def lemma_forms(carter: CarterData, t: Reflection, printed: bool = False) -> list[tuple[str, int, list[Reflection]]]:
    """All closed forms that apply to the divisor ``w t``, as (lemma, case, factors)."""
    n, m = carter.n, carter.m
    i, j = t.i, t.j
    S = lambda a, b: _run(carter, a, b)  # noqa: E731
    P = Reflection
    B = lambda a, b: Reflection(a, b, True)  # noqa: E731
    out: list[tuple[str, int, list[Reflection]]] = []
    if not i <= m < j:
        if t.barred and j == n and i >= m + 1:
            out.append(("eq11", 1, [P(1, i + 1), B(1, i + 1)] + S(2, m) + S(i + 2, n) + S(m + 2, i)))
        return out
    if not t.barred:
        if i != m and j < n - 2:
            out.append(("4.3", 1, S(m + 2, j) + [P(i + 1, j)] + S(i + 2, m) + [B(1, m)]
                        + S(2, i) + [P(i, j + 1)] + S(j + 2, n)))
        elif i != m and j == n - 2:
            lead = S(m + 2, n - 1) if printed else S(m + 2, n - 2)
            out.append(("4.3", 2, lead + [P(i + 1, n - 2)] + S(i + 2, m) + [B(1, m)]
                        + S(2, i) + [P(i, n - 1)] + S(n, n)))
        elif i == m and j == n - 2:
            out.append(("4.3", 3, S(m + 2, n - 2) + [B(1, n - 2)] + S(2, m) + [P(m, n - 1)] + S(n, n)))
        elif i != m and j == n - 1:
            out.append(("4.3", 4, S(m + 2, n - 1) + [P(i + 1, n - 1)] + S(i + 2, m) + [B(1, m)]
                        + S(2, i) + [P(i, n)]))
        elif i == m and j == n - 1:
            out.append(("4.3", 5, S(m + 2, n - 1) + [B(1, n - 1)] + S(2, m) + [P(m, n)]))
        elif i != m and j == n:
            out.append(("4.3", 6, S(i + 2, m) + [B(1, m)] + S(2, i) + [B(i, m + 1)] + S(m + 2, n)))
        elif i == m and j == n:
            out.append(("4.3", 7, S(2, m) + S(1, 1) + S(m + 2, n)))
        return out
    if i != m and j < n:
        if j < n - 2:
            out.append(("4.4", 1, S(m + 2, j) + [B(i + 1, j)] + S(i + 2, m) + [B(1, m)]
                        + S(2, i) + [B(i, j + 1)] + S(j + 2, n)))
        elif j == n - 2:
            out.append(("4.4", 2, S(m + 2, n - 2) + [B(i + 1, n - 2)] + S(i + 2, m) + [B(1, m)]
                        + S(2, i) + [B(i, n - 1)] + S(n, n)))
        else:
            out.append(("4.4", 3, S(m + 2, n - 1) + [B(i + 1, n - 1)] + S(i + 2, m) + [B(1, m)]
                        + S(2, i) + [B(i, n)]))
    elif i == m and j < n:
        if j < n - 2:
            out.append(("4.5", 1, S(m + 2, j) + [P(1, j)] + S(2, m) + [B(m, j + 1)] + S(j + 2, n)))
        elif j == n - 2:
            out.append(("4.5", 2, S(m + 2, n - 2) + [P(1, n - 2)] + S(2, m) + [B(m, n - 1)] + S(n, n)))
        else:
            out.append(("4.5", 3, S(m + 2, n - 1) + [P(1, n - 1)] + S(2, m) + [B(m, n)]))
    elif i != m:
        out.append(("4.6", 1, S(i + 2, m) + [B(1, m)] + S(2, i) + [P(i, m + 1)] + S(m + 2, n)))
    else:
        out.append(("4.6", 2, S(2, n)))
    return out
