"""The ten acceptance criteria as plain functions returning (passed, detail)."""

import io
import random
from itertools import product as cartesian

from carterd.absolute import find_bowtie, interval, is_lattice
from carterd.cli import run
from carterd.coset import todd_coxeter
from carterd.hurwitz import (
    FORWARD,
    INVERSE,
    all_reduced_decompositions,
    hurwitz_move,
    hurwitz_orbit,
    is_hurwitz_transitive,
)
from carterd.perm import (
    ReflectionTuple,
    all_reflections,
    compose,
    format_cycles,
    identity,
    parse_cycles,
    reflection_length,
)
from carterd.presentation import cameron_presentation, evaluate_word, reflection_word
from carterd.quasi import is_parabolic, parabolic_closure, representative
from carterd.verify import (
    compare_with_golden,
    load_golden,
    reproduce_tables,
    verify_lemma_decompositions,
    verify_preparation,
    verify_procedures,
)
from helpers import all_classes, random_element


def _brute_force_lengths(n):
    refl = [t.perm(n) for t in all_reflections(n)]
    dist = {identity(n): 0}
    frontier = [identity(n)]
    k = 0
    while frontier:
        k += 1
        nxt = []
        for g, t in cartesian(frontier, refl):
            h = compose(g, t)
            if h not in dist:
                dist[h] = k
                nxt.append(h)
        frontier = nxt
    return dist


def criterion_1():
    w = parse_cycles("(~1,3,4)(2,~5,6)", 6)
    dist = _brute_force_lengths(4)
    bad = [g for g, d in dist.items() if reflection_length(g) != d]
    ok = reflection_length(w) == 6 and len(dist) == 192 and not bad
    return ok, f"length {reflection_length(w)}, {len(bad)} mismatches over {len(dist)} elements"


def criterion_2():
    details = []
    ok = True
    for n in (4, 5):
        golden = load_golden(n)
        rep = compare_with_golden(reproduce_tables(n), golden)
        ok &= rep.passed
        details.append(f"n={n}: {len(rep.checks) - len(rep.failures)}/{len(rep.checks)}"
                       f" ({len(golden['errata'])} errata)")
    return ok, "; ".join(details)


def criterion_3():
    total = failed = 0
    for n, m in all_classes(8):
        for rep in (verify_procedures(n, m), verify_lemma_decompositions(n, m)):
            total += len(rep.checks)
            failed += len(rep.failures)
    return failed == 0, f"{total - failed}/{total} checks"


def criterion_4():
    parts = []
    ok = True
    for n in (4, 5, 6):
        for m in range(1, n // 2 + 1):
            w = representative(n, m).w
            p = interval(w)
            lat = is_lattice(p).is_lattice
            bow = find_bowtie(w, p)
            good = (lat and bow is None) if m == 1 else (not lat and bow is not None)
            ok &= good
            parts.append(f"({n},{m})" + ("" if good else "!"))
    return ok, " ".join(parts)


def criterion_5():
    ok = True
    for m in (1, 2):
        w = representative(4, m).w
        every = all_reduced_decompositions(w)
        ok &= hurwitz_orbit(next(iter(every))) == every
    w5 = representative(5, 2).w
    every5 = all_reduced_decompositions(w5)
    start = min(every5, key=lambda d: [t.sort_key() for t in d.factors])
    ok &= hurwitz_orbit(start) == every5
    minus = parse_cycles("(~1)(~2)(~3)(~4)", 4)
    decs = all_reduced_decompositions(minus)
    ok &= not is_hurwitz_transitive(minus)
    ok &= not any(is_parabolic(d.factors, 4) for d in decs)
    return ok, f"D5 orbit {len(every5)}; -Id non-transitive"


def criterion_6():
    bad = 0
    total = 0
    for n, m in all_classes(7):
        c = representative(n, m)
        assign = c.assignment()
        for t in all_reflections(n):
            for lifted in (False, True):
                total += 1
                bad += evaluate_word(reflection_word(t, c, lifted), assign) != t.perm(n)
    return bad == 0, f"{total - bad}/{total}"


def criterion_7():
    got = {(n, m): todd_coxeter(cameron_presentation(n, m)).index for n, m in [(4, 2), (5, 1), (5, 2)]}
    ok = got == {(4, 2): 192, (5, 1): 1920, (5, 2): 1920}
    return ok, ", ".join(f"{k}: {v}" for k, v in got.items())


def criterion_8():
    total = failed = 0
    for n, m in all_classes(8):
        rep = verify_preparation(n, m)
        total += len(rep.checks)
        failed += len(rep.failures)
    return failed == 0, f"{total - failed}/{total}"


def criterion_9():
    rng = random.Random(9)
    moves_ok = True
    for _ in range(100_000):
        n = rng.randint(2, 7)
        ts = all_reflections(n)
        k = rng.randint(2, 6)
        t = ReflectionTuple(n, tuple(rng.choice(ts) for _ in range(k)))
        u = hurwitz_move(t, rng.randint(1, k - 1), rng.choice((FORWARD, INVERSE)))
        moves_ok &= u.product() == t.product()
    codec_ok = True
    for n in range(1, 9):
        for _ in range(100_000):
            w = random_element(rng, n)
            codec_ok &= parse_cycles(format_cycles(w), n) == w
    closure_ok = True
    for m in (1, 2):
        w = representative(4, m).w
        closure_ok &= len({parabolic_closure(w, d) for d in all_reduced_decompositions(w)}) == 1
    return moves_ok and codec_ok and closure_ok, f"moves {moves_ok}, codec {codec_ok}, closure {closure_ok}"


DETERMINISM_RUNS = [
    ["repr", "--n", "5", "--m", "2"],
    ["interval", "--n", "5", "--m", "2", "--format", "json"],
    ["maxdiv", "--n", "6", "--m", "3"],
    ["diagram", "--n", "6", "--m", "2", "--format", "dot"],
    ["presentation", "--n", "5", "--m", "2", "--format", "gap"],
    ["presentation", "--n", "4", "--m", "2", "--kind", "dual", "--format", "kbmag"],
    ["lattice", "--n", "4", "--m", "2"],
    ["hurwitz", "--n", "4", "--m", "2"],
    ["tables", "--n", "5", "--check"],
    ["verify", "--n", "6"],
]


def _capture(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue().encode()


def criterion_10():
    bad = []
    for argv in DETERMINISM_RUNS:
        ref = _capture(argv)
        if ref[0] != 0 or _capture(argv) != ref or _capture(argv + ["--threads", "4"]) != ref:
            bad.append(argv[0])
    return not bad, f"{len(DETERMINISM_RUNS) - len(bad)}/{len(DETERMINISM_RUNS)} subcommands stable"


CRITERIA = {k: globals()[f"criterion_{k}"] for k in range(1, 11)}
