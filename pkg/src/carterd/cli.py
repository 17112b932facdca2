"""Command-line front end.

Exit status: 0 success, 1 a verification failed, 2 usage error, 3 an
enumeration cap was hit (see ``CARTER_CAP``).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .absolute import find_bowtie, interval, is_lattice, maximal_divisors
from .caps import CapExceeded
from .coset import todd_coxeter
from .diagram import classify_diagram
from .divisors import decomposition_diagram, divisor_row, table_order
from .hurwitz import orbit_partition, reduced_decompositions
from .perm import MarkedPermutation, format_cycles, parse_cycles, reflection_length
from .presentation import (
    Presentation,
    cameron_presentation,
    claimed_presentation,
    claimed_with_quadratics,
    dual_presentation,
    export,
)
from .quasi import is_quasi_coxeter, parabolic_closure, representative, signed_cycle_type
from .verify import (
    Report,
    compare_with_golden,
    load_golden,
    pmap,
    render_tables,
    reproduce_tables,
    verify_lemma_decompositions,
    verify_lifts,
    verify_preparation,
    verify_presentation_order,
    verify_procedures,
)

FORMATS = ("text", "json", "dot", "gap", "kbmag")
VERIFY_SCOPE = (
    "relators are checked to hold in W only; whether one relator follows from the others "
    "is not decided here (export with --format kbmag or gap for that)"
)


class UsageError(Exception):
    pass


def _dump(data) -> str:
    return json.dumps(data, indent=1, sort_keys=True) + "\n"


def _element(args) -> MarkedPermutation:
    if args.element is not None:
        if args.n is None:
            raise UsageError("--element needs --n")
        try:
            return parse_cycles(args.element, args.n)
        except ValueError as err:
            raise UsageError(f"bad --element: {err}") from err
    return representative(args.n, args.m).w


def _need_formats(args, allowed: Sequence[str]) -> None:
    if args.format not in allowed:
        raise UsageError(f"{args.prog_name} supports --format {'/'.join(allowed)}, not {args.format}")


# ------------------------------------------------------------ subcommands

def cmd_repr(args) -> str:
    _need_formats(args, ("text", "json"))
    c = representative(args.n, args.m)
    word = [f"s{i}" for i in c.word_order()]
    gens = {f"s{i}": str(t) for i, t in enumerate(c.generators, start=1)}
    if args.format == "json":
        return _dump({"n": c.n, "m": c.m, "w": format_cycles(c.w), "word": word, "generators": gens,
                      "signed_cycle_type": [list(x) for x in signed_cycle_type(c.w)],
                      "diagram": classify_diagram(c.diagram).label})
    lines = [f"w = {format_cycles(c.w)}", f"w = {' '.join(word)}"]
    lines += [f"{k} = {v}" for k, v in gens.items()]
    lines.append(f"signed cycle type: {signed_cycle_type(c.w)}")
    lines.append(f"Carter diagram: {classify_diagram(c.diagram).label}")
    return "\n".join(lines) + "\n"


def cmd_interval(args) -> str:
    _need_formats(args, ("text", "json"))
    w = _element(args)
    p = interval(w)
    if args.format == "json":
        return export(p, "json")
    by_rank: dict[int, list[str]] = {}
    for g in p.elements:
        by_rank.setdefault(p.rank[g], []).append(format_cycles(g))
    lines = [f"interval [1, {format_cycles(w)}]: {len(p)} elements, {len(p.covers)} cover relations"]
    for r in sorted(by_rank):
        lines.append(f"rank {r}: {len(by_rank[r])}")
        if args.verbose:
            lines += [f"  {g}" for g in by_rank[r]]
    return "\n".join(lines) + "\n"


def cmd_maxdiv(args) -> str:
    _need_formats(args, ("text", "json"))
    if args.element is not None:
        w = _element(args)
        rows = [{"reflection": str(t), "divisor": format_cycles(v)} for t, v in maximal_divisors(w)]
        if args.format == "json":
            return _dump({"w": format_cycles(w), "divisors": rows})
        return "".join(f"w{r['reflection']} = {r['divisor']}\n" for r in rows)
    c = representative(args.n, args.m)
    order = table_order(c.m, n=c.n)
    out = pmap(lambda t: divisor_row(c, t), order, args.threads)
    rows = [{
        "reflection": str(t),
        "type": r.case.divisor_type,
        "equation": r.case.equation_id,
        "divisor": format_cycles(r.case.w0),
        "decomposition": str(r.decomposition),
        "diagram": r.classification.label,
        "proper": r.proper,
    } for t, r in zip(order, out)]
    if args.format == "json":
        return _dump({"n": c.n, "m": c.m, "w": format_cycles(c.w), "divisors": rows})
    lines = [f"w = {format_cycles(c.w)}"]
    for k, r in enumerate(rows, start=1):
        flag = "  proper" if r["proper"] else ""
        lines.append(f"{k:>3}  {r['type']:<3} w{r['reflection']} = {r['divisor']}  "
                     f"{r['decomposition']}  {r['diagram']}{flag}")
    return "\n".join(lines) + "\n"


def cmd_diagram(args) -> str:
    _need_formats(args, ("text", "json", "dot"))
    if args.element is not None:
        w = _element(args)
        decs = reduced_decompositions(w)
        if not decs:
            raise UsageError("element has no reduced decomposition")
        dec = min(decs, key=lambda d: tuple(t.sort_key() for t in d.factors))
        d = decomposition_diagram(dec)
        head = f"decomposition {dec}"
    else:
        c = representative(args.n, args.m)
        d = c.diagram
        head = f"Carter diagram n={c.n} m={c.m}"
    if args.format in ("dot", "json"):
        return export(d, args.format)
    lines = [head, f"type: {classify_diagram(d).label}"]
    lines += [f"{d.vertices[a]} -- {d.vertices[b]}" for a, b, _ in d.edges]
    return "\n".join(lines) + "\n"


def _presentation(args) -> Presentation:
    if args.kind == "claimed":
        return claimed_presentation(args.n, args.m)
    if args.kind == "cameron":
        return cameron_presentation(args.n, args.m)
    if args.kind == "coxeter-quotient":
        return claimed_with_quadratics(args.n, args.m)
    return dual_presentation(_element(args))


def cmd_presentation(args) -> str:
    _need_formats(args, ("text", "json", "gap", "kbmag"))
    p = _presentation(args)
    if args.format != "text":
        return export(p, args.format)
    lines = [f"generators: {' '.join(p.generators)}", f"relators: {len(p.relators)}"]
    lines += [f"  {r}" for r in p.relators]
    if args.enumerate:
        table = todd_coxeter(p)
        if table.index is None:
            raise CapExceeded(f"coset enumeration stopped after {table.defined} cosets")
        lines.append(f"order: {table.index}")
    return "\n".join(lines) + "\n"


def cmd_lattice(args) -> str:
    _need_formats(args, ("text", "json"))
    w = _element(args)
    p = interval(w)
    rep = is_lattice(p)
    bowtie = None if rep else find_bowtie(w, p)
    if args.format == "json":
        return _dump({
            "w": format_cycles(w),
            "size": len(p),
            "lattice": rep.is_lattice,
            "witness": [format_cycles(g) for g in rep.witness] if rep.witness else None,
            "missing": rep.missing,
            "bowtie": [str(t) for t in bowtie] if bowtie else None,
        })
    lines = [f"interval [1, {format_cycles(w)}]: {len(p)} elements"]
    if rep:
        lines.append("lattice")
    else:
        a, b = rep.witness
        lines.append("not a lattice")
        lines.append(f"no {rep.missing} for {format_cycles(a)} and {format_cycles(b)}")
        if bowtie:
            lines.append(f"bowtie: {bowtie[0]} and {bowtie[1]} commute, product outside the interval")
    return "\n".join(lines) + "\n"


def cmd_hurwitz(args) -> str:
    _need_formats(args, ("text", "json"))
    w = _element(args)
    orbits = orbit_partition(w)
    total = sum(len(o) for o in orbits)
    sizes = [len(o) for o in orbits]
    full = reflection_length(w) == w.degree
    qc = full and is_quasi_coxeter(w)
    closure = len(parabolic_closure(w)) if len(orbits) == 1 else None
    if args.format == "json":
        return _dump({"w": format_cycles(w), "length": reflection_length(w), "decompositions": total,
                      "orbits": sizes, "transitive": len(orbits) == 1, "quasi_coxeter": qc,
                      "parabolic_closure_order": closure})
    lines = [
        f"w = {format_cycles(w)}, reflection length {reflection_length(w)}",
        f"reduced decompositions: {total}",
        f"Hurwitz orbits: {len(orbits)} of sizes {sizes}",
        "transitive" if len(orbits) == 1 else "not transitive",
    ]
    if full:
        lines.append("quasi-Coxeter" if qc else "not quasi-Coxeter")
    if closure is not None:
        lines.append(f"parabolic closure order: {closure}")
    return "\n".join(lines) + "\n"


def cmd_tables(args) -> str:
    _need_formats(args, ("text", "json"))
    if args.n not in (4, 5):
        raise UsageError("tables are available for --n 4 and --n 5")
    tables = reproduce_tables(args.n, args.threads)
    out = _dump(tables) if args.format == "json" else render_tables(tables)
    if args.check:
        rep = compare_with_golden(tables, load_golden(args.n))
        args.failed = not rep.passed
        if args.format == "text":
            out += "\n" + rep.to_text()
    return out


def cmd_verify(args) -> str:
    _need_formats(args, ("text", "json"))
    top = args.n if args.n is not None else 6
    reports: list[Report] = []
    for n in range(4, top + 1):
        for m in range(1, n // 2 + 1):
            reports.append(verify_preparation(n, m))
            reports.append(verify_lifts(n, m))
            reports.append(verify_procedures(n, m, args.threads))
            reports.append(verify_lemma_decompositions(n, m, args.threads))
            if args.cosets and n <= 5:
                reports.append(verify_presentation_order(n, m))
    for n in (4, 5):
        reports.append(compare_with_golden(reproduce_tables(n, args.threads), load_golden(n)))
    args.failed = not all(r.passed for r in reports)
    if args.format == "json":
        return _dump({"reports": [r.to_dict() for r in reports], "scope": VERIFY_SCOPE})
    return "".join(r.to_text(args.verbose) for r in reports) + f"note: {VERIFY_SCOPE}\n"


COMMANDS = {
    "repr": (cmd_repr, "print the class representative and its Carter generators"),
    "interval": (cmd_interval, "enumerate the divisor interval [1, w]"),
    "maxdiv": (cmd_maxdiv, "maximal divisors with reduced decompositions"),
    "diagram": (cmd_diagram, "Carter diagram or decomposition diagram"),
    "presentation": (cmd_presentation, "print or export a group presentation"),
    "lattice": (cmd_lattice, "decide whether [1, w] is a lattice"),
    "hurwitz": (cmd_hurwitz, "Hurwitz orbits on reduced decompositions"),
    "tables": (cmd_tables, "reproduce the reflection-word and maximal-divisor tables"),
    "verify": (cmd_verify, "run the built-in consistency checks"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="carterd", description="Quasi-Coxeter elements of type D.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text, description=help_text)
        sp.add_argument("--n", type=int, default=None if name == "verify" else 4, help="rank (default 4)")
        sp.add_argument("--m", type=int, default=2 if name != "verify" else None, help="class index (default 2)")
        sp.add_argument("--element", default=None, help="element in cycle notation, '~' marks a bar")
        sp.add_argument("--format", choices=FORMATS, default="text")
        sp.add_argument("--threads", type=int, default=1, help="worker threads; output is unaffected")
        sp.add_argument("-v", "--verbose", action="store_true")
        if name == "presentation":
            sp.add_argument("--kind", choices=("claimed", "cameron", "coxeter-quotient", "dual"), default="claimed")
            sp.add_argument("--enumerate", action="store_true", help="run coset enumeration and print the order")
        if name == "tables":
            sp.add_argument("--check", action="store_true", help="compare with the stored transcription")
        if name == "verify":
            sp.add_argument("--cosets", action="store_true", help="also enumerate cosets for n <= 5")
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.prog_name = args.command
    args.failed = False
    if args.threads < 1:
        print("carterd: --threads must be positive", file=stderr)
        return 2
    fn = COMMANDS[args.command][0]
    try:
        out = fn(args)
    except UsageError as err:
        print(f"carterd {args.command}: {err}", file=stderr)
        return 2
    except CapExceeded as err:
        print(f"carterd {args.command}: cap exceeded: {err}", file=stderr)
        return 3
    except ValueError as err:
        print(f"carterd {args.command}: {err}", file=stderr)
        return 2
    stdout.write(out)
    return 1 if args.failed else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
