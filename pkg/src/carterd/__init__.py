"""Quasi-Coxeter elements in Coxeter groups of type D: arithmetic, intervals, presentations."""

from .absolute import divides, find_bowtie, interval, is_lattice, maximal_divisors
from .caps import CapExceeded
from .diagram import Diagram, classify_diagram
from .divisors import classify_divisor, decompose_divisor, divisor_row
from .hurwitz import hurwitz_move, hurwitz_orbit, is_hurwitz_transitive, reduced_decompositions
from .perm import (
    MarkedPermutation,
    Reflection,
    ReflectionTuple,
    compose,
    format_cycles,
    parse_cycles,
    reflection_length,
)
from .presentation import (
    GeneratorWord,
    Presentation,
    cameron_presentation,
    claimed_presentation,
    dual_presentation,
    evaluate_word,
    export,
    reflection_word,
)
from .quasi import generates_full_group, is_quasi_coxeter, parabolic_closure, representative

__all__ = [
    "CapExceeded", "Diagram", "GeneratorWord", "MarkedPermutation", "Presentation", "Reflection",
    "ReflectionTuple", "cameron_presentation", "classify_diagram", "classify_divisor", "claimed_presentation",
    "compose", "decompose_divisor", "divides", "divisor_row", "dual_presentation", "evaluate_word", "export",
    "find_bowtie", "format_cycles", "generates_full_group", "hurwitz_move", "hurwitz_orbit", "interval",
    "is_hurwitz_transitive", "is_lattice", "is_quasi_coxeter", "maximal_divisors", "parabolic_closure",
    "parse_cycles", "reduced_decompositions", "reflection_length", "reflection_word", "representative",
]
