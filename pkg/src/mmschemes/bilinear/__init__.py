"""Executable bilinear programs: compilation, exact evaluation, equivalence checks and pseudocode."""

from .evaluation import ElementMatrix, evaluate, integer_action, naive_multiply
from .oracle import EquivalenceReport, check_equivalence
from .program import BilinearProgram, InputForm, Operand, OutputForm, check_operand_purity, compile_scheme
from .pseudocode import emit_pseudocode
from .rings import IntegerRing, MatrixRing, ModularRing, RingAdapter, SamplingRing

__all__ = [
    "BilinearProgram",
    "ElementMatrix",
    "EquivalenceReport",
    "InputForm",
    "IntegerRing",
    "MatrixRing",
    "ModularRing",
    "Operand",
    "OutputForm",
    "RingAdapter",
    "SamplingRing",
    "check_equivalence",
    "check_operand_purity",
    "compile_scheme",
    "emit_pseudocode",
    "evaluate",
    "integer_action",
    "naive_multiply",
]
