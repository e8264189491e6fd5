"""Straight-line bilinear programs compiled from schemes."""

from enum import StrEnum

from attrs import field, frozen, validators

from ..models import Format, Scheme
from ..ring import RingSpec


class Operand(StrEnum):
    """The input matrix a linear form reads from."""

    X = "X"
    Y = "Y"


@frozen
class InputForm:
    """A sparse linear form over the entries of one operand.

    `terms` holds `(row, col, coefficient)` triples, zero-based, in row-major order.
    """

    operand: Operand = field(converter=Operand)
    terms: tuple[tuple[int, int, int], ...] = field(converter=tuple)


@frozen
class OutputForm:
    """A sparse linear form over the products that yields the output entry (`row`, `col`).

    `terms` holds `(product, coefficient)` pairs with zero-based product indices.
    """

    row: int = field(validator=validators.ge(0))
    col: int = field(validator=validators.ge(0))
    terms: tuple[tuple[int, int], ...] = field(converter=tuple)


@frozen(kw_only=True)
class BilinearProgram:
    """The algorithm a scheme describes, ready to run on concrete matrices.

    For operands X (n×m) and Y (m×p), product t is `left_forms[t](X) * right_forms[t](Y)` and output entry (i, k) is
    `output_forms[i * p + k]` applied to the products.
    """

    n: int = field(validator=validators.ge(1))
    m: int = field(validator=validators.ge(1))
    p: int = field(validator=validators.ge(1))
    ring: RingSpec
    left_forms: tuple[InputForm, ...] = field(converter=tuple)
    right_forms: tuple[InputForm, ...] = field(converter=tuple)
    output_forms: tuple[OutputForm, ...] = field(converter=tuple)

    def __attrs_post_init__(self) -> None:
        if len(self.left_forms) != len(self.right_forms):
            raise ValueError("Every product needs exactly one left and one right form")
        if len(self.output_forms) != self.n * self.p:
            raise ValueError(f"A ({self.n},{self.m},{self.p}) program needs {self.n * self.p} output forms")

    @property
    def format(self) -> Format:
        return (self.n, self.m, self.p)

    @property
    def multiplication_count(self) -> int:
        return len(self.left_forms)


def compile_scheme(s: Scheme) -> BilinearProgram:
    """Compiles a scheme into a bilinear program.

    Product t reads X through term t's A factor and Y through its B factor. The C factor entry (k, i) of term t is the
    coefficient of product t in output entry (i, k). The scheme does not need to be valid to compile, only to compute
    the matrix product.
    """
    left = [InputForm(Operand.X, tuple(term.a.nonzero())) for term in s.terms]
    right = [InputForm(Operand.Y, tuple(term.b.nonzero())) for term in s.terms]
    outputs = [
        OutputForm(i, k, tuple((t, term.c[k, i]) for t, term in enumerate(s.terms) if term.c[k, i]))
        for i in range(s.n)
        for k in range(s.p)
    ]
    return BilinearProgram(n=s.n, m=s.m, p=s.p, ring=s.ring, left_forms=left, right_forms=right, output_forms=outputs)


def check_operand_purity(prog: BilinearProgram) -> list[str]:
    """Lists every place where a form reads from the wrong operand or outside its bounds.

    Left forms may only read X entries and right forms only Y entries; this is what keeps a program correct over
    noncommutative rings. An empty list means the program is sound.
    """
    problems: list[str] = []
    bounds = {Operand.X: (prog.n, prog.m), Operand.Y: (prog.m, prog.p)}
    for side, forms, expected in (("left", prog.left_forms, Operand.X), ("right", prog.right_forms, Operand.Y)):
        rows, cols = bounds[expected]
        for t, form in enumerate(forms):
            if form.operand != expected:
                problems.append(f"Product {t + 1}: {side} form reads {form.operand}, expected {expected}")
            problems.extend(
                f"Product {t + 1}: {side} form slot ({row + 1},{col + 1}) is outside {rows}x{cols}"
                for row, col, _ in form.terms
                if not (0 <= row < rows and 0 <= col < cols)
            )
    for form in prog.output_forms:
        problems.extend(
            f"Output ({form.row + 1},{form.col + 1}) refers to product {t + 1} of {prog.multiplication_count}"
            for t, _ in form.terms
            if not 0 <= t < prog.multiplication_count
        )
    return problems
