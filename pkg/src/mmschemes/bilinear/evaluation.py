"""Exact evaluation of bilinear programs over arbitrary, possibly noncommutative rings."""

from collections.abc import Iterable, Sequence
from typing import Any

from typeguard import TypeCheckError, check_type

from ..exceptions import RingError, StructuralError
from .program import BilinearProgram, InputForm
from .rings import RingAdapter

type ElementMatrix[T] = Sequence[Sequence[T]]


def integer_action[T](algebra: RingAdapter[T], k: int, x: T) -> T:
    """Computes k·x as signed repeated addition, by doubling."""
    if k < 0:
        k, x = -k, algebra.negate(x)
    result = algebra.zero()
    while k:
        if k & 1:
            result = algebra.add(result, x)
        k >>= 1
        if k:
            x = algebra.add(x, x)
    return result


def _check_algebra(algebra: object) -> None:
    try:
        check_type(algebra, RingAdapter)
    except TypeCheckError as ex:
        raise RingError(f"{algebra!r} is not a ring adapter: {ex}") from ex


def _check_shape(name: str, matrix: ElementMatrix[Any], rows: int, cols: int) -> None:
    if len(matrix) != rows or any(len(row) != cols for row in matrix):
        raise StructuralError(f"Operand {name} must be {rows}x{cols}")


def _combine[T](algebra: RingAdapter[T], pairs: Iterable[tuple[int, T]]) -> T:
    result = algebra.zero()
    for coeff, value in pairs:
        result = algebra.add(result, integer_action(algebra, coeff, value))
    return result


def _apply_input_form[T](algebra: RingAdapter[T], form: InputForm, operand: ElementMatrix[T]) -> T:
    return _combine(algebra, ((coeff, operand[row][col]) for row, col, coeff in form.terms))


def evaluate[T](
    prog: BilinearProgram,
    x: ElementMatrix[T],
    y: ElementMatrix[T],
    algebra: RingAdapter[T],
) -> list[list[T]]:
    """Runs a program on concrete operands.

    Every product multiplies a combination of X entries on the left by a combination of Y entries on the right, so the
    result is X·Y over any ring, commutative or not, provided the source scheme is valid and the ring's characteristic
    suits the program's ring. Coefficients of Z_p programs act through their representatives in [0, p).

    Args:
        prog (BilinearProgram): The program to run.
        x (ElementMatrix[T]): The left operand, n×m.
        y (ElementMatrix[T]): The right operand, m×p.
        algebra (RingAdapter[T]): The arithmetic of the entries.

    Raises:
        StructuralError: An operand does not have the program's shape.
        RingError: `algebra` does not implement `RingAdapter`.

    Returns:
        list[list[T]]: The n×p result.
    """
    _check_algebra(algebra)
    _check_shape("X", x, prog.n, prog.m)
    _check_shape("Y", y, prog.m, prog.p)

    products = [
        algebra.multiply(_apply_input_form(algebra, left, x), _apply_input_form(algebra, right, y))
        for left, right in zip(prog.left_forms, prog.right_forms)
    ]
    result = [[algebra.zero() for _ in range(prog.p)] for _ in range(prog.n)]
    for form in prog.output_forms:
        result[form.row][form.col] = _combine(algebra, ((coeff, products[t]) for t, coeff in form.terms))
    return result


def naive_multiply[T](x: ElementMatrix[T], y: ElementMatrix[T], algebra: RingAdapter[T]) -> list[list[T]]:
    """The classical triple loop, always multiplying an X entry on the left by a Y entry on the right.

    Raises:
        StructuralError: The operands are empty or their shapes do not conform.
    """
    _check_algebra(algebra)
    if not x or not x[0] or not y or not y[0]:
        raise StructuralError("Operands must have at least one row and one column")
    n, m, p = len(x), len(x[0]), len(y[0])
    _check_shape("X", x, n, m)
    _check_shape("Y", y, m, p)

    result = []
    for i in range(n):
        row = []
        for k in range(p):
            acc = algebra.zero()
            for j in range(m):
                acc = algebra.add(acc, algebra.multiply(x[i][j], y[j][k]))
            row.append(acc)
        result.append(row)
    return result
