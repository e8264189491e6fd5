"""Renders bilinear programs as a language-neutral straight-line listing.

    bilinear-program v1 2 2 2 7
    # ring: Z
    P_1 = (X[1,1] + X[2,2]) * (Y[1,1] + Y[2,2])
    ...
    Z[1,1] = P_1 + P_4 - P_5 + P_7
    ...
    # multiplications: 7
    # additions: 18
    # scalar multiplications: 0

Indices are 1-based. Forms are emitted exactly as stored; no common subexpressions are shared.
"""

from collections.abc import Sequence

from .program import BilinearProgram

PSEUDOCODE_VERSION = "v1"


def _render_sum(items: Sequence[tuple[str, int]]) -> str:
    if not items:
        return "0"
    parts: list[str] = []
    for index, (name, coeff) in enumerate(items):
        magnitude = abs(coeff)
        term = name if magnitude == 1 else f"{magnitude}*{name}"
        if index == 0:
            parts.append(f"-{term}" if coeff < 0 else term)
        else:
            parts.append(f"{'-' if coeff < 0 else '+'} {term}")
    return " ".join(parts)


def _count_operations(items_per_form: Sequence[Sequence[tuple[str, int]]]) -> tuple[int, int]:
    additions = sum(max(len(items) - 1, 0) for items in items_per_form)
    scalings = sum(1 for items in items_per_form for _, coeff in items if abs(coeff) != 1)
    return additions, scalings


def emit_pseudocode(prog: BilinearProgram) -> str:
    """Renders a program as text; equal programs always render to equal text."""
    left = [[(f"X[{i + 1},{j + 1}]", coeff) for i, j, coeff in form.terms] for form in prog.left_forms]
    right = [[(f"Y[{j + 1},{k + 1}]", coeff) for j, k, coeff in form.terms] for form in prog.right_forms]
    outputs = [[(f"P_{t + 1}", coeff) for t, coeff in form.terms] for form in prog.output_forms]

    lines = [
        f"bilinear-program {PSEUDOCODE_VERSION} {prog.n} {prog.m} {prog.p} {prog.multiplication_count}",
        f"# ring: {prog.ring}",
    ]
    lines.extend(
        f"P_{t + 1} = ({_render_sum(lhs)}) * ({_render_sum(rhs)})" for t, (lhs, rhs) in enumerate(zip(left, right))
    )
    lines.extend(
        f"Z[{form.row + 1},{form.col + 1}] = {_render_sum(items)}" for form, items in zip(prog.output_forms, outputs)
    )

    additions, scalings = _count_operations([*left, *right, *outputs])
    lines.extend(
        [
            f"# multiplications: {prog.multiplication_count}",
            f"# additions: {additions}",
            f"# scalar multiplications: {scalings}",
        ],
    )
    return "\n".join(lines) + "\n"
