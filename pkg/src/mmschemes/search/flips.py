"""Flips and reductions: the moves of the flip graph.

A flip rewrites two terms that share a factor without changing the tensor they sum to. With shared factor C and
donor i:

    (A_i, B_i, C) + (A_j, B_j, C)  ->  (A_i - A_j, B_i, C) + (A_j, B_i + B_j, C)

and the same pattern shifted cyclically when the shared factor is A or B. A reduction merges two terms that share
two factors, lowering the rank by one (or two when the merged term vanishes).
"""

from collections import defaultdict
from enum import StrEnum
from itertools import combinations

from attrs import field, frozen, validators

from ..exceptions import InadmissibleMoveError
from ..models import CoeffMatrix, FactorPosition, RankOneTerm, Scheme


class FlipDirection(StrEnum):
    FORWARD = "->"  # term_i donates
    BACKWARD = "<-"  # term_j donates


def _check_distinct(instance: "FlipMove", _attribute: object, value: int) -> None:
    if value == instance.term_i:
        raise ValueError("A flip needs two distinct terms")


@frozen
class FlipMove:
    """An admissible flip between two terms of a scheme; `term_i < term_j` are zero-based term indices."""

    term_i: int = field(validator=validators.ge(0))
    term_j: int = field(validator=[validators.ge(0), _check_distinct])
    shared: FactorPosition = field(converter=FactorPosition)
    direction: FlipDirection = field(default=FlipDirection.FORWARD, converter=FlipDirection)

    @property
    def donor(self) -> int:
        return self.term_i if self.direction == FlipDirection.FORWARD else self.term_j

    @property
    def receiver(self) -> int:
        return self.term_j if self.direction == FlipDirection.FORWARD else self.term_i


def enumerate_flips(s: Scheme) -> list[FlipMove]:
    """Lists every admissible flip of a scheme.

    Each pair of distinct terms that agree exactly on a factor position contributes one move per direction. The list
    is sorted by (term_i, term_j, shared, direction).
    """
    pairs: list[tuple[int, int, FactorPosition]] = []
    for position in FactorPosition:
        groups: defaultdict[CoeffMatrix, list[int]] = defaultdict(list)
        for index, term in enumerate(s.terms):
            groups[term.factor(position)].append(index)
        for indices in groups.values():
            pairs.extend((i, j, position) for i, j in combinations(indices, 2))
    pairs.sort()
    return [FlipMove(i, j, position, direction) for i, j, position in pairs for direction in FlipDirection]


def is_admissible(s: Scheme, mv: FlipMove) -> bool:
    rank = s.rank()
    if mv.term_i >= rank or mv.term_j >= rank or mv.term_i >= mv.term_j:
        return False
    return s.terms[mv.term_i].factor(mv.shared) == s.terms[mv.term_j].factor(mv.shared)


def apply_flip(s: Scheme, mv: FlipMove) -> Scheme:
    """Applies a flip, dropping any term that becomes zero.

    Raises:
        InadmissibleMoveError: The two terms do not share the factor named by the move.
    """
    if not is_admissible(s, mv):
        raise InadmissibleMoveError(f"{mv} is not an admissible flip for a scheme of rank {s.rank()}")
    ring = s.ring
    donor = s.terms[mv.donor]
    receiver = s.terms[mv.receiver]
    first = mv.shared.next
    second = mv.shared.previous

    terms = list(s.terms)
    terms[mv.donor] = donor.with_factor(first, donor.factor(first).subtract(receiver.factor(first), ring))
    terms[mv.receiver] = receiver.with_factor(second, donor.factor(second).add(receiver.factor(second), ring))
    return s.replace_terms(terms)


def _find_reducible_pair(terms: list[RankOneTerm]) -> tuple[int, int, FactorPosition] | None:
    best: tuple[int, int] | None = None
    for free in FactorPosition:
        groups: defaultdict[tuple[CoeffMatrix, CoeffMatrix], list[int]] = defaultdict(list)
        for index, term in enumerate(terms):
            groups[(term.factor(free.next), term.factor(free.previous))].append(index)
        for indices in groups.values():
            if len(indices) >= 2 and (best is None or (indices[0], indices[1]) < best):
                best = (indices[0], indices[1])
    if best is None:
        return None
    i, j = best
    shared = [terms[i].factor(pos) == terms[j].factor(pos) for pos in FactorPosition]
    free = FactorPosition.C if all(shared) else FactorPosition(shared.index(False))
    return (i, j, free)


def reduce(s: Scheme) -> Scheme:
    """Merges terms that share two factors until no such pair remains.

    Two terms A ⊗ B ⊗ C_i and A ⊗ B ⊗ C_j become A ⊗ B ⊗ (C_i + C_j); a merged term that vanishes is dropped. The
    rank never increases and the tensor sum is unchanged. Pairs are merged in lexicographic order of their indices,
    the survivor keeping the lower index.
    """
    terms = list(s.terms)
    changed = False
    while (pair := _find_reducible_pair(terms)) is not None:
        i, j, free = pair
        merged = terms[i].with_factor(free, terms[i].factor(free).add(terms[j].factor(free), s.ring))
        del terms[j]
        if merged.has_zero_factor():
            del terms[i]
        else:
            terms[i] = merged
        changed = True
    return s.replace_terms(terms) if changed else s
