"""Set construction, pair/triple verification, ranking and the z-transform."""

from __future__ import annotations

from itertools import combinations
from math import prod
from typing import Iterable, Tuple

from .arith import factorize, square_root
from .errors import DegenerateError, DomainError, ValidationError
from .models import SquareSet
from .results import PairEntry, PairReport, TripleEntry, TripleReport
from .utils import parse_int_list


def make_set(values: Iterable[int]) -> SquareSet:
    return SquareSet.from_values(values)


def parse_set(literal: str) -> SquareSet:
    """Parse ``"-40,65,104,296"`` into a set."""
    return make_set(parse_int_list(literal, label="set element"))


def solve_two(p: int, x: int) -> SquareSet:
    """``{x, p^2 - x}``: every square has a one-parameter family of pairs."""
    return make_set([x, p * p - x])


def verify_pairs(s: SquareSet) -> PairReport:
    entries = []
    for i, j in combinations(range(s.n), 2):
        total = s.elements[i] + s.elements[j]
        root = square_root(total)
        entries.append(PairEntry(i, j, total, root is not None, root))
    return PairReport(s, tuple(entries))


def verify_triples(s: SquareSet) -> TripleReport:
    if s.n != 5:
        raise DomainError(f"Triple verification needs 5 elements, got {s.n}.")
    entries = []
    for i, j, k in combinations(range(s.n), 3):
        total = s.elements[i] + s.elements[j] + s.elements[k]
        root = square_root(total)
        entries.append(TripleEntry(i, j, k, total, root is not None, root))
    return TripleReport(s, tuple(entries))


def l1_norm(s: SquareSet) -> int:
    return s.l1


def rank_key(s: SquareSet) -> Tuple[int, Tuple[int, ...]]:
    """Smaller l1 first; ties by element tuple."""
    return (s.l1, s.elements)


def compare_sets(a: SquareSet, b: SquareSet) -> int:
    if a.n != b.n:
        raise DomainError(f"Cannot rank sets of sizes {a.n} and {b.n}.")
    left, right = rank_key(a), rank_key(b)
    return (left > right) - (left < right)


def _checked(values: Iterable[int], what: str) -> SquareSet:
    try:
        return make_set(values)
    except ValidationError as exc:
        raise DegenerateError(f"{what} is degenerate: {exc}") from exc


def pairs_to_triples(s: SquareSet) -> SquareSet:
    """Map ``x_i`` to ``S/3 - x_i``; triples of the result sum to complementary pairs.

    When ``S`` is not divisible by 3 the output is scaled by 9, i.e. ``3S - 9 x_i``.
    """
    if s.n != 5:
        raise DomainError(f"The z-transform needs 5 elements, got {s.n}.")
    total = s.total
    if total % 3 == 0:
        third = total // 3
        return _checked((third - x for x in s.elements), "z-transform output")
    return _checked((3 * total - 9 * x for x in s.elements), "z-transform output")


def triples_to_pairs(z: SquareSet) -> SquareSet:
    """Inverse map ``x_i = T/2 - z_i``, scaled by 4 when ``T`` is odd."""
    if z.n != 5:
        raise DomainError(f"The inverse z-transform needs 5 elements, got {z.n}.")
    total = z.total
    if total % 2 == 0:
        half = total // 2
        return _checked((half - v for v in z.elements), "inverse z-transform output")
    return _checked((2 * total - 4 * v for v in z.elements), "inverse z-transform output")


def square_reduce(s: SquareSet) -> SquareSet:
    """Divide out the largest square dividing every element."""
    content = s.content
    factors = factorize(content).factors
    k = prod(p ** (e // 2) for p, e in factors)
    if k == 1:
        return s
    k2 = k * k
    return SquareSet(tuple(x // k2 for x in s.elements))
