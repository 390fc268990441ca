"""Constructive searches: n=3 from squares, n=4 from two-square representations,
divisor-based extension to n+1, and the pipelines behind the result tables."""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .arith import divisor_pairs, square_root, two_square_table
from .checkpoint import append_checkpoint, read_checkpoint
from .errors import ConfigError, DegenerateError, DomainError, InvariantViolation
from .models import MAX_ELEMENTS, SquareSet
from .results import ExtensionCandidate
from .sets import make_set, pairs_to_triples, rank_key, square_reduce, verify_pairs, verify_triples
from .utils import chunk_ranges, run_partitioned

logger = logging.getLogger(__name__)

Elements = Tuple[int, ...]


@dataclass(frozen=True)
class SearchConfig:
    """Bounds and options shared by every search entry point."""

    s_min: int = 1
    s_max: int = 1000
    positive_only: bool = False
    top_k: int = 5
    require_pairs: Optional[int] = None
    anchor: Tuple[int, int] = (0, 1)
    workers: int = 1
    chunk_size: int = 25_000
    checkpoint: Optional[Path] = None

    def __post_init__(self) -> None:
        if not 1 <= self.s_min <= self.s_max:
            raise ConfigError(f"Need 1 <= s_min <= s_max, got [{self.s_min}, {self.s_max}].")
        if self.top_k < 1:
            raise ConfigError(f"top_k must be >= 1, got {self.top_k}.")
        if self.require_pairs is not None and self.require_pairs < 1:
            raise ConfigError(f"require_pairs must be >= 1, got {self.require_pairs}.")
        if self.workers < 0:
            raise ConfigError(f"workers must be >= 0, got {self.workers}.")
        if self.chunk_size < 1:
            raise ConfigError(f"chunk_size must be >= 1, got {self.chunk_size}.")
        i, j = self.anchor
        if i == j or min(i, j) < 0:
            raise ConfigError(f"Anchor must be two distinct indices, got {self.anchor}.")

    def with_updates(self, **changes) -> "SearchConfig":
        return replace(self, **changes)


# ---------------------------------------------------------------------------
# n = 3
# ---------------------------------------------------------------------------


def solve_three(p: int, q: int, r: int) -> SquareSet:
    """Set whose pair sums are ``p^2, q^2, r^2`` (all times 4 when halves are fractional)."""
    if min(p, q, r) < 0:
        raise DomainError(f"solve_three needs nonnegative roots, got ({p}, {q}, {r}).")
    pp, qq, rr = p * p, q * q, r * r
    doubled = (pp + qq - rr, pp - qq + rr, -pp + qq + rr)
    if (pp + qq + rr) % 2 == 0:
        values = [v // 2 for v in doubled]
    else:
        values = [2 * v for v in doubled]
    if len(set(values)) != 3 or 0 in values:
        raise DegenerateError(f"Squares ({p}, {q}, {r}) give a degenerate triple {values}.")
    return make_set(values)


# ---------------------------------------------------------------------------
# n = 4
# ---------------------------------------------------------------------------


def _quadruple(total: int, p: int, q: int, r: int) -> Optional[Elements]:
    """Solve x1+x2=p^2, x1+x3=q^2, x2+x3=r^2 and x4 = (S - p^2) - x3."""
    pp, qq, rr = p * p, q * q, r * r
    if (pp + qq + rr) % 2:
        return None
    x1 = (pp + qq - rr) // 2
    x2 = pp - x1
    x3 = qq - x1
    x4 = total - pp - x3
    values = (x1, x2, x3, x4)
    if 0 in values or len(set(values)) != 4:
        return None
    return tuple(sorted(values))


def _n4_chunk(part: Tuple[int, int, bool]) -> List[Elements]:
    lo, hi, positive_only = part
    found: Set[Elements] = set()
    table = two_square_table(lo, hi)
    for total in sorted(table):
        reps = table[total]
        if len(reps) < 3:
            continue
        for a, b, c in combinations(reps, 3):
            # Flipping an even number of representations relabels the same set;
            # an odd number gives the other one. Two orientations cover all.
            for r in (c[0], c[1]):
                values = _quadruple(total, a[0], b[0], r)
                if values is None:
                    continue
                if positive_only and values[0] <= 0:
                    continue
                found.add(values)
    return sorted(found)


def _scan(
    cfg: SearchConfig,
    worker: Callable[[tuple], List[Elements]],
    extra: tuple,
) -> Set[Elements]:
    start = cfg.s_min
    if cfg.checkpoint is not None:
        done = read_checkpoint(cfg.checkpoint)
        if done is not None and done >= start:
            logger.warning(
                "Resuming from %s: output covers S in [%d, %d] only, sets with S <= %d are not reported",
                cfg.checkpoint,
                done + 1,
                cfg.s_max,
                done,
            )
            start = done + 1
    ranges = chunk_ranges(start, cfg.s_max, cfg.chunk_size)
    parts = [(lo, hi) + extra for lo, hi in ranges]
    found: Set[Elements] = set()
    for (lo, hi), chunk in zip(ranges, run_partitioned(worker, parts, workers=cfg.workers)):
        found.update(chunk)
        if cfg.checkpoint is not None:
            append_checkpoint(cfg.checkpoint, hi)
        logger.debug("S in [%d, %d]: %d set(s), %d total", lo, hi, len(chunk), len(found))
    return found


def _ranked(found: Iterable[Elements], top_k: Optional[int], *, require_complete: bool = True) -> List[SquareSet]:
    sets = sorted((SquareSet(values) for values in found), key=rank_key)
    if top_k is not None:
        sets = sets[:top_k]
    if require_complete:
        for s in sets:
            if not verify_pairs(s).complete:
                raise InvariantViolation(f"Search emitted a set with a non-square pair: {s.elements}")
    return sets


def search_n4(cfg: SearchConfig) -> List[SquareSet]:
    """Every 4-set with pairwise square sums and sum in ``[s_min, s_max]``, smallest l1 first."""
    found = _scan(cfg, _n4_chunk, (cfg.positive_only,))
    logger.info("search_n4 S<=%d: %d distinct set(s)", cfg.s_max, len(found))
    return _ranked(found, cfg.top_k)


# ---------------------------------------------------------------------------
# Extension n -> n + 1
# ---------------------------------------------------------------------------


def _anchor_candidates(elements: Elements, i: int, j: int) -> Iterator[Tuple[int, int, int]]:
    """Yield ``(c, w, y)`` with ``x_i + c = w^2`` and ``x_j + c = y^2``."""
    gap = elements[j] - elements[i]
    for d, e in divisor_pairs(gap):
        if (e - d) % 2:
            continue
        y = (e + d) // 2
        w = (e - d) // 2
        yield w * w - elements[i], w, y


def _square_hits(elements: Elements, c: int) -> int:
    return sum(1 for x in elements if square_root(x + c) is not None)


def extend_set(s: SquareSet, cfg: Optional[SearchConfig] = None) -> List[ExtensionCandidate]:
    """Candidates ``c`` making both anchor sums square, filtered by total square pairs."""
    cfg = cfg or SearchConfig()
    if s.n >= MAX_ELEMENTS:
        raise DomainError(f"Cannot extend a set of {s.n} elements.")
    i, j = cfg.anchor
    if not (0 <= i < s.n and 0 <= j < s.n):
        raise DomainError(f"Anchor {cfg.anchor} out of range for {s.n} elements.")
    if s.elements[j] <= s.elements[i]:
        raise DomainError(f"Anchor needs x_j > x_i, got {s.elements[i]} and {s.elements[j]}.")
    total_pairs = (s.n + 1) * s.n // 2
    required = total_pairs if cfg.require_pairs is None else cfg.require_pairs
    if required > total_pairs:
        raise ConfigError(f"require_pairs {required} exceeds {total_pairs} pairs.")

    base_squares = verify_pairs(s).square_pairs
    existing = set(s.elements)
    candidates: List[ExtensionCandidate] = []
    for c, w, y in _anchor_candidates(s.elements, i, j):
        if c == 0 or c in existing:
            continue
        if base_squares + _square_hits(s.elements, c) < required:
            continue
        report = verify_pairs(s.with_element(c))
        candidates.append(ExtensionCandidate(s, c, report, w, y, (i, j)))
    return candidates


def _exact_extensions(elements: Elements) -> List[Elements]:
    existing = set(elements)
    extended: List[Elements] = []
    for c, _, _ in _anchor_candidates(elements, 0, 1):
        if c == 0 or c in existing:
            continue
        if all(square_root(x + c) is not None for x in elements[2:]):
            extended.append(tuple(sorted(elements + (c,))))
    return extended


def _n5_chunk(part: Tuple[int, int, bool]) -> List[Elements]:
    lo, hi, positive_only = part
    found: Set[Elements] = set()
    for quad in _n4_chunk((lo, hi, positive_only)):
        for values in _exact_extensions(quad):
            if positive_only and values[0] <= 0:
                continue
            found.add(values)
    return sorted(found)


def search_n5(cfg: SearchConfig) -> List[SquareSet]:
    """5-sets found by exactly extending every 4-set with sum in ``[s_min, s_max]``."""
    found = _scan(cfg, _n5_chunk, (cfg.positive_only,))
    logger.info("search_n5 S<=%d: %d distinct set(s)", cfg.s_max, len(found))
    return _ranked(found, cfg.top_k)


# ---------------------------------------------------------------------------
# Square triples
# ---------------------------------------------------------------------------


def _n5_unfiltered_chunk(part: Tuple[int, int]) -> List[Elements]:
    lo, hi = part
    return [values for values in _n5_chunk((lo, hi, False)) if sum(values) > 3 * values[-1]]


def triple_sets_from_pairs(
    pair_sets: Iterable[SquareSet], top_k: Optional[int] = None
) -> List[SquareSet]:
    """Positive triple-square sets obtained from pair-square 5-sets with ``S > 3 max``."""
    found: Set[Elements] = set()
    for s in pair_sets:
        if s.total <= 3 * s.elements[-1]:
            continue
        z = square_reduce(pairs_to_triples(s))
        report = verify_triples(z)
        if not report.complete:
            raise InvariantViolation(f"z-transform of {s.elements} lost a square triple.")
        if z.elements[0] <= 0:
            raise InvariantViolation(f"z-transform of {s.elements} is not positive.")
        found.add(z.elements)
    ranked = sorted((SquareSet(values) for values in found), key=rank_key)
    return ranked[:top_k] if top_k is not None else ranked


def search_triples_positive(cfg: SearchConfig) -> List[SquareSet]:
    found = _scan(cfg, _n5_unfiltered_chunk, ())
    pair_sets = _ranked(found, None)
    logger.info("search_triples_positive S<=%d: %d pair set(s) with S > 3 max", cfg.s_max, len(pair_sets))
    return triple_sets_from_pairs(pair_sets, cfg.top_k)


# ---------------------------------------------------------------------------
# Near-solutions
# ---------------------------------------------------------------------------


def _scan_base(part: Tuple[SquareSet, int]) -> List[ExtensionCandidate]:
    base, target = part
    seen: Set[int] = set()
    merged: List[ExtensionCandidate] = []
    for i, j in combinations(range(base.n), 2):
        cfg = SearchConfig(anchor=(i, j), require_pairs=target)
        for candidate in extend_set(base, cfg):
            if candidate.new_element in seen:
                continue
            seen.add(candidate.new_element)
            merged.append(candidate)
    merged.sort(key=lambda candidate: candidate.new_element)
    return merged


def near_solution_scan(
    bases: Sequence[SquareSet], target_pairs: int, *, workers: int = 1
) -> List[ExtensionCandidate]:
    """Extend each complete base over every anchor pair, keeping ``>= target_pairs`` squares."""
    for base in bases:
        if not verify_pairs(base).complete:
            raise DomainError(f"Base {base.elements} is not a complete pair-square set.")
    results: List[ExtensionCandidate] = []
    parts = [(base, target_pairs) for base in bases]
    for base, found in zip(bases, run_partitioned(_scan_base, parts, workers=workers)):
        logger.info("Base %s: %d candidate(s) with >= %d square pairs", base.to_literal(), len(found), target_pairs)
        results.extend(found)
    return results
