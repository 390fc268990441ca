"""Rarity of positive square-triple sets under a uniform model.

Three ordered values ``0 < y1 < y2 < y3 < 1`` drawn uniformly; the event of
interest is ``y1^2 + y2^2 + y3^2 > 2``. Exact constants come from sympy; the
Monte Carlo side uses numpy's PCG64 generator in fixed blocks of
``BLOCK_SAMPLES``, block ``k`` seeded with ``SeedSequence(seed, spawn_key=(k,))``.
Block layout does not depend on the worker count, so neither does the estimate.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import sqrt
from typing import List, Tuple

import numpy as np
import sympy as sp

from .errors import DomainError
from .results import ProbEstimate
from .utils import run_partitioned

logger = logging.getLogger(__name__)

BLOCK_SAMPLES = 1 << 20
PRECISION_DIGITS = 30


def closed_form_expr() -> sp.Expr:
    return (sp.pi * (8 * sp.sqrt(2) - 15) + 12) / 72


def cube_sphere_volume_expr() -> sp.Expr:
    """Volume inside both the unit cube and the sphere of radius sqrt(2)."""
    return sp.pi / 4 + sp.pi * (1 - 2 * sp.sqrt(2) / 3)


def closed_form() -> float:
    return float(closed_form_expr().evalf(PRECISION_DIGITS))


def cube_sphere_volume() -> float:
    return float(cube_sphere_volume_expr().evalf(PRECISION_DIGITS))


def closed_form_matches_volume() -> bool:
    """Symbolic check that the probability is (1 - volume) / 6."""
    return sp.simplify((1 - cube_sphere_volume_expr()) / 6 - closed_form_expr()) == 0


@dataclass(frozen=True)
class _Counts:
    samples: int
    ordered_outside: int
    outside: int


def _block_counts(part: Tuple[int, int, int]) -> _Counts:
    seed, index, size = part
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))
    y = rng.random((size, 3))
    outside = np.einsum("ij,ij->i", y, y) > 2.0
    ordered = (y[:, 0] < y[:, 1]) & (y[:, 1] < y[:, 2])
    return _Counts(size, int(np.count_nonzero(outside & ordered)), int(np.count_nonzero(outside)))


def _counts(samples: int, seed: int, workers: int) -> _Counts:
    if samples < 1:
        raise DomainError(f"Monte Carlo needs at least one sample, got {samples}.")
    if seed < 0:
        raise DomainError(f"Seeds are nonnegative integers, got {seed}.")
    parts: List[Tuple[int, int, int]] = []
    remaining, index = samples, 0
    while remaining > 0:
        size = min(BLOCK_SAMPLES, remaining)
        parts.append((seed, index, size))
        remaining -= size
        index += 1
    ordered = outside = 0
    for block in run_partitioned(_block_counts, parts, workers=workers, threads=True):
        ordered += block.ordered_outside
        outside += block.outside
    logger.debug("Monte Carlo seed=%d: %d block(s)", seed, len(parts))
    return _Counts(samples, ordered, outside)


def _binomial(hits: int, samples: int, scale: float = 1.0) -> ProbEstimate:
    p = hits / samples
    return ProbEstimate(p * scale, sqrt(p * (1.0 - p) / samples) * scale, samples)


def monte_carlo(samples: int, seed: int, *, workers: int = 1) -> ProbEstimate:
    """Pr(ordered ascending and sum of squares > 2) from uniform cube samples."""
    counts = _counts(samples, seed, workers)
    return _binomial(counts.ordered_outside, samples)


def monte_carlo_unordered(samples: int, seed: int, *, workers: int = 1) -> ProbEstimate:
    """One sixth of Pr(sum of squares > 2); the six orderings are equally likely."""
    counts = _counts(samples, seed, workers)
    return _binomial(counts.outside, samples, scale=1.0 / 6.0)


def monte_carlo_volume(samples: int, seed: int, *, workers: int = 1) -> ProbEstimate:
    """Fraction of cube samples inside the sphere."""
    counts = _counts(samples, seed, workers)
    return _binomial(samples - counts.outside, samples)


def estimators_agree(samples: int, seed: int, *, workers: int = 1, sigmas: float = 4.0) -> bool:
    ordered = monte_carlo(samples, seed, workers=workers)
    unordered = monte_carlo_unordered(samples, seed, workers=workers)
    combined = sqrt(ordered.std_error**2 + unordered.std_error**2)
    return abs(ordered.value - unordered.value) <= sigmas * combined
