"""Antisymmetric binary quartics and the four-square identity used for n = 6."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Tuple

from .arith import square_root
from .errors import ConfigError, VerificationFailure
from .fixtures import Fixture, FixtureBook, load_fixtures
from .graphs import largest_square_subset
from .models import QuarticCoeffs, QuarticPoint, SquareSet
from .results import PairReport
from .sets import verify_pairs
from .utils import chunk_ranges, run_partitioned

logger = logging.getLogger(__name__)

PARTITION_ROWS = 64


def eval_quartic(q: QuarticCoeffs, g: int, h: int) -> int:
    g2, h2 = g * g, h * h
    return q.a * (g2 * g2 + h2 * h2) + q.b * g * h * (g2 - h2) + q.c * g2 * h2


def _points_in_rows(part: Tuple[QuarticCoeffs, int, int, int]) -> List[QuarticPoint]:
    q, g_lo, g_hi, bound = part
    points: List[QuarticPoint] = []
    for g in range(g_lo, g_hi + 1):
        for h in range(1, bound + 1):
            if gcd(g, h) != 1:
                continue
            root = square_root(eval_quartic(q, g, h))
            if root is not None:
                points.append(QuarticPoint(g, h, root))
    return points


def quartic_square_points(q: QuarticCoeffs, bound: int, *, workers: int = 1) -> List[QuarticPoint]:
    """Primitive ``(g, h)`` in ``[1, bound]^2`` where ``f(g, h)`` is a square, ordered by ``(g, h)``."""
    if bound < 1:
        raise ConfigError(f"Quartic search bound must be >= 1, got {bound}.")
    parts = [(q, lo, hi, bound) for lo, hi in chunk_ranges(1, bound, PARTITION_ROWS)]
    points: List[QuarticPoint] = []
    for chunk in run_partitioned(_points_in_rows, parts, workers=workers):
        points.extend(chunk)
    logger.info("Quartic %s up to %d: %d square point(s)", q, bound, len(points))
    return points


def joint_square_points(
    q1: QuarticCoeffs, q2: QuarticCoeffs, bound: int, *, workers: int = 1
) -> List[Tuple[QuarticPoint, int]]:
    """Points squaring the first quartic that also square the second."""
    joint: List[Tuple[QuarticPoint, int]] = []
    for point in quartic_square_points(q1, bound, workers=workers):
        root = square_root(eval_quartic(q2, point.g, point.h))
        if root is not None:
            joint.append((point, root))
    return joint


def lagrange_identity(t: int, u: int, v: int, w: int) -> Tuple[int, Tuple[int, int, int]]:
    """``(t^2+u^2+v^2+w^2)^2`` as a sum of three squares; parts are nonnegative."""
    s = t * t + u * u + v * v + w * w
    parts = (
        abs(t * t + u * u - v * v - w * w),
        2 * abs(t * w - u * v),
        2 * abs(t * v + u * w),
    )
    return s, parts


@dataclass(frozen=True)
class FixtureCheck:
    fixture: Fixture
    report: PairReport
    sum_is_square: bool
    core: Optional[SquareSet]

    @property
    def passed(self) -> bool:
        return self.report.square_pairs == self.fixture.expect


def verify_published_sets(book: Optional[FixtureBook] = None, *, strict: bool = False) -> List[FixtureCheck]:
    """Check every fixture's square-pair count against its ``expect`` header.

    With ``strict`` a mismatch raises ``VerificationFailure`` naming the set and
    its failing pairs.
    """
    book = book if book is not None else load_fixtures()
    checks: List[FixtureCheck] = []
    for fixture in book:
        report = verify_pairs(fixture.set)
        total = fixture.set.total
        checks.append(
            FixtureCheck(
                fixture=fixture,
                report=report,
                sum_is_square=square_root(total) is not None,
                core=largest_square_subset(fixture.set),
            )
        )
    failed = [check for check in checks if not check.passed]
    if failed:
        for check in failed:
            logger.warning(
                "Fixture %s: %d/%d square pairs, expected %d; failing %s",
                check.fixture.set.to_literal(),
                check.report.square_pairs,
                check.report.total_pairs,
                check.fixture.expect,
                [(e.i, e.j) for e in check.report.failing()],
            )
        if strict:
            names = "; ".join(check.fixture.set.to_literal() for check in failed)
            raise VerificationFailure(f"{len(failed)} fixture(s) failed: {names}", failures=failed)
    return checks
