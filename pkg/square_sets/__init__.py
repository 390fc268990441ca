"""Exact search and verification of integer sets whose pair (or triple) sums are squares."""

from .arith import divisor_pairs, factorize, is_square, isqrt, square_root, two_square_count, two_square_reps
from .errors import (
    ConfigError,
    DegenerateError,
    DomainError,
    InvariantViolation,
    SquareSetError,
    ValidationError,
    VerificationFailure,
)
from .models import Factorization, QuarticCoeffs, QuarticPoint, SquareSet, TwoSquareRep
from .results import ExtensionCandidate, PairReport, ProbEstimate, ResultRecord, TripleReport
from .sets import (
    compare_sets,
    l1_norm,
    make_set,
    pairs_to_triples,
    parse_set,
    square_reduce,
    triples_to_pairs,
    verify_pairs,
    verify_triples,
)
from .search import (
    SearchConfig,
    extend_set,
    near_solution_scan,
    search_n4,
    search_n5,
    search_triples_positive,
    solve_three,
)
from .quartic import eval_quartic, joint_square_points, lagrange_identity, quartic_square_points, verify_published_sets
from . import graphs
from . import prob

__all__ = [
    "ConfigError",
    "DegenerateError",
    "DomainError",
    "ExtensionCandidate",
    "Factorization",
    "InvariantViolation",
    "PairReport",
    "ProbEstimate",
    "QuarticCoeffs",
    "QuarticPoint",
    "ResultRecord",
    "SearchConfig",
    "SquareSet",
    "SquareSetError",
    "TripleReport",
    "TwoSquareRep",
    "ValidationError",
    "VerificationFailure",
    "compare_sets",
    "divisor_pairs",
    "eval_quartic",
    "extend_set",
    "factorize",
    "graphs",
    "is_square",
    "isqrt",
    "joint_square_points",
    "l1_norm",
    "lagrange_identity",
    "make_set",
    "near_solution_scan",
    "pairs_to_triples",
    "parse_set",
    "prob",
    "quartic_square_points",
    "search_n4",
    "search_n5",
    "search_triples_positive",
    "solve_three",
    "square_reduce",
    "square_root",
    "triples_to_pairs",
    "two_square_count",
    "two_square_reps",
    "verify_pairs",
    "verify_published_sets",
    "verify_triples",
]
