from __future__ import annotations

import random
from math import isqrt

import pytest

from square_sets.arith import is_square
from square_sets.checkpoint import read_checkpoint
from square_sets.errors import ConfigError, DegenerateError, DomainError
from square_sets.models import SquareSet
from square_sets.search import (
    SearchConfig,
    extend_set,
    near_solution_scan,
    search_n4,
    search_n5,
    search_triples_positive,
    solve_three,
    triple_sets_from_pairs,
)
from square_sets.sets import make_set, triples_to_pairs, verify_pairs, verify_triples
from tables import LAGRANGE_SIX, OTHER_SIXES, TABLE_1, TABLE_2, TABLE_3, TABLE_4, TABLE_5, as_sets


def _assert_exact(sets):
    for s in sets:
        report = verify_pairs(s)
        assert report.complete
        assert s.l1 >= s.total
        assert sum(1 for x in s.elements if x < 0) <= 1
        assert sum(1 for x in s.elements if x % 2) <= 1


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "changes",
    [
        {"s_min": 0},
        {"s_min": 10, "s_max": 5},
        {"top_k": 0},
        {"require_pairs": 0},
        {"anchor": (1, 1)},
        {"workers": -1},
    ],
)
def test_search_config_validation(changes):
    with pytest.raises(ConfigError):
        SearchConfig(**changes)


def test_with_updates_revalidates():
    cfg = SearchConfig(s_max=100)
    assert cfg.with_updates(top_k=3).top_k == 3
    with pytest.raises(ConfigError):
        cfg.with_updates(s_max=0)


# ---------------------------------------------------------------------------
# n = 3
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "pqr, expected",
    [((2, 4, 8), (-22, 26, 38)), ((1, 2, 3), (-2, 3, 6))],
)
def test_solve_three(pqr, expected):
    s = solve_three(*pqr)
    assert s.elements == expected
    assert verify_pairs(s).complete


def test_solve_three_scales_fractional_halves():
    s = solve_three(1, 2, 4)  # 1 + 4 + 16 is odd
    assert s.elements == (-22, 26, 38)
    assert sorted(entry.sum for entry in verify_pairs(s).entries) == [4, 16, 64]


def test_solve_three_degenerate():
    with pytest.raises(DegenerateError):
        solve_three(1, 1, 1)
    with pytest.raises(DomainError):
        solve_three(-1, 2, 3)


# ---------------------------------------------------------------------------
# n = 4
# ---------------------------------------------------------------------------


def test_table_1_reproduction():
    sets = search_n4(SearchConfig(s_max=1500, top_k=5))
    assert sets == as_sets(TABLE_1)


def test_table_2_reproduction():
    sets = search_n4(SearchConfig(s_max=8000, positive_only=True, top_k=5))
    assert sets == as_sets(TABLE_2)


def test_single_sum_contains_first_row():
    sets = search_n4(SearchConfig(s_min=425, s_max=425, top_k=50))
    assert SquareSet(TABLE_1[0]) in sets
    assert all(s.total == 425 for s in sets)


def _brute_force_quadruples(limit):
    """Independent enumeration: every pair sum lies in [0, limit], every element in (-limit, limit]."""
    squares = {k * k for k in range(isqrt(limit) + 1)}
    found = set()
    for x1 in range(-limit, limit + 1):
        if x1 == 0:
            continue
        partners = sorted(sq - x1 for sq in squares if sq - x1 > x1 and sq - x1 != 0)
        for a, x2 in enumerate(partners):
            common = [x for x in partners[a + 1 :] if x + x2 in squares]
            for b, x3 in enumerate(common):
                for x4 in common[b + 1 :]:
                    if x3 + x4 in squares and x1 + x2 + x3 + x4 <= limit:
                        found.add((x1, x2, x3, x4))
    return found


def test_search_n4_matches_brute_force():
    limit = 2000
    sets = search_n4(SearchConfig(s_max=limit, top_k=10**6))
    assert {s.elements for s in sets} == _brute_force_quadruples(limit)
    _assert_exact(sets)


def test_search_n4_independent_of_partitioning():
    base = SearchConfig(s_max=3000, top_k=10**6)
    reference = search_n4(base)
    assert search_n4(base.with_updates(chunk_size=317)) == reference
    assert search_n4(base.with_updates(chunk_size=500, workers=2)) == reference


def test_search_n4_checkpoint(tmp_path):
    path = tmp_path / "progress.txt"
    cfg = SearchConfig(s_max=1500, top_k=100, chunk_size=400, checkpoint=path)
    first = search_n4(cfg)
    assert read_checkpoint(path) == 1500
    assert path.read_text().split() == ["400", "800", "1200", "1500"]
    assert SquareSet(TABLE_1[0]) in first
    # Everything is done: a resumed run skips all S.
    assert search_n4(cfg) == []


def test_search_n4_resumes_after_checkpoint(tmp_path):
    path = tmp_path / "progress.txt"
    path.write_text("100\n500\n")
    sets = search_n4(SearchConfig(s_max=1500, top_k=100, checkpoint=path))
    assert sets and all(s.total > 500 for s in sets)
    assert read_checkpoint(path) == 1500


# ---------------------------------------------------------------------------
# Extension
# ---------------------------------------------------------------------------


def test_extend_table_3_prefix():
    base = SquareSet(TABLE_3[0][:4])
    candidates = extend_set(base)
    chosen = [c for c in candidates if c.new_element == 31122]
    assert len(chosen) == 1
    candidate = chosen[0]
    assert (candidate.w, candidate.y) == (162, 190)
    assert candidate.report.complete
    assert candidate.extended == SquareSet(TABLE_3[0])


def test_extend_collision_is_skipped():
    assert extend_set(make_set([-2, 3, 6])) == []


def test_extend_witnesses():
    base = SquareSet(TABLE_1[0])
    for candidate in extend_set(base, SearchConfig(require_pairs=5)):
        i, j = candidate.anchor
        x_i, x_j = base.elements[i], base.elements[j]
        assert candidate.y**2 - candidate.w**2 == x_j - x_i
        assert candidate.new_element == candidate.w**2 - x_i
        assert candidate.report.square_pairs >= 5


def test_extend_errors():
    base = make_set([-2, 3, 6])
    with pytest.raises(DomainError):
        extend_set(base, SearchConfig(anchor=(0, 5)))
    with pytest.raises(DomainError):
        extend_set(base, SearchConfig(anchor=(2, 1)))
    with pytest.raises(ConfigError):
        extend_set(base, SearchConfig(require_pairs=7))
    with pytest.raises(DomainError):
        extend_set(make_set(range(1, 8)))


def test_extension_finds_planted_candidates():
    rng = random.Random(2024)
    for _ in range(200):
        x_i = rng.randint(-10**6, 10**6)
        w = rng.randint(0, 5000)
        y = w + rng.randint(1, 5000)
        x_j = x_i + y * y - w * w
        c = w * w - x_i
        others = rng.sample(range(-10**7, 10**7), 2)
        values = {x_i, x_j, *others}
        if len(values) != 4 or 0 in values or c == 0 or c in values:
            continue
        s = make_set(values)
        anchor = (s.elements.index(x_i), s.elements.index(x_j))
        candidates = extend_set(s, SearchConfig(anchor=anchor, require_pairs=1))
        assert c in {candidate.new_element for candidate in candidates}


def test_five_sets_rediscovered_from_prefix():
    for row in TABLE_3 + TABLE_4:
        found = {c.new_element for c in extend_set(SquareSet(row[:4]))}
        assert row[4] in found


# ---------------------------------------------------------------------------
# n = 5 and square triples
# ---------------------------------------------------------------------------


def test_search_n5_small_bound_is_exact():
    sets = search_n5(SearchConfig(s_max=24000, top_k=50))
    _assert_exact(sets)
    assert SquareSet(TABLE_3[0]) in sets  # prefix sum 19981
    assert SquareSet(TABLE_3[4]) in sets  # prefix sum 23885


@pytest.mark.slow
def test_table_3_reproduction():
    assert search_n5(SearchConfig(s_max=71000, top_k=5, workers=0)) == as_sets(TABLE_3)


@pytest.mark.slow
def test_table_4_reproduction():
    cfg = SearchConfig(s_max=3_300_000, positive_only=True, top_k=5, workers=0)
    assert search_n5(cfg) == as_sets(TABLE_4)


def test_triple_sets_from_scaled_pair_sets():
    pair_sets = [triples_to_pairs(SquareSet(row)) for row in TABLE_5]
    assert triple_sets_from_pairs(pair_sets) == as_sets(TABLE_5)


def test_search_triples_positive_finds_second_row():
    results = search_triples_positive(SearchConfig(s_min=41_998_525, s_max=41_998_525, top_k=10))
    assert results == [SquareSet(TABLE_5[1])]
    assert verify_triples(results[0]).complete


def test_search_triples_positive_small_range_is_empty():
    assert search_triples_positive(SearchConfig(s_max=30000)) == []


# ---------------------------------------------------------------------------
# Near-solutions
# ---------------------------------------------------------------------------


def test_lagrange_six_extends_to_eighteen_pairs():
    candidates = near_solution_scan([SquareSet(LAGRANGE_SIX)], 18)
    assert 15945698 in {c.new_element for c in candidates}
    for candidate in candidates:
        assert candidate.report.square_pairs >= 18


def test_first_anchor_extends_only_the_lagrange_six():
    cfg = SearchConfig(anchor=(0, 1), require_pairs=18)
    assert [c.new_element for c in extend_set(SquareSet(LAGRANGE_SIX), cfg)] == [15945698]
    for base in as_sets(OTHER_SIXES):
        assert extend_set(base, cfg) == []


def test_other_anchors_reach_eighteen_on_other_sixes():
    candidates = near_solution_scan(as_sets(OTHER_SIXES), 18)
    assert {c.new_element for c in candidates} == {
        5698479237262866,
        10429970990294268,
        11583454495437468,
        299405553000735132,
    }
    for candidate in candidates:
        assert candidate.anchor != (0, 1)
        assert candidate.report.square_pairs == 18
        sums = [x + candidate.new_element for x in candidate.base.elements]
        assert sum(1 for value in sums if isqrt(value) ** 2 == value) == 3


def test_threshold_equal_to_total_matches_exact_extension():
    base = SquareSet(TABLE_3[0][:4])
    scan = {c.new_element for c in near_solution_scan([base], 10)}
    exact = {c.new_element for c in extend_set(base)}
    assert scan == exact and 31122 in scan


def test_near_solutions_of_small_triple_match_brute_force():
    base = make_set([-2, 3, 6])
    scan = {c.new_element for c in near_solution_scan([base], 5)}
    oracle = set()
    for c in range(-10**4, 10**4):
        if c == 0 or c in base.elements:
            continue
        if sum(1 for x in base.elements if is_square(x + c)) >= 2:
            oracle.add(c)
    assert scan == oracle


def test_near_solution_scan_requires_complete_bases():
    with pytest.raises(DomainError):
        near_solution_scan([make_set([1, 2, 3])], 3)


def test_resumed_search_warns_about_skipped_range(tmp_path, caplog):
    path = tmp_path / "progress.txt"
    path.write_text("500\n", encoding="utf-8")
    with caplog.at_level("WARNING", logger="square_sets.search"):
        search_n4(SearchConfig(s_max=600, checkpoint=path))
    assert "S <= 500 are not reported" in caplog.text
