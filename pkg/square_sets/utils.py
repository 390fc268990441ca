"""Utility helpers for parsing literals and running partitioned work."""

from __future__ import annotations

import os
import re
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from typing import Callable, Iterator, List, Sequence, Tuple, TypeVar

from .errors import ConfigError, ValidationError

T = TypeVar("T")
R = TypeVar("R")

LITERAL_SPLIT_PATTERN = re.compile(r"\s*,\s*")
INTEGER_PATTERN = re.compile(r"[+-]?\d+")


def split_tokens(raw: str) -> List[str]:
    text = raw.strip()
    if not text:
        return []
    # Accept "{-2, 3, 6}" as pasted from a table
    text = text.strip("{}[]() ")
    return LITERAL_SPLIT_PATTERN.split(text)


def parse_int_list(raw: str, *, label: str = "value") -> List[int]:
    tokens = split_tokens(raw)
    if not tokens:
        raise ValidationError(f"Empty {label} list.", token="")
    values: List[int] = []
    for token in tokens:
        if not INTEGER_PATTERN.fullmatch(token):
            raise ValidationError(f"Malformed {label} token {token!r}.", token=token)
        values.append(int(token))
    return values


def parse_index_pair(raw: str) -> Tuple[int, int]:
    values = parse_int_list(raw, label="index")
    if len(values) != 2:
        raise ValidationError(f"Expected two indices 'i,j', got {raw!r}.", token=raw)
    return values[0], values[1]


def ensure_choice(value: str, choices: Sequence[str], *, label: str) -> str:
    lowered = value.strip().lower()
    normalized = [choice.lower() for choice in choices]
    if lowered not in normalized:
        readable = ", ".join(choices)
        raise ValueError(f"{label} must be one of: {readable}")
    return choices[normalized.index(lowered)]


def resolve_workers(workers: int) -> int:
    """0 means one worker per CPU."""
    if workers < 0:
        raise ConfigError(f"workers must be >= 0, got {workers}.")
    if workers == 0:
        return os.cpu_count() or 1
    return workers


def chunk_ranges(lo: int, hi: int, size: int) -> List[Tuple[int, int]]:
    """Split ``[lo, hi]`` into consecutive inclusive ranges of at most ``size`` values."""
    if size < 1:
        raise ValueError("chunk size must be >= 1")
    ranges: List[Tuple[int, int]] = []
    start = lo
    while start <= hi:
        stop = min(hi, start + size - 1)
        ranges.append((start, stop))
        start = stop + 1
    return ranges


def run_partitioned(
    func: Callable[[T], R],
    parts: Sequence[T],
    *,
    workers: int = 1,
    threads: bool = False,
) -> Iterator[R]:
    """Apply ``func`` to every part, yielding results in part order.

    Order is preserved for any worker count, so merged output never depends on
    scheduling. ``func`` must be a module-level function when processes are used.
    """
    count = resolve_workers(workers)
    if count <= 1 or len(parts) <= 1:
        for part in parts:
            yield func(part)
        return
    executor_cls = ThreadPoolExecutor if threads else ProcessPoolExecutor
    with executor_cls(max_workers=min(count, len(parts))) as executor:
        yield from executor.map(func, parts)
