"""Fixture book with the published record sets and utilities to load more."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, List, Optional

from .errors import ValidationError
from .models import SquareSet
from .sets import parse_set

DEFAULT_FIXTURE_PATH = Path(__file__).resolve().parent / "data" / "published_sets.txt"

HEADER_PATTERN = re.compile(r"^n=(?P<n>\d+)\s+expect=(?P<expect>\d+)\s+(?P<literal>\S.*)$")


@dataclass(frozen=True)
class Fixture:
    n: int
    expect: int
    set: SquareSet

    def to_text(self) -> str:
        return f"n={self.n} expect={self.expect} {self.set.to_literal()}"


def parse_fixture_line(line: str) -> Fixture:
    match = HEADER_PATTERN.match(line.strip())
    if match is None:
        raise ValidationError(
            "Fixture line must look like 'n=<count> expect=<pairs> <set>'.", token=line.strip()
        )
    s = parse_set(match.group("literal"))
    n, expect = int(match.group("n")), int(match.group("expect"))
    if s.n != n:
        raise ValidationError(f"Header says n={n} but the set has {s.n} elements.", token=f"n={n}")
    if expect > n * (n - 1) // 2:
        raise ValidationError(f"expect={expect} exceeds the pair count for n={n}.", token=f"expect={expect}")
    return Fixture(n, expect, s)


@dataclass
class FixtureBook:
    """In-memory list of record sets with their expected square-pair counts."""

    fixtures: List[Fixture] = field(default_factory=list)
    name: str = "fixtures"

    def __iter__(self) -> Iterator[Fixture]:
        return iter(self.fixtures)

    def __len__(self) -> int:
        return len(self.fixtures)

    def add(self, fixture: Fixture) -> Fixture:
        self.fixtures.append(fixture)
        return fixture

    def load_from_text(self, text: str) -> None:
        for line in text.splitlines():
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            self.add(parse_fixture_line(stripped))

    def load_from_file(self, path: Path) -> None:
        content = Path(path).read_text(encoding="utf-8")
        self.load_from_text(content)

    def of_size(self, n: int) -> List[SquareSet]:
        return [fixture.set for fixture in self.fixtures if fixture.n == n]

    def export_text(self) -> str:
        return "\n".join(fixture.to_text() for fixture in self.fixtures)

    def summary(self) -> str:
        sizes = sorted({fixture.n for fixture in self.fixtures})
        return f"{self.name}: {len(self.fixtures)} set(s), sizes {sizes}"


def load_fixtures(path: Optional[Path] = None) -> FixtureBook:
    book = FixtureBook(name=Path(path or DEFAULT_FIXTURE_PATH).stem)
    book.load_from_file(path or DEFAULT_FIXTURE_PATH)
    return book
