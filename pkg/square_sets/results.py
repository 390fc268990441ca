"""Dataclasses describing verification and search outcomes."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .models import SquareSet

RECORD_KINDS = ("set", "candidate", "prob", "report")


@dataclass(frozen=True)
class PairEntry:
    i: int
    j: int
    sum: int
    is_square: bool
    root: Optional[int] = None


@dataclass(frozen=True)
class PairReport:
    set: SquareSet
    entries: Tuple[PairEntry, ...]

    @property
    def square_pairs(self) -> int:
        return sum(1 for entry in self.entries if entry.is_square)

    @property
    def total_pairs(self) -> int:
        return len(self.entries)

    @property
    def complete(self) -> bool:
        return self.square_pairs == self.total_pairs

    def failing(self) -> List[PairEntry]:
        return [entry for entry in self.entries if not entry.is_square]


@dataclass(frozen=True)
class TripleEntry:
    i: int
    j: int
    k: int
    sum: int
    is_square: bool
    root: Optional[int] = None


@dataclass(frozen=True)
class TripleReport:
    set: SquareSet
    entries: Tuple[TripleEntry, ...]

    @property
    def square_triples(self) -> int:
        return sum(1 for entry in self.entries if entry.is_square)

    @property
    def total_triples(self) -> int:
        return len(self.entries)

    @property
    def complete(self) -> bool:
        return self.square_triples == self.total_triples

    def failing(self) -> List[TripleEntry]:
        return [entry for entry in self.entries if not entry.is_square]


@dataclass(frozen=True)
class ExtensionCandidate:
    """``base`` plus ``new_element``, with ``x_i + new = w^2`` and ``x_j + new = y^2``."""

    base: SquareSet
    new_element: int
    report: PairReport
    w: int
    y: int
    anchor: Tuple[int, int] = (0, 1)

    @property
    def extended(self) -> SquareSet:
        return self.report.set


@dataclass(frozen=True)
class ProbEstimate:
    value: float
    std_error: float
    samples: int


@dataclass
class ResultRecord:
    """One line of CLI output; big integers travel as decimal strings in jsonl."""

    kind: str
    n: int = 0
    elements: List[int] = field(default_factory=list)
    sum: int = 0
    l1: int = 0
    square_pairs: int = 0
    total_pairs: int = 0
    roots: List[Tuple[int, int, int]] = field(default_factory=list)
    meta: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in RECORD_KINDS:
            raise ValueError(f"Unknown record kind {self.kind!r}.")

    @classmethod
    def from_pair_report(
        cls, report: PairReport, *, kind: str = "set", meta: Dict[str, str] | None = None
    ) -> "ResultRecord":
        s = report.set
        return cls(
            kind=kind,
            n=s.n,
            elements=list(s.elements),
            sum=s.total,
            l1=s.l1,
            square_pairs=report.square_pairs,
            total_pairs=report.total_pairs,
            roots=[(e.i, e.j, e.root) for e in report.entries if e.root is not None],
            meta=dict(meta or {}),
        )

    def to_json(self) -> str:
        payload = {
            "kind": self.kind,
            "n": self.n,
            "elements": [str(x) for x in self.elements],
            "sum": str(self.sum),
            "l1": str(self.l1),
            "square_pairs": self.square_pairs,
            "total_pairs": self.total_pairs,
            "roots": [[i, j, str(root)] for i, j, root in self.roots],
            "meta": {key: str(value) for key, value in self.meta.items()},
        }
        return json.dumps(payload, separators=(",", ":"), ensure_ascii=False)

    @classmethod
    def from_json(cls, line: str) -> "ResultRecord":
        data = json.loads(line)
        return cls(
            kind=data["kind"],
            n=int(data["n"]),
            elements=[int(x) for x in data["elements"]],
            sum=int(data["sum"]),
            l1=int(data["l1"]),
            square_pairs=int(data["square_pairs"]),
            total_pairs=int(data["total_pairs"]),
            roots=[(int(i), int(j), int(root)) for i, j, root in data["roots"]],
            meta={str(k): str(v) for k, v in data["meta"].items()},
        )

    def to_tsv(self) -> str:
        columns = [
            str(self.n),
            str(self.sum),
            str(self.l1),
            ",".join(str(x) for x in self.elements),
            str(self.square_pairs),
            str(self.total_pairs),
        ]
        if self.meta:
            columns.append(";".join(f"{key}={value}" for key, value in self.meta.items()))
        return "\t".join(columns)
