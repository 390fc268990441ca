"""Plain-text progress file: one decimal S per line, the last line wins."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from .errors import ValidationError


def read_checkpoint(path: Path) -> Optional[int]:
    path = Path(path)
    if not path.exists():
        return None
    last: Optional[int] = None
    for line in path.read_text(encoding="utf-8").splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        try:
            last = int(stripped)
        except ValueError as exc:
            raise ValidationError(
                f"Checkpoint {path} has a malformed line {stripped!r}.", token=stripped
            ) from exc
    return last


def append_checkpoint(path: Path, value: int) -> None:
    with Path(path).open("a", encoding="utf-8") as handle:
        handle.write(f"{value}\n")
