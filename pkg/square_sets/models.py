"""Core data structures used by the square-set toolkit."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd, prod
from typing import Iterable, Tuple

from .errors import ConfigError, ValidationError

MIN_ELEMENTS = 2
MAX_ELEMENTS = 7


@dataclass(frozen=True)
class Factorization:
    """Prime decomposition of a positive integer, primes ascending."""

    value: int
    factors: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError(f"Primes must be strictly ascending: {primes}")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("Exponents must be positive.")
        if prod(p**e for p, e in self.factors) != self.value:
            raise ValueError(f"Factors do not multiply to {self.value}.")

    @property
    def divisor_count(self) -> int:
        return prod(e + 1 for _, e in self.factors)


@dataclass(frozen=True, order=True)
class TwoSquareRep:
    """``target = small**2 + large**2`` with ``0 <= small <= large``."""

    small: int
    large: int
    target: int

    def __post_init__(self) -> None:
        if not 0 <= self.small <= self.large:
            raise ValueError(f"Need 0 <= small <= large, got ({self.small}, {self.large}).")
        if self.small * self.small + self.large * self.large != self.target:
            raise ValueError(f"{self.small}^2 + {self.large}^2 != {self.target}")


@dataclass(frozen=True)
class SquareSet:
    """Sorted distinct nonzero integers (2 to 7 of them)."""

    elements: Tuple[int, ...]

    def __post_init__(self) -> None:
        values = self.elements
        if not MIN_ELEMENTS <= len(values) <= MAX_ELEMENTS:
            raise ValidationError(
                f"A set needs {MIN_ELEMENTS}..{MAX_ELEMENTS} elements, got {len(values)}."
            )
        for value in values:
            if value == 0:
                raise ValidationError("Zero is not allowed as an element.", token="0")
        for left, right in zip(values, values[1:]):
            if left == right:
                raise ValidationError(f"Duplicate element {left}.", token=str(left))
            if left > right:
                raise ValidationError("Elements must be ascending.", token=str(right))

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "SquareSet":
        ordered = sorted(int(v) for v in values)
        return cls(tuple(ordered))

    @property
    def n(self) -> int:
        return len(self.elements)

    @cached_property
    def total(self) -> int:
        return sum(self.elements)

    @cached_property
    def l1(self) -> int:
        return sum(abs(x) for x in self.elements)

    @property
    def content(self) -> int:
        """gcd of the elements."""
        result = 0
        for value in self.elements:
            result = gcd(result, value)
        return result

    def with_element(self, value: int) -> "SquareSet":
        return SquareSet.from_values(self.elements + (value,))

    def to_literal(self) -> str:
        return ",".join(str(x) for x in self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class QuarticCoeffs:
    """``f(G, H) = a G^4 + b G^3 H + c G^2 H^2 - b G H^3 + a H^4``."""

    a: int
    b: int
    c: int

    @classmethod
    def parse(cls, text: str) -> "QuarticCoeffs":
        parts = [part.strip() for part in text.split(",")]
        if len(parts) != 3:
            raise ConfigError(f"Quartic coefficients need 'a,b,c', got {text!r}.")
        try:
            a, b, c = (int(part) for part in parts)
        except ValueError as exc:
            raise ConfigError(f"Quartic coefficients must be integers: {text!r}.") from exc
        return cls(a, b, c)


@dataclass(frozen=True, order=True)
class QuarticPoint:
    g: int
    h: int
    f_root: int

    def __post_init__(self) -> None:
        if self.g <= 0 or self.h <= 0:
            raise ValueError("Quartic points use positive G, H only.")
        if gcd(self.g, self.h) != 1:
            raise ValueError(f"({self.g}, {self.h}) is not primitive.")
