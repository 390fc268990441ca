"""Exact integer kernels: square tests, factoring, two-square representations."""

from __future__ import annotations

from collections import defaultdict
from typing import Dict, List, Optional, Tuple

import gmpy2
from sympy import divisors, factorint

from .errors import DomainError
from .models import Factorization, TwoSquareRep


def _residue_table(modulus: int) -> bytes:
    table = bytearray(modulus)
    for k in range(modulus):
        table[(k * k) % modulus] = 1
    return bytes(table)


# Quadratic residues; rejects ~99.5% of non-squares before the root.
_QR64 = _residue_table(64)
_QR63 = _residue_table(63)
_QR65 = _residue_table(65)
_QR11 = _residue_table(11)


def isqrt(n: int) -> int:
    """Largest ``m`` with ``m * m <= n``."""
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    return int(gmpy2.isqrt(n))


def square_root(n: int) -> Optional[int]:
    """Return ``r >= 0`` with ``r * r == n``, or ``None`` if ``n`` is not a square."""
    if n < 0:
        return None
    if not _QR64[n & 63]:
        return None
    if not (_QR63[n % 63] and _QR65[n % 65] and _QR11[n % 11]):
        return None
    root, rem = gmpy2.isqrt_rem(n)
    if rem:
        return None
    return int(root)


def is_square(n: int) -> bool:
    return square_root(n) is not None


def factorize(n: int) -> Factorization:
    if n < 1:
        raise DomainError(f"factorize needs n >= 1, got {n}")
    factors = tuple(sorted((int(p), int(e)) for p, e in factorint(n).items()))
    return Factorization(n, factors)


def two_square_count(f: Factorization) -> int:
    """Number of ``n = a^2 + b^2`` with ``0 <= a <= b``.

    With B the product of (m + 1) over primes 1 mod 4, the count is
    floor(B / 2), plus one when n is a square or twice a square. Zero when a
    prime 3 mod 4 has an odd exponent.
    """
    product = 1
    for prime, exponent in f.factors:
        if prime % 4 == 3:
            if exponent % 2:
                return 0
        elif prime % 4 == 1:
            product *= exponent + 1
    n = f.value
    square_part = is_square(n) or (n % 2 == 0 and is_square(n // 2))
    return product // 2 + (1 if square_part else 0)


def two_square_reps(n: int) -> List[TwoSquareRep]:
    if n < 1:
        raise DomainError(f"two_square_reps needs n >= 1, got {n}")
    reps: List[TwoSquareRep] = []
    for small in range(isqrt(n // 2) + 1):
        large = square_root(n - small * small)
        if large is not None and large >= small:
            reps.append(TwoSquareRep(small, large, n))
    return reps


def two_square_table(lo: int, hi: int) -> Dict[int, List[Tuple[int, int]]]:
    """All ``(p, q)``, ``0 <= p <= q``, with ``lo <= p^2 + q^2 <= hi``, keyed by the sum.

    Each value list is sorted by ``p``; it matches ``two_square_reps`` for that sum.
    """
    table: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    if hi < max(lo, 0):
        return {}
    for p in range(isqrt(hi // 2) + 1):
        pp = p * p
        floor_gap = lo - pp
        q_lo = p
        if floor_gap > 0:
            q_lo = max(p, isqrt(floor_gap - 1) + 1)
        q_hi = isqrt(hi - pp)
        for q in range(q_lo, q_hi + 1):
            table[pp + q * q].append((p, q))
    return dict(table)


def divisor_pairs(n: int) -> List[Tuple[int, int]]:
    """Pairs ``(d, e)`` with ``d * e == n`` and ``d <= e``, ``d`` ascending."""
    if n < 1:
        raise DomainError(f"divisor_pairs needs n >= 1, got {n}")
    pairs: List[Tuple[int, int]] = []
    for d in divisors(n):
        e = n // d
        if d > e:
            break
        pairs.append((int(d), int(e)))
    return pairs
