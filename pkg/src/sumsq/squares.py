"""Representations of integers as sums of nonzero squares.

Covers enumeration of two-square representations, splits of an integer into
two such sums, the closed-form representability criterion for sums of k >= 4
nonzero squares, and an independent brute-force oracle that never consults
the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import isqrt
from typing import NamedTuple


class SquarePair(NamedTuple):
    """A representation a**2 + b**2 with 1 <= a <= b."""

    a: int
    b: int

    def value(self) -> int:
        return self.a * self.a + self.b * self.b


class FourSplit(NamedTuple):
    """A decomposition n = s + t with s <= t, both sums of two nonzero squares."""

    s: int
    t: int

    def value(self) -> int:
        return self.s + self.t


def two_square_reps(n: int) -> tuple[SquarePair, ...]:
    """All pairs (a, b) with 1 <= a <= b and a**2 + b**2 == n, ascending in a."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    reps = []
    for a in range(1, isqrt(n // 2) + 1):
        rest = n - a * a
        b = isqrt(rest)
        if b * b == rest:
            reps.append(SquarePair(a, b))
    return tuple(reps)


# Membership table for is_two_square; built once by precompute_two_squares and
# only ever grown. Queries above the table fall back to direct enumeration.
_table: list[bool] = []


def precompute_two_squares(bound: int) -> None:
    """Grow the two-square membership table so lookups up to bound are O(1)."""
    global _table
    if bound < len(_table):
        return
    table = [False] * (bound + 1)
    a = 1
    while 2 * a * a <= bound:
        b = a
        while a * a + b * b <= bound:
            table[a * a + b * b] = True
            b += 1
        a += 1
    _table = table


def is_two_square(n: int) -> bool:
    """True iff n is a sum of two nonzero squares."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n < len(_table):
        return _table[n]
    return bool(two_square_reps(n))


@cache
def four_splits(n: int) -> tuple[FourSplit, ...]:
    """All splits n = s + t, s <= t, with both parts sums of two nonzero squares.

    Empty exactly when n is not a sum of four nonzero squares.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if n >= len(_table):
        precompute_two_squares(n)
    table = _table
    return tuple(
        FourSplit(s, n - s)
        for s in range(2, n // 2 + 1)
        if table[s] and table[n - s]
    )


def brute_k_squares(n: int, k: int) -> bool:
    """True iff n is a sum of exactly k nonzero squares.

    Memoized recursion on (n, k, largest allowed square root), trying the
    largest square first. Deliberately knows nothing about the closed-form
    exception lists, so it can serve as their oracle.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if k < 1:
        raise ValueError("k must be a positive integer")
    return _brute(n, k, isqrt(n))


@cache
def _brute(n: int, k: int, cap: int) -> bool:
    if k == 0:
        return n == 0
    if n < k:
        return False
    effective = min(cap, isqrt(n - k + 1))
    if effective != cap:
        return _brute(n, k, effective)
    if cap < 1 or n > k * cap * cap:
        return False
    for i in range(cap, 0, -1):
        if _brute(n - i * i, k - 1, i):
            return True
    return False


@dataclass(frozen=True)
class ExceptionSpec:
    """The integers not representable as a sum of k nonzero squares.

    finite_exceptions is the finite list; each geometric seed g encodes the
    whole family g * 4**m, m >= 0 (nonempty only for k = 4).
    """

    k: int
    finite_exceptions: frozenset[int]
    geometric_seeds: frozenset[int]

    @classmethod
    def for_k(cls, k: int) -> "ExceptionSpec":
        if k < 4:
            raise ValueError("no closed-form exception list for k < 4")
        if k == 4:
            return cls(4, frozenset({1, 3, 5, 9, 11, 17, 29, 41}), frozenset({2, 6, 14}))
        finite = set(range(1, k)) | {k + 1, k + 2, k + 4, k + 5, k + 7, k + 10, k + 13}
        if k == 5:
            # The k >= 5 list applies at k = 5 as well, plus the lone extra 33.
            finite.add(33)
        return cls(k, frozenset(finite), frozenset())

    def excludes(self, n: int) -> bool:
        if n in self.finite_exceptions:
            return True
        if self.geometric_seeds:
            m = n
            while m % 4 == 0:
                m //= 4
            return m in self.geometric_seeds
        return False


@cache
def _spec_for(k: int) -> ExceptionSpec:
    return ExceptionSpec.for_k(k)


def dubouis_predict(n: int, k: int) -> bool:
    """Closed-form representability of n as a sum of k >= 4 nonzero squares."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    return not _spec_for(k).excludes(n)


def exceptions_up_to(k: int, limit: int) -> list[int]:
    """All n <= limit not representable as a sum of k nonzero squares, sorted."""
    if limit < 1:
        raise ValueError("limit must be a positive integer")
    spec = _spec_for(k)
    return [n for n in range(1, limit + 1) if spec.excludes(n)]
