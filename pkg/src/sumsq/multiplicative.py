"""Multiplicative functions given by exact rational values on prime powers.

A MultFn stores f(p**e) for every prime power up to its bound; evaluation
multiplies over the prime-power decomposition, so multiplicativity holds by
construction. The checkers report exact violations of the four-square
functional equation and of multiplicativity for flat value tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping

from .squares import four_splits, precompute_two_squares

FAMILY_TAGS = ("identity", "zero", "case3", "case4", "case5", "case_f3_only")


class FactorSieve:
    """Least-prime-factor sieve supporting factorization of all n <= bound."""

    def __init__(self, bound: int):
        if bound < 1:
            raise ValueError("bound must be a positive integer")
        self.bound = bound
        spf = list(range(bound + 1))
        for p in range(2, int(bound ** 0.5) + 1):
            if spf[p] == p:
                for multiple in range(p * p, bound + 1, p):
                    if spf[multiple] == multiple:
                        spf[multiple] = p
        self.smallest_factor = spf

    def least_prime_factor(self, n: int) -> int:
        self._check(n)
        return self.smallest_factor[n]

    def is_prime(self, n: int) -> bool:
        self._check(n)
        return n >= 2 and self.smallest_factor[n] == n

    def factorize(self, n: int) -> list[tuple[int, int]]:
        """Prime factorization as (p, exponent) pairs, ascending in p."""
        self._check(n)
        out: list[tuple[int, int]] = []
        while n > 1:
            p = self.smallest_factor[n]
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out

    def prime_power_parts(self, n: int) -> list[int]:
        """The prime-power components p**e of n (empty for n = 1)."""
        return [p ** e for p, e in self.factorize(n)]

    def prime_powers(self) -> list[int]:
        """All prime powers p**e <= bound, ascending."""
        out = []
        for p in range(2, self.bound + 1):
            if self.smallest_factor[p] == p:
                q = p
                while q <= self.bound:
                    out.append(q)
                    q *= p
        return sorted(out)

    def _check(self, n: int) -> None:
        if not 1 <= n <= self.bound:
            raise ValueError(f"{n} is outside the sieve bound {self.bound}")


@dataclass(frozen=True)
class FamilySpec:
    """One of the candidate solution families of the functional equation.

    Parameters: y = f(3), w = f(9), v = f(11), where the chosen tag uses them.
    case_f3_only (f(3) != 0 alone) is an experimental pattern: it is built and
    tested like the others but nothing is assumed about it.
    """

    tag: str
    y: Fraction | None = None
    w: Fraction | None = None
    v: Fraction | None = None

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}")
        required = {
            "identity": (),
            "zero": (),
            "case3": ("y", "w"),
            "case4": ("w",),
            "case5": ("v",),
            "case_f3_only": ("y",),
        }[self.tag]
        for name in ("y", "w", "v"):
            value = getattr(self, name)
            if name in required:
                if value is None or Fraction(value) == 0:
                    raise ValueError(f"family {self.tag!r} requires a nonzero parameter {name}")
            elif value is not None:
                raise ValueError(f"family {self.tag!r} takes no parameter {name}")


class MultFn:
    """A multiplicative function determined by values on prime powers <= bound."""

    def __init__(self, bound: int, prime_power_values: Mapping[int, Fraction],
                 sieve: FactorSieve | None = None):
        self.bound = bound
        self.sieve = sieve if sieve is not None and sieve.bound >= bound else FactorSieve(bound)
        values = {q: Fraction(v) for q, v in prime_power_values.items()}
        for q in values:
            factors = self.sieve.factorize(q)
            if len(factors) != 1:
                raise ValueError(f"{q} is not a prime power")
        self.prime_power_values = values

    def evaluate(self, n: int) -> Fraction:
        """f(n) as the product over the prime-power parts of n; f(1) = 1."""
        if not 1 <= n <= self.bound:
            raise ValueError(f"{n} is outside the bound {self.bound}")
        result = Fraction(1)
        for part in self.sieve.prime_power_parts(n):
            result *= self.prime_power_values.get(part, Fraction(0))
        return result

    def value_table(self, bound: int | None = None) -> dict[int, Fraction]:
        """Flat table n -> f(n) for 1 <= n <= bound."""
        bound = self.bound if bound is None else bound
        if bound > self.bound:
            raise ValueError(f"table bound {bound} exceeds function bound {self.bound}")
        table: dict[int, Fraction] = {1: Fraction(1)}
        spf = self.sieve.smallest_factor
        for n in range(2, bound + 1):
            p = spf[n]
            q, rest = p, n // p
            while rest % p == 0:
                rest //= p
                q *= p
            table[n] = self.prime_power_values.get(q, Fraction(0)) * table[rest]
        return table


def make_family(spec: FamilySpec, bound: int) -> MultFn:
    """Construct the multiplicative function described by a FamilySpec."""
    sieve = FactorSieve(bound)
    if spec.tag == "identity":
        values = {q: Fraction(q) for q in sieve.prime_powers()}
    else:
        values = {q: Fraction(0) for q in sieve.prime_powers()}
        if spec.tag == "case3":
            values[3] = Fraction(spec.y)
            values[9] = Fraction(spec.w)
        elif spec.tag == "case4":
            values[9] = Fraction(spec.w)
        elif spec.tag == "case5":
            values[11] = Fraction(spec.v)
        elif spec.tag == "case_f3_only":
            values[3] = Fraction(spec.y)
    return MultFn(bound, values, sieve)


def make_square(bound: int) -> MultFn:
    """The completely multiplicative square f(n) = n**2 (not a solution)."""
    sieve = FactorSieve(bound)
    return MultFn(bound, {q: Fraction(q * q) for q in sieve.prime_powers()}, sieve)


@dataclass(frozen=True)
class Violation:
    """An exact counterexample found by one of the checkers.

    kind is "equation" (split = the four-split (s, t) of n) or
    "multiplicativity" (split = the coprime pair (m, m') with n = m * m').
    """

    kind: str
    n: int
    split: tuple[int, int]
    lhs: Fraction
    rhs: Fraction

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "split": list(self.split),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
        }


def check_functional_equation(f: MultFn, bound: int) -> list[Violation]:
    """All failures of f(n) = f(s) + f(t) over every four-split up to bound."""
    if bound > f.bound:
        raise ValueError(f"check bound {bound} exceeds function bound {f.bound}")
    precompute_two_squares(bound)
    table = f.value_table(bound)
    violations = []
    for n in range(2, bound + 1):
        for s, t in four_splits(n):
            lhs = table[n]
            rhs = table[s] + table[t]
            if lhs != rhs:
                violations.append(Violation("equation", n, (s, t), lhs, rhs))
    return violations


def check_multiplicativity(values: Mapping[int, Fraction]) -> list[Violation]:
    """All coprime pairs m < m' with values[m*m'] != values[m] * values[m'].

    values must be a full table over 1..bound with values[1] = 1.
    """
    if 1 not in values or Fraction(values[1]) != 1:
        raise ValueError("a multiplicative value table must have values[1] = 1")
    bound = max(values)
    violations = []
    for m in range(2, bound + 1):
        if m * (m + 1) > bound:
            break
        for mp in range(m + 1, bound // m + 1):
            if gcd(m, mp) != 1:
                continue
            lhs = Fraction(values[m * mp])
            rhs = Fraction(values[m]) * Fraction(values[mp])
            if lhs != rhs:
                violations.append(Violation("multiplicativity", m * mp, (m, mp), lhs, rhs))
    return violations
