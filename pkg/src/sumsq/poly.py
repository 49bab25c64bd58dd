"""Sparse multivariate polynomials over exact rationals in named unknowns.

Unknowns are plain strings ("f2", "f3", ...), monomials are sorted tuples of
unknown names with multiplicity, and the empty tuple is the constant term.
All arithmetic is exact; a Poly is never mutated after construction.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import gcd
from typing import Iterator, Mapping

Monomial = tuple[str, ...]

Rational = Fraction | int


def mono_key(mono: Monomial) -> tuple[int, Monomial]:
    """Fixed total order on monomials: total degree, then lexicographic."""
    return (len(mono), mono)


class Poly:
    """Immutable sparse polynomial: mapping monomial -> nonzero Fraction."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Rational] | None = None):
        accum: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if not coeff:
                    continue
                mono = tuple(sorted(mono))
                if mono in accum:
                    coeff = accum[mono] + coeff
                    if coeff:
                        accum[mono] = coeff
                    else:
                        del accum[mono]
                else:
                    accum[mono] = coeff
        self._terms: dict[Monomial, Fraction] = accum
        self._hash: int | None = None

    @classmethod
    def const(cls, value: Rational) -> "Poly":
        return cls({(): Fraction(value)})

    @classmethod
    def atom(cls, name: str) -> "Poly":
        return cls({(name,): Fraction(1)})

    def terms(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in the fixed monomial order, highest first."""
        for mono in sorted(self._terms, key=mono_key, reverse=True):
            yield mono, self._terms[mono]

    def is_zero(self) -> bool:
        return not self._terms

    def constant_value(self) -> Fraction | None:
        """The value if the polynomial is constant, else None."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1 and () in self._terms:
            return self._terms[()]
        return None

    def atoms(self) -> set[str]:
        names: set[str] = set()
        for mono in self._terms:
            names.update(mono)
        return names

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(sorted(mono)), Fraction(0))

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=mono_key)

    def total_degree(self) -> int:
        return max((len(m) for m in self._terms), default=0)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Poly" | Rational) -> "Poly":
        other = _coerce(other)
        merged = dict(self._terms)
        for mono, coeff in other._terms.items():
            merged[mono] = merged.get(mono, Fraction(0)) + coeff
        return Poly(merged)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Poly" | Rational) -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "Poly" | Rational) -> "Poly":
        return _coerce(other) + (-self)

    def __mul__(self, other: "Poly" | Rational) -> "Poly":
        other = _coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = tuple(sorted(m1 + m2))
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative powers are not defined for Poly")
        out = Poly.const(1)
        for _ in range(exponent):
            out = out * self
        return out

    def scale(self, factor: Rational) -> "Poly":
        factor = Fraction(factor)
        return Poly({m: c * factor for m, c in self._terms.items()})

    # -- structure queries used by the deduction rules ----------------------

    def linear_coefficient(self, name: str) -> Fraction | None:
        """The rational c when the poly is c*name + p with p free of name.

        Returns None when name is absent or occurs inside any larger monomial.
        """
        coeff: Fraction | None = None
        for mono, c in self._terms.items():
            if name in mono:
                if mono != (name,):
                    return None
                coeff = c
        return coeff

    def monomial_content(self) -> Monomial:
        """Largest monomial dividing every term (empty for constants)."""
        counters = [Counter(m) for m in self._terms]
        if not counters:
            return ()
        common = counters[0]
        for counter in counters[1:]:
            common = common & counter
            if not common:
                return ()
        return tuple(sorted(common.elements()))

    def without_factor(self, mono: Monomial) -> "Poly":
        """Divide every term by the given monomial (which must divide all terms)."""
        factor = Counter(mono)
        out: dict[Monomial, Fraction] = {}
        for term, coeff in self._terms.items():
            counted = Counter(term)
            if (counted & factor) != factor:
                raise ValueError(f"{mono} does not divide every term")
            out[tuple(sorted((counted - factor).elements()))] = coeff
        return Poly(out)

    def substitute(self, name: str, replacement: "Poly" | Rational) -> "Poly":
        """Replace every occurrence of an unknown by a polynomial."""
        if all(name not in mono for mono in self._terms):
            return self
        replacement = _coerce(replacement)
        out = Poly()
        for mono, coeff in self._terms.items():
            count = mono.count(name)
            if count == 0:
                out = out + Poly({mono: coeff})
            else:
                rest = tuple(a for a in mono if a != name)
                out = out + (replacement ** count) * Poly({rest: coeff})
        return out

    def evaluate(self, assignment: Mapping[str, Rational]) -> Fraction:
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            value = coeff
            for name in mono:
                value *= Fraction(assignment[name])
            total += value
        return total

    def primitive(self) -> "Poly":
        """Scaled copy: integer coefficients, content 1, positive leading coefficient."""
        if not self._terms:
            return self
        denom_lcm = 1
        for c in self._terms.values():
            denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
        nums = [abs(c.numerator * (denom_lcm // c.denominator)) for c in self._terms.values()]
        num_gcd = 0
        for n in nums:
            num_gcd = gcd(num_gcd, n)
        factor = Fraction(denom_lcm, num_gcd)
        if self._terms[self.leading_monomial()] < 0:
            factor = -factor
        return self.scale(factor)

    # -- protocol -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.constant_value() == Fraction(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self.terms()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for mono, coeff in self.terms():
            body = "*".join(mono)
            if not body:
                text = str(abs(coeff))
            elif abs(coeff) == 1:
                text = body
            else:
                text = f"{abs(coeff)}*{body}"
            if not parts:
                parts.append(text if coeff > 0 else f"-{text}")
            else:
                parts.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def to_json(self) -> list[dict]:
        """Structured form: list of {monomial, coeff} with exact string coefficients."""
        return [{"monomial": list(m), "coeff": str(c)} for m, c in self.terms()]

    @classmethod
    def from_json(cls, data: list[dict]) -> "Poly":
        return cls({tuple(item["monomial"]): Fraction(item["coeff"]) for item in data})


def _coerce(value: "Poly" | Rational) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    raise TypeError(f"cannot use {type(value).__name__} as a polynomial")
