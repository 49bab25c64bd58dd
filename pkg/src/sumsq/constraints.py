"""Generation of polynomial constraints from the four-square functional equation.

Unknowns live on prime powers only ("f2", "f3", "f4", ...); composite values
are expanded eagerly through multiplicativity, so every equation instance
f(n) = f(s) + f(t) becomes a polynomial identity in prime-power atoms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .multiplicative import FactorSieve
from .poly import Poly
from .squares import four_splits, precompute_two_squares


def atom_name(q: int) -> str:
    return f"f{q}"


def atom_value(name: str) -> int:
    return int(name[1:])


def value_expr(n: int, sieve: FactorSieve) -> Poly:
    """f(n) as a polynomial in prime-power atoms (the constant 1 for n = 1)."""
    expr = Poly.const(1)
    for part in sieve.prime_power_parts(n):
        expr = expr * Poly.atom(atom_name(part))
    return expr


@dataclass(frozen=True)
class Origin:
    """Where a constraint came from; enough to re-derive it from scratch.

    kind "equation": instance f(n) - f(s) - f(t) with split (s, t).
    kind "coprime": multiplicativity f(m*m') - f(m)*f(m') with pair (m, m').
    kind "derived": produced during propagation from the labelled parents.
    """

    kind: str
    n: int | None = None
    split: tuple[int, int] | None = None
    pair: tuple[int, int] | None = None
    parents: tuple[str, ...] = ()

    def label(self) -> str:
        if self.kind == "equation":
            return f"E{self.n}({self.split[0]}+{self.split[1]})"
        if self.kind == "coprime":
            return f"M({self.pair[0]},{self.pair[1]})"
        return f"D[{','.join(self.parents)}]"

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "label": self.label()}
        if self.n is not None:
            out["n"] = self.n
        if self.split is not None:
            out["split"] = list(self.split)
        if self.pair is not None:
            out["pair"] = list(self.pair)
        if self.parents:
            out["parents"] = list(self.parents)
        return out


@dataclass(frozen=True)
class Constraint:
    """A polynomial asserted to equal zero, with its provenance."""

    poly: Poly
    origin: Origin

    @property
    def label(self) -> str:
        return self.origin.label()


def generate_constraints(bound: int) -> list[Constraint]:
    """Every equation-instance and coprime-pair constraint up to bound.

    One constraint f(n) - f(s) - f(t) per n <= bound and four-split (s, t) of
    n, plus one constraint f(m*m') - f(m)*f(m') per coprime pair
    2 <= m < m' with m*m' <= bound. Because composite values are expanded
    through prime powers, every coprime-pair constraint is identically zero;
    they are generated anyway so ingestion can retire them explicitly.
    """
    if bound < 4:
        raise ValueError("bound must be at least 4")
    precompute_two_squares(bound)
    sieve = FactorSieve(bound)
    exprs = {n: value_expr(n, sieve) for n in range(1, bound + 1)}

    out: list[Constraint] = []
    for n in range(2, bound + 1):
        for s, t in four_splits(n):
            poly = exprs[n] - exprs[s] - exprs[t]
            out.append(Constraint(poly, Origin("equation", n=n, split=(s, t))))
    for m in range(2, bound + 1):
        if m * (m + 1) > bound:
            break
        for mp in range(m + 1, bound // m + 1):
            if gcd(m, mp) != 1:
                continue
            poly = exprs[m * mp] - exprs[m] * exprs[mp]
            out.append(Constraint(poly, Origin("coprime", pair=(m, mp))))
    return out


# Compact classical renderings of the equation instances driving the small-n
# derivation chain, in the traditional shorthand x = f(2), y = f(3), z = f(5).
CLASSICAL_NOTES: dict[tuple[int, tuple[int, int]], str] = {
    (4, (2, 2)): "f(4) = 2 f(2)",
    (7, (2, 5)): "f(7) = f(2) + f(5)",
    (10, (5, 5)): "x z = 2 z",
    (10, (2, 8)): "x z = x + f(8)",
    (12, (2, 10)): "2 x y = x + x z",
    (12, (4, 8)): "2 x y = f(4) + f(8)",
    (13, (5, 8)): "f(13) = f(5) + f(8)",
    (15, (5, 10)): "y z = z (1 + x)",
    (15, (2, 13)): "y z = x + f(13)",
    (19, (2, 17)): "f(19) = f(17) + f(2)",
    (21, (8, 13)): "y f(7) = f(8) + f(13)",
    (21, (4, 17)): "y f(7) = f(4) + f(17)",
    (25, (8, 17)): "f(25) = f(8) + f(17)",
    (25, (5, 20)): "f(25) = f(5) + f(4) f(5)",
    (33, (8, 25)): "y f(11) = f(8) + f(25)",
    (33, (13, 20)): "y f(11) = f(13) + f(4) f(5)",
    (34, (5, 29)): "x f(17) = z + f(29)",
    (34, (2, 32)): "x f(17) = x + f(32)",
    (51, (10, 41)): "y f(17) = f(10) + f(41)",
    (99, (2, 97)): "f(9) f(11) = f(2) + f(97)",
}


def classical_note(origin: Origin) -> str | None:
    """The x/y/z-notation rendering of a celebrated instance, when known."""
    if origin.kind == "equation":
        return CLASSICAL_NOTES.get((origin.n, origin.split))
    return None
