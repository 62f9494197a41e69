"""Cocharacter gradings, filtration invariants and modulus exponents.

A cocharacter lam grades the Lie algebra by <a, lam> on root spaces and
0 on the Cartan.  m_of is the least filtration degree of a nilpotent
element; delta_exponent is the valuation exponent of the modulus
character of a torus element on a filtration slice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .lie import LieElement
from .rootsystem import RootSystem


@dataclass(frozen=True)
class CocharRational:
    """A rational cocharacter with its cached squared norm."""

    coords: tuple[Fraction, ...]
    norm_sq: Fraction

    @staticmethod
    def of(rs: RootSystem, coords) -> "CocharRational":
        coords = tuple(Fraction(c) for c in coords)
        return CocharRational(coords, rs.norm_sq(coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def is_primitive(self) -> bool:
        if not self.is_integral() or self.is_zero():
            return False
        g = 0
        for c in self.coords:
            g = gcd(g, c.numerator)
        return g == 1

    def primitive_multiple(self) -> tuple[tuple[int, ...], int]:
        """(lam, k) with lam primitive integral and self = lam / k."""
        if self.is_zero():
            raise ValueError("zero cocharacter has no primitive multiple")
        lcm = 1
        for c in self.coords:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self.coords]
        g = 0
        for c in ints:
            g = gcd(g, c)
        return tuple(c // g for c in ints), Fraction(lcm, g)

    def to_json(self) -> dict:
        return {"coords": [str(c) for c in self.coords], "norm_sq": str(self.norm_sq)}


@dataclass
class GradingReport:
    """Root content of every graded piece; dims count root spaces only."""

    weight_spaces: dict[int, list[int]]
    dims: dict[int, int]
    rank: int

    def dim_at(self, i: int) -> int:
        """Full dimension of the graded piece (Cartan sits at 0)."""
        return self.dims.get(i, 0) + (self.rank if i == 0 else 0)

    def to_json(self) -> dict:
        return {
            "weight_spaces": {str(i): v for i, v in sorted(self.weight_spaces.items())},
            "dims": {str(i): d for i, d in sorted(self.dims.items())},
            "rank": self.rank,
        }


def grade(rs: RootSystem, lam) -> GradingReport:
    """Assign every root to its degree <a, lam>; lam must be integral."""
    lam = tuple(lam)
    if any(Fraction(c).denominator != 1 for c in lam):
        raise ValueError("grading requires an integral cocharacter")
    spaces: dict[int, list[int]] = {}
    for i, a in enumerate(rs.roots):
        d = int(rs.pair(a, lam))
        spaces.setdefault(d, []).append(i)
    spaces = {d: sorted(v) for d, v in spaces.items()}
    return GradingReport(spaces, {d: len(v) for d, v in spaces.items()}, rs.rank)


def degrees_of(rs: RootSystem, Y: LieElement, lam) -> list:
    """Degrees of the support of Y (Cartan components count as degree 0)."""
    degs = []
    for key in Y.coeffs:
        if key[0] == "H":
            degs.append(0)
        else:
            degs.append(rs.pair(rs.roots[key[1]], lam))
    return degs


def m_of(rs: RootSystem, Y: LieElement, lam) -> int:
    """Least filtration degree: min <a, lam> over the support of Y.

    Requires Y nonzero and inside the unipotent radical of lam (all
    support degrees >= 1).
    """
    if Y.is_zero():
        raise ValueError("m is undefined for Y = 0")
    degs = degrees_of(rs, Y, lam)
    k = min(degs)
    if k < 1:
        raise ValueError("Y is not in the unipotent radical of lambda")
    return int(k)


def instability_ratio_sq(rs: RootSystem, Y: LieElement, lam) -> Fraction:
    """rho_Y(lam)^2 = m_Y(lam)^2 / (lam, lam), exact."""
    k = m_of(rs, Y, lam)
    return Fraction(k * k) / rs.norm_sq(lam)


def delta_exponent(rs: RootSystem, lam, s: int, t: int | None, v) -> int:
    """Exponent e with delta_{lam,s} (or delta_{lam,(s,t)}) = q**(-e) on
    the torus element of valuation v: the sum of <a, v> over roots with
    s <= <a, lam> (< t when t is given)."""
    if s < 1:
        raise ValueError("the filtration slice starts at s >= 1")
    if t is not None and t <= s:
        raise ValueError("need t > s")
    e = 0
    for a in rs.roots:
        d = rs.pair(a, lam)
        if d >= s and (t is None or d < t):
            e += int(rs.pair(a, v))
    return e
