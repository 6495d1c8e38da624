"""Dedekind's criterion, p-regularity and first-order splitting via Ore's theorem."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .arith import IntPoly, format_poly
from .finitefield import factor_mod_p, factor_over_fq, poly_ring, prime_field
from .polygon import (
    NewtonPolygon,
    PhiExpansion,
    Side,
    phi_expand,
    phi_index,
    principal_polygon,
    residual_poly,
)


class NotRegularError(ValueError):
    """ore_split was asked for a shape that Ore's theorem does not deliver."""


# ---------------------------------------------------------------------------
# Shapes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Block:
    """Unresolved part of a decomposition.

    The primes it stands for all have ramification divisible by ``e_unit`` and
    residue degree divisible by ``f_unit``; their e*f add up to ``degree``.
    """

    e_unit: int
    f_unit: int
    degree: int


@dataclass(frozen=True)
class SplittingShape:
    p: int
    branches: tuple[tuple[int, int], ...]
    conclusive: bool = True
    method: str = "ore-regular"
    unresolved: tuple[Block, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(sorted(self.branches)))

    @property
    def total(self) -> int:
        return sum(e * f for e, f in self.branches) + sum(b.degree for b in self.unresolved)

    def describe(self) -> str:
        parts = [f"(e={e},f={f})" for e, f in self.branches]
        parts += [f"[?: e%{b.e_unit}=0, f%{b.f_unit}=0, sum ef={b.degree}]" for b in self.unresolved]
        return " ".join(parts)


# ---------------------------------------------------------------------------
# Dedekind's criterion
# ---------------------------------------------------------------------------

def _centered(c: int, p: int) -> int:
    """Representative of c mod p in (-p/2, p/2]."""
    r = c % p
    return r - p if 2 * r > p else r


def lift(g, p: int, symmetric: bool = True) -> IntPoly:
    """Monic integer lift of a monic polynomial over F_p.

    The centred lift writes a linear factor as x - r and every other factor
    with coefficients, in both cases taken in (-p/2, p/2].  Over F_2 this
    gives x - 1 and x^2 + x + 1.
    """
    if not symmetric:
        return IntPoly(g)
    if len(g) == 2:
        return IntPoly((-_centered(-g[0], p), 1))
    return IntPoly([_centered(c, p) for c in g[:-1]] + [1])


def dedekind_divides(F: IntPoly, p: int) -> bool:
    """True iff p divides (Z_K : Z[alpha]) for a root alpha of the monic F."""
    R = poly_ring(prime_field(p))
    factors = factor_mod_p(F, p)
    g = IntPoly((1,))
    h = IntPoly((1,))
    for phi, mult in factors:
        lp = lift(phi, p, symmetric=False)
        g = g * lp
        h = h * lp ** (mult - 1)
    M = (F - g * h).exact_div(p)
    gb, hb, Mb = (R.from_ints(P.coeffs) for P in (g, h, M))
    d = R.gcd(gb, hb)
    if len(d) <= 1:
        return False
    return len(R.gcd(d, Mb)) > 1


# ---------------------------------------------------------------------------
# Ore reports
# ---------------------------------------------------------------------------

@dataclass
class SideReport:
    side: Side
    field: object
    residual: tuple
    factors: list

    @property
    def squarefree(self) -> bool:
        return all(m == 1 for _, m in self.factors)

    def residual_str(self, var: str = "y") -> str:
        return poly_ring(self.field).fmt(self.residual, var)


@dataclass
class PhiReport:
    phi: IntPoly
    multiplicity: int
    expansion: PhiExpansion
    polygon: NewtonPolygon
    sides: list[SideReport]
    ind: int

    @property
    def regular(self) -> bool:
        return all(s.squarefree for s in self.sides)

    def branches(self) -> list[tuple[int, int]]:
        out = []
        for s in self.sides:
            for psi, _ in s.factors:
                out.append((s.side.e, self.phi.degree * (len(psi) - 1)))
        return out


@dataclass
class OreReport:
    p: int
    phis: list[PhiReport]

    @property
    def index_lower_bound(self) -> int:
        return sum(r.ind for r in self.phis)

    @property
    def regular(self) -> bool:
        return all(r.regular for r in self.phis)

    @property
    def shape(self) -> Optional[SplittingShape]:
        if not self.regular:
            return None
        return SplittingShape(self.p, tuple(b for r in self.phis for b in r.branches()))


def analyze_phi(F: IntPoly, phi: IntPoly, p: int, multiplicity: int) -> PhiReport:
    exp = phi_expand(F, phi, p)
    poly = principal_polygon(exp)
    sides = []
    for side in poly.sides:
        K, res = residual_poly(exp, side)
        sides.append(SideReport(side, K, res, factor_over_fq(K, res)))
    return PhiReport(phi, multiplicity, exp, poly, sides, phi_index(poly, phi.degree))


def phi_lifts(F: IntPoly, p: int) -> list[tuple[IntPoly, int]]:
    """Symmetric monic lifts of the irreducible factors of F mod p."""
    return [(lift(g, p), m) for g, m in factor_mod_p(F, p)]


def ore_report(F: IntPoly, p: int, overrides: dict | None = None) -> OreReport:
    """Ore data for every factor of F mod p.

    ``overrides`` maps the position of a factor to a replacement lift (used by
    the shift search).
    """
    reports = []
    for k, (phi, m) in enumerate(phi_lifts(F, p)):
        if overrides and k in overrides:
            phi = overrides[k]
        reports.append(analyze_phi(F, phi, p, m))
    return OreReport(p, reports)


def is_p_regular(F: IntPoly, p: int) -> tuple[bool, OreReport]:
    rep = ore_report(F, p)
    return rep.regular, rep


def ore_split(F: IntPoly, p: int) -> SplittingShape:
    """Prime decomposition from Ore's theorem; refuses non-regular input."""
    rep = ore_report(F, p)
    if not rep.regular:
        raise NotRegularError(f"F is not {p}-regular")
    return rep.shape


def shift_candidates(residue: int, p: int, bound: int):
    """residue, residue + p, residue - p, residue + 2p, ... (``bound`` values)."""
    r = residue
    yield r
    k = 1
    n = 1
    while n < bound:
        yield r + k * p
        n += 1
        if n < bound:
            yield r - k * p
            n += 1
        k += 1


def find_regular_shift(F: IntPoly, p: int, residue: int, bound: int = 64):
    """First s = residue (mod p) for which F is (x - s)-regular, with its report."""
    m = None
    for phi, mult in phi_lifts(F, p):
        if phi.degree == 1 and (-phi.coeffs[0] - residue) % p == 0:
            m = mult
            break
    if m is None:
        raise ValueError(f"x - {residue} is not a factor of F mod {p}")
    for s in shift_candidates(residue, p, bound):
        rep = analyze_phi(F, IntPoly((-s, 1)), p, m)
        if rep.regular:
            return s, rep
    return None
