"""First-order Newton polygons: phi-expansions, principal polygons, residual polynomials."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd
from typing import Sequence

from .arith import INF, ExtNat, IntPoly, Valuation, format_poly, gauss_vp
from .finitefield import poly_ring, prime_field, residue_field


@dataclass(frozen=True)
class PhiExpansion:
    """F = sum coeffs[i] * phi^i with deg coeffs[i] < deg phi."""

    F: IntPoly
    phi: IntPoly
    p: int
    coeffs: tuple[IntPoly, ...]
    vals: tuple[ExtNat, ...]

    @property
    def length(self) -> int:
        return len(self.coeffs) - 1

    def reconstruct(self) -> IntPoly:
        acc = IntPoly()
        for a in reversed(self.coeffs):
            acc = acc * self.phi + a
        return acc

    def points(self) -> list[tuple[int, int]]:
        return [(i, u) for i, u in enumerate(self.vals) if u is not INF]


def phi_expand(F: IntPoly, phi: IntPoly, p: int) -> PhiExpansion:
    """Expansion of F in powers of the monic polynomial phi."""
    if not phi.is_monic() or phi.degree < 1:
        raise ValueError("phi must be monic of positive degree")
    Valuation(p)
    coeffs = []
    rest = F
    if phi.degree == 1:
        # Taylor shift is much cheaper than repeated division
        from .arith import taylor_expand
        coeffs = [IntPoly((c,)) for c in taylor_expand(F, -phi.coeffs[0])]
    else:
        while not rest.is_zero():
            rest, r = rest.divmod_monic(phi)
            coeffs.append(r)
    vals = tuple(gauss_vp(a, p) for a in coeffs)
    return PhiExpansion(F, phi, p, tuple(coeffs), vals)


@dataclass(frozen=True)
class Side:
    """Segment of a Newton polygon from ``start`` to ``end`` (x increasing)."""

    start: tuple[int, int]
    end: tuple[int, int]

    @property
    def length(self) -> int:
        return self.end[0] - self.start[0]

    @property
    def height(self) -> int:
        return self.start[1] - self.end[1]

    @property
    def degree(self) -> int:
        return gcd(self.length, self.height)

    @property
    def e(self) -> int:
        return self.length // self.degree

    @property
    def h(self) -> int:
        return self.height // self.degree

    @property
    def slope(self) -> Fraction:
        return Fraction(-self.height, self.length)

    def lattice_points(self) -> list[tuple[int, int]]:
        s, u = self.start
        return [(s + t * self.e, u - t * self.h) for t in range(self.degree + 1)]

    def y_at(self, x) -> Fraction:
        s, u = self.start
        return Fraction(u) - Fraction(self.height, self.length) * (x - s)

    def describe(self) -> str:
        return f"{self.start}->{self.end} slope -{self.h}/{self.e} degree {self.degree}"


@dataclass(frozen=True)
class NewtonPolygon:
    points: tuple[tuple[int, int], ...]
    sides: tuple[Side, ...]

    @property
    def vertices(self) -> list[tuple[int, int]]:
        if not self.sides:
            return []
        return [self.sides[0].start] + [s.end for s in self.sides]

    @property
    def length(self) -> int:
        return sum(s.length for s in self.sides)

    def y_at(self, x) -> Fraction:
        for s in self.sides:
            if s.start[0] <= x <= s.end[0]:
                return s.y_at(x)
        raise ValueError(f"{x} outside the polygon")


def lower_hull(points: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Vertices of the lower convex hull, x increasing (monotone chain)."""
    pts = sorted(set(points))
    # keep the lowest point for each abscissa
    best: dict[int, int] = {}
    for x, y in pts:
        if x not in best or y < best[x]:
            best[x] = y
    pts = sorted(best.items())
    hull: list[tuple[int, int]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # pop when hull[-1] is on or above the chord hull[-2] -> pt
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def polygon_from_points(points: Sequence[tuple[int, int]], principal: bool = True) -> NewtonPolygon:
    """Lower hull; with ``principal`` only the strictly decreasing part is kept."""
    if not points:
        raise ValueError("empty point cloud")
    hull = lower_hull(points)
    sides = []
    for a, b in zip(hull, hull[1:]):
        if principal and b[1] >= a[1]:
            break
        sides.append(Side(a, b))
    return NewtonPolygon(tuple(sorted(points)), tuple(sides))


def principal_polygon(exp: PhiExpansion) -> NewtonPolygon:
    """Principal phi-polygon: negative-slope part of the hull of (i, u_i)."""
    pts = exp.points()
    if not pts:
        raise ValueError("all coefficients vanish")
    if exp.vals[0] is INF:
        # phi divides F exactly: the polygon has an infinite first side
        raise ValueError("phi divides F; the principal polygon is unbounded")
    return polygon_from_points(pts, principal=True)


def lattice_count(poly: NewtonPolygon, floor_y: int = 0) -> int:
    """#{(x, y) integral : x >= 1 within the polygon, floor_y < y <= N(x)}."""
    if not poly.sides:
        return 0
    x0 = poly.sides[0].start[0]
    x1 = poly.sides[-1].end[0]
    total = 0
    for x in range(x0 + 1, x1 + 1):
        top = floor(poly.y_at(x))
        if top > floor_y:
            total += top - floor_y
    return total


def phi_index(poly: NewtonPolygon, degphi: int) -> int:
    """deg(phi) times the lattice points on or under the principal polygon."""
    if not poly.sides:
        return 0
    end_y = poly.sides[-1].end[1]
    return degphi * lattice_count(poly, end_y)


# ---------------------------------------------------------------------------
# Residual polynomials
# ---------------------------------------------------------------------------

def residual_coefficient(exp: PhiExpansion, i: int, field_=None):
    """red(a_i / p^u_i) in F_phi."""
    p = exp.p
    F = field_ or residue_field(exp.phi.mod(p), p)
    a = exp.coeffs[i]
    u = exp.vals[i]
    scaled = a.exact_div(p ** u)
    if F.degree == 1:
        return scaled[0] % p
    return F.reduce(tuple(c % p for c in scaled.coeffs))


def residual_poly(exp: PhiExpansion, side: Side):
    """R(y) over F_phi for a side of the principal polygon; returns (field, poly)."""
    p = exp.p
    F = residue_field(exp.phi.mod(p), p)
    R = poly_ring(F)
    coeffs = []
    for k, (i, u) in enumerate(side.lattice_points()):
        if i >= len(exp.vals) or exp.vals[i] is INF or exp.vals[i] > u:
            coeffs.append(F.zero)
        elif exp.vals[i] < u:
            raise ValueError("side does not belong to this expansion")
        else:
            coeffs.append(residual_coefficient(exp, i, F))
    poly = R.trim(coeffs)
    if len(poly) != side.degree + 1 or F.is_zero(poly[0]):
        raise ValueError("side does not belong to this expansion")
    return F, poly


# ---------------------------------------------------------------------------
# Display
# ---------------------------------------------------------------------------

def render_polygon(poly: NewtonPolygon, width: int = 48) -> str:
    """ASCII sketch plus vertex and slope annotations."""
    lines = []
    verts = poly.vertices
    lines.append("vertices: " + ", ".join(f"({x},{y})" for x, y in verts))
    for s in poly.sides:
        lines.append(f"  side {s.describe()}")
    if not verts:
        return "\n".join(lines)
    xmax = max(x for x, _ in poly.points)
    ymax = max(y for _, y in poly.points)
    if xmax > width or ymax > 24:
        return "\n".join(lines)
    on_hull = set(verts)
    cloud = set(poly.points)
    for y in range(ymax, -1, -1):
        row = []
        for x in range(xmax + 1):
            if (x, y) in on_hull:
                row.append("o")
            elif (x, y) in cloud:
                row.append("*")
            elif poly.sides and verts[0][0] <= x <= verts[-1][0] and poly.y_at(x) == y:
                row.append("+")
            else:
                row.append(".")
        lines.append(f"{y:3d} " + " ".join(row))
    lines.append("    " + " ".join(str(x % 10) for x in range(xmax + 1)))
    return "\n".join(lines)
