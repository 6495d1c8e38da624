"""Second-order Newton polygons over a linear phi.

After translating so that phi = x, a first-order side of slope -h/e with an
irreducible residual factor psi of degree f defines the augmented valuation

    omega(sum c_j x^j) = min_j (e * v_p(c_j) + j * h),

so omega(p) = e and omega(x) = h.  A key polynomial g2 of degree e*f has
omega(g2) = e*f*h and first-order residual psi.  F is expanded in powers of
g2, the points (i, omega(A_i) + i*omega(g2)) give the order-two polygon, and
each on-side coefficient is reduced into F_p[z]/(psi), where z is the class
of x^e / p^h.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from .arith import INF, ExtNat, IntPoly, sym_mod, taylor_expand, unit_part, vp
from .finitefield import ExtensionField, factor_over_fq, poly_ring, prime_field
from .ore import Block
from .polygon import NewtonPolygon, Side, lattice_count, polygon_from_points

MAX_REFINEMENTS = 4


# ---------------------------------------------------------------------------
# Augmented valuation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AugmentedValuation:
    """e[v_p, phi, h/e] for a monic linear phi."""

    p: int
    phi: IntPoly
    h: int
    e: int

    def __post_init__(self):
        if self.phi.degree != 1 or not self.phi.is_monic():
            raise ValueError("only monic linear phi is supported")
        if self.h < 1 or self.e < 1 or gcd(self.h, self.e) != 1:
            raise ValueError("slope must be a reduced positive fraction h/e")

    @classmethod
    def at_x(cls, p: int, h: int, e: int) -> "AugmentedValuation":
        return cls(p, IntPoly.x(), h, e)

    @property
    def root(self) -> int:
        return -self.phi.coeffs[0]

    @property
    def lam(self) -> Fraction:
        return Fraction(self.h, self.e)

    def translate(self, f: IntPoly) -> IntPoly:
        """f(x + r), so that phi becomes x."""
        return f.compose_shift(self.root) if self.root else f

    def untranslate(self, f: IntPoly) -> IntPoly:
        return f.compose_shift(-self.root) if self.root else f

    def __call__(self, f: IntPoly) -> ExtNat:
        return omega_x(self.p, self.h, self.e, taylor_expand(f, self.root))


def omega_x(p: int, h: int, e: int, coeffs) -> ExtNat:
    """omega of sum coeffs[j] x^j with phi = x."""
    best = INF
    for j, c in enumerate(coeffs):
        if c:
            v = e * vp(c, p) + j * h
            if v < best:
                best = v
    return best


def omega_eval(w: AugmentedValuation, f: IntPoly) -> ExtNat:
    return w(f)


# ---------------------------------------------------------------------------
# Key polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KeyPoly:
    """Key polynomial g2 (original variable) with its first-order context."""

    g2: IntPoly
    w: AugmentedValuation
    psi: tuple
    source: str = "generic"

    @property
    def f(self) -> int:
        return len(self.psi) - 1

    @property
    def omega(self) -> int:
        return self.w.e * self.f * self.w.h

    @property
    def local(self) -> IntPoly:
        """g2 with phi translated to x."""
        return self.w.translate(self.g2)


def generic_key(w: AugmentedValuation, psi) -> IntPoly:
    """sum_k lift(psi_k) phi^(e k) p^(h (f - k)), lifts taken in [-p/2, p/2)."""
    p, h, e = w.p, w.h, w.e
    f = len(psi) - 1
    coeffs = [0] * (e * f + 1)
    for k, c in enumerate(psi):
        coeffs[e * k] = sym_mod(c, p) * p ** (h * (f - k)) if k < f else 1
    return w.untranslate(IntPoly(coeffs))


# Key polynomials for phi = x, keyed by (p, h, e, psi) with psi over F_p.
_CATALOG = {
    (2, 1, 3, (1, 1)): ["x^3-2", "x^3-2x-2", "x^3-2x^2-2"],
    (2, 1, 2, (1, 1)): ["x^2-2", "x^2-2x-2", "x^2-2x-6"],
    (2, 1, 2, (1, 1, 1)): ["x^4-2x^2-4", "x^4-2x^3-2x^2-4x-12", "x^4-2x^3-6x^2-4x-12"],
    (2, 2, 3, (1, 1)): ["x^3-16", "x^3-4"],
    (3, 1, 2, (2, 1)): ["x^2-3"],
    (3, 1, 2, (1, 1)): ["x^2+3"],
}


def parse_poly(text: str) -> IntPoly:
    """Parse a polynomial in x such as ``x^3-2x^2-2``."""
    s = text.replace(" ", "").replace("*", "").replace("−", "-")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    terms = re.findall(r"([+-])(\d*)(x(?:\^(\d+))?)?", s)
    if "".join(sg + c + xx for sg, c, xx, _ in terms) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, int] = {}
    for sign, c, xpart, exp in terms:
        if not c and not xpart:
            raise ValueError(f"cannot parse polynomial {text!r}")
        val = int(c) if c else 1
        deg = (int(exp) if exp else 1) if xpart else 0
        coeffs[deg] = coeffs.get(deg, 0) + (val if sign == "+" else -val)
    n = max(coeffs)
    return IntPoly(coeffs.get(i, 0) for i in range(n + 1))


def level1_residual(w: AugmentedValuation, g: IntPoly) -> Optional[tuple]:
    """First-order residual of g for the slope of ``w``, if g is a candidate key.

    Returns None unless g is monic of degree e*f and omega(g) = h * deg g,
    i.e. the whole polygon of g is one side of slope -h/e.
    """
    p, h, e = w.p, w.h, w.e
    loc = w.translate(g)
    f_deg, rem = divmod(g.degree, e)
    if rem or not g.is_monic() or omega_x(p, h, e, loc.coeffs) != h * g.degree:
        return None
    out = []
    for k in range(f_deg + 1):
        c = loc[e * k]
        nu = h * (f_deg - k)
        on_side = c != 0 and vp(c, p) == nu
        out.append((c // p ** nu) % p if on_side else 0)
    return poly_ring(prime_field(p)).trim(out)


def key_poly_catalog(p: int, context) -> list[KeyPoly]:
    """Candidate keys for ``context`` = (w, psi): catalogued ones, then generic.

    Catalogued keys apply to phi = x only and are kept only when they pass the
    key test (correct omega value and first-order residual psi).
    """
    w, psi = context
    if w.p != p:
        raise ValueError("prime does not match the valuation")
    psi = tuple(psi)
    out, seen = [], set()
    if w.root == 0:
        for text in _CATALOG.get((p, w.h, w.e, psi), []):
            g = parse_poly(text)
            if level1_residual(w, g) == psi and g not in seen:
                out.append(KeyPoly(g, w, psi, "catalog"))
                seen.add(g)
    g = generic_key(w, psi)
    if g not in seen:
        out.append(KeyPoly(g, w, psi, "generic"))
    return out


def catalog_entries(p: int, h: int, e: int, psi) -> list[IntPoly]:
    """Raw catalogue polynomials, before the key test."""
    return [parse_poly(t) for t in _CATALOG.get((p, h, e, tuple(psi)), [])]


# ---------------------------------------------------------------------------
# Residue field of order two and the residue map
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Level2Field:
    """F_p[z]/(psi) together with the element z (the class of x^e / p^h)."""

    field: object
    z: object

    @classmethod
    def build(cls, p: int, psi) -> "Level2Field":
        Fp = prime_field(p)
        if len(psi) == 2:
            return cls(Fp, (-psi[0]) % p)
        K = ExtensionField(Fp, tuple(psi), "z")
        return cls(K, K.gen())


def level2_field(key: KeyPoly) -> Level2Field:
    return Level2Field.build(key.w.p, key.psi)


def residue(w: AugmentedValuation, L2: Level2Field, A_local: IntPoly):
    """Normalised first-order residue of A (phi = x, deg A < deg g2).

    With alpha*h - beta*e = 1 the monomial pi = x^alpha / p^beta has omega 1.
    Dividing A by pi^omega(A) leaves, on the omega-minimum, unit multiples of
    powers of x^e / p^h, which reduce to powers of z.
    """
    p, h, e = w.p, w.h, w.e
    K = L2.field
    V = omega_x(p, h, e, A_local.coeffs)
    if V is INF:
        return K.zero
    alpha = pow(h, -1, e) if e > 1 else 0
    zinv = K.inv(L2.z)
    acc = K.zero
    for j, c in enumerate(A_local.coeffs):
        if not c or e * vp(c, p) + j * h != V:
            continue
        k, r = divmod(j - alpha * V, e)
        assert r == 0
        zk = K.pow(L2.z, k) if k >= 0 else K.pow(zinv, -k)
        acc = K.add(acc, K.mul(K.from_int(unit_part(c, p)), zk))
    return acc


# ---------------------------------------------------------------------------
# Order-two polygon and residuals
# ---------------------------------------------------------------------------

def g_expand(G: IntPoly, g: IntPoly) -> list[IntPoly]:
    """Coefficients A_i with G = sum A_i g^i and deg A_i < deg g."""
    out = []
    rest = G
    while not rest.is_zero():
        rest, r = rest.divmod_monic(g)
        out.append(r)
    return out


@dataclass
class Order2Polygon:
    key: KeyPoly
    expansion: list[IntPoly]  # g2-expansion of F with phi translated to x
    points: list[tuple[int, int]]  # (i, mu_i) for i <= ell with A_i != 0
    ell: int
    polygon: NewtonPolygon

    @property
    def sides(self):
        return self.polygon.sides

    @property
    def vertices(self):
        return self.polygon.vertices

    @property
    def floor(self) -> int:
        return self.points[-1][1]


def order2_polygon(F: IntPoly, key: KeyPoly, w: AugmentedValuation | None = None) -> Order2Polygon:
    """Principal order-two polygon of F with respect to ``key``.

    Only abscissae up to ell, the first index where mu attains its minimum,
    are kept; ell equals the multiplicity of psi in the first-order residual.
    """
    w = w or key.w
    if w != key.w:
        raise ValueError("key does not belong to this valuation")
    p, h, e = w.p, w.h, w.e
    A = g_expand(w.translate(F), key.local)
    wg = key.omega
    pts = []
    for i, a in enumerate(A):
        v = omega_x(p, h, e, a.coeffs)
        if v is not INF:
            pts.append((i, v + i * wg))
    mu_min = min(mu for _, mu in pts)
    ell = min(i for i, mu in pts if mu == mu_min)
    principal = [(i, mu) for i, mu in pts if i <= ell]
    poly = polygon_from_points(principal, principal=True)
    return Order2Polygon(key, A, principal, ell, poly)


def order2_residual(F: IntPoly, key: KeyPoly, w: AugmentedValuation | None, side: Side,
                    polygon: Order2Polygon | None = None):
    """Residual polynomial of order two for ``side``, over F_p[z]/(psi)."""
    op = polygon or order2_polygon(F, key, w)
    return _residual(op, side, level2_field(key))


def _residual(op: Order2Polygon, side: Side, L2: Level2Field):
    K = L2.field
    mu = dict(op.points)
    coeffs = []
    for i, u in side.lattice_points():
        if mu.get(i, INF) == u:
            coeffs.append(residue(op.key.w, L2, op.expansion[i]))
        elif mu.get(i, INF) < u:
            raise ValueError("side is not part of this order-two polygon")
        else:
            coeffs.append(K.zero)
    poly = poly_ring(K).trim(coeffs)
    if len(poly) != side.degree + 1 or K.is_zero(poly[0]):
        raise ValueError("side is not part of this order-two polygon")
    return poly


# ---------------------------------------------------------------------------
# Splitting from order two
# ---------------------------------------------------------------------------

@dataclass
class Order2Side:
    side: Side
    residual: tuple
    factors: list

    @property
    def squarefree(self) -> bool:
        return all(m == 1 for _, m in self.factors)


def order2_split(first_order: tuple[int, int], side2: Side, residual_factors):
    """Branches (e1*e2, f1*deg psi2) for one order-two side.

    Returns (branches, blocks); a repeated factor becomes an unresolved block.
    """
    e1, f1 = first_order
    e2 = side2.e
    branches, blocks = [], []
    for psi2, m in residual_factors:
        d2 = len(psi2) - 1
        if m == 1:
            branches.append((e1 * e2, f1 * d2))
        else:
            blocks.append(Block(e1 * e2, f1 * d2, e1 * e2 * f1 * d2 * m))
    return branches, blocks


@dataclass
class Order2Result:
    key: KeyPoly
    polygon: Order2Polygon
    sides: list[Order2Side]
    level2: Level2Field
    branches: list[tuple[int, int]] = field(default_factory=list)
    blocks: list[Block] = field(default_factory=list)
    ind: int = 0
    refinements: int = 0
    tried: list[KeyPoly] = field(default_factory=list)

    @property
    def conclusive(self) -> bool:
        return not self.blocks


def _analyse(F: IntPoly, key: KeyPoly):
    op = order2_polygon(F, key)
    L2 = level2_field(key)
    sides = []
    for s in op.sides:
        res = _residual(op, s, L2)
        sides.append(Order2Side(s, res, factor_over_fq(L2.field, res)))
    return op, L2, sides


def _steep_length(op: Order2Polygon, slope: int) -> int:
    return sum(s.length for s in op.sides if s.height > slope * s.length)


def refinement_candidates(key: KeyPoly, h2: int):
    """Keys g2 + L with omega(L) = omega(g2) + h2 and deg L < deg g2."""
    w = key.w
    p, h, e, f = w.p, w.h, w.e, key.f
    W = key.omega + h2
    r0 = (pow(h, -1, e) * W) % e if e > 1 else 0
    slots = []
    for k in range(f):
        j = r0 + e * k
        nu, rem = divmod(W - j * h, e)
        if rem == 0 and nu >= 0:
            slots.append((j, nu))
    for digits in itertools.product(range(p), repeat=len(slots)):
        if not any(digits):
            continue
        coeffs = [0] * (e * f)
        for (j, nu), c in zip(slots, digits):
            coeffs[j] = sym_mod(c, p) * p ** nu
        L = IntPoly(coeffs)
        yield KeyPoly(key.g2 + w.untranslate(L), w, key.psi, "refined")


def refine(F: IntPoly, key: KeyPoly, first_order: tuple[int, int]) -> Order2Result:
    """Order-two data for ``key``.

    While exactly one side with e2 = 1 carries a single repeated linear
    residual factor, the key is replaced by the candidate that lengthens the
    steeper part of the polygon the most.
    """
    op, L2, sides = _analyse(F, key)
    tried = [key]
    refinements = 0
    while refinements < MAX_REFINEMENTS:
        bad = [s for s in sides if not s.squarefree]
        if len(bad) != 1 or bad[0].side.e != 1:
            break
        s = bad[0]
        repeated = [g for g, m in s.factors if m > 1]
        if len(repeated) != 1 or len(repeated[0]) != 2:
            break
        h2 = s.side.h
        base = _steep_length(op, h2)
        best = None
        for cand in refinement_candidates(op.key, h2):
            gain = _steep_length(order2_polygon(F, cand), h2)
            if gain > base and (best is None or gain > best[0]):
                best = (gain, cand)
        if best is None:
            break
        tried.append(best[1])
        op, L2, sides = _analyse(F, best[1])
        refinements += 1
    branches, blocks = [], []
    for s in sides:
        b, bl = order2_split(first_order, s.side, s.factors)
        branches += b
        blocks += bl
    ind = first_order[1] * lattice_count(op.polygon, op.floor)
    return Order2Result(op.key, op, sides, L2, branches, blocks, ind, refinements, tried)


def analyse_branch(F: IntPoly, w: AugmentedValuation, psi, keys: list[KeyPoly] | None = None) -> Order2Result:
    """Order-two analysis of the psi-part of the side of slope -h/e of F.

    Keys are tried in order; the first conclusive result wins, otherwise the
    result of the first key is returned.
    """
    psi = tuple(psi)
    keys = keys if keys is not None else key_poly_catalog(w.p, (w, psi))
    first = (w.e, len(psi) - 1)
    fallback = None
    for key in keys:
        result = refine(F, key, first)
        if result.conclusive:
            return result
        fallback = fallback or result
    return fallback
