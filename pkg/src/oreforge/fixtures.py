"""Reference corpus: worked examples, splitting shapes and order-two polygons.

Every representative (a, b, m) below is irreducible and was checked against an
independent computation of the prime decomposition and of nu_p((Z_K : Z[alpha])).
``stated`` holds the decomposition as the theory states it for the congruence
class; ``corrected`` is present where that statement is wrong, and ``shape`` is
the decomposition of the concrete representative.  Pairs are (e, f).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

Shape = tuple  # tuple of (e, f), sorted


@dataclass(frozen=True)
class Example:
    a: int
    b: int
    ms: tuple  # degrees of the middle term covered by the example
    verdict: str
    divisors: dict  # p -> nu_p(i(K)), None when only divisibility is claimed
    iK: Optional[int] = None
    note: str = ""


@dataclass(frozen=True)
class ShapeFixture:
    id: str
    p: int
    a: int
    b: int
    m: int
    shape: Shape
    nu_index: int  # nu_p((Z_K : Z[alpha])) for the representative
    stated: tuple  # alternatives, each a Shape
    corrected: Optional[tuple] = None
    note: str = ""

    @property
    def expected(self) -> tuple:
        return self.corrected if self.corrected is not None else self.stated

    @property
    def verbatim(self) -> bool:
        return self.corrected is None


@dataclass(frozen=True)
class VertexFixture:
    id: str
    a: int
    b: int
    p: int
    h: int
    e: int
    psi: tuple  # first-order residual factor over F_p, low degree first
    key: str
    vertices: tuple  # (x, y); y None means "at least w_min"
    w_min: Optional[int] = None

    def matches(self, vertices) -> bool:
        vertices = list(vertices)
        if len(vertices) != len(self.vertices):
            return False
        for (x, y), (ex, ey) in zip(vertices, self.vertices):
            if x != ex:
                return False
            if ey is None:
                if y < self.w_min:
                    return False
            elif y != ey:
                return False
        return True


@dataclass(frozen=True)
class OmegaSpot:
    p: int
    h: int
    e: int
    poly: str
    value: int


NOT_MONOGENIC = "NotMonogenic"
ALL_M = tuple(range(1, 12))

EXAMPLES = [
    Example(72, 51, ALL_M, NOT_MONOGENIC, {2: None}),
    Example(108, 26, ALL_M, NOT_MONOGENIC, {3: None}),
    Example(60, 15, (6,), NOT_MONOGENIC, {2: None}),
    Example(14, 90, (10,), NOT_MONOGENIC, {3: None}),
    Example(576, 386, (1,), NOT_MONOGENIC, {3: None},
            note="b = 386 is 2 times an odd number, so F is 2-Eisenstein and 2 does not divide i(K); "
                 "(a, b) = (0, 8) mod 9 makes 3 a common index divisor"),
    Example(84, 147, (1,), NOT_MONOGENIC, {2: 1}, iK=2),
    Example(120, -610, (1,), NOT_MONOGENIC, {3: 1}, iK=3),
    Example(45996, 373907, (1,), NOT_MONOGENIC, {2: 1, 3: 1}, iK=6),
    Example(336, 5195, (1,), NOT_MONOGENIC, {2: 2, 3: 1}, iK=12),
    Example(24576, 216128, (1,), NOT_MONOGENIC, {2: 3, 3: 1}, iK=24),
]

# (a, b) = (64, 112) mod 256 is the class the fifth example was meant to sit in
CLASS_64_112 = (1344, -3728)

OMEGA_SPOTS = [
    OmegaSpot(2, 1, 2, "x", 1),
    OmegaSpot(2, 1, 3, "x^3-2", 3),
    OmegaSpot(2, 1, 2, "x^2-2", 2),
    OmegaSpot(2, 1, 2, "x^4-2x^2-4", 4),
    OmegaSpot(2, 2, 3, "x", 2),
    OmegaSpot(2, 2, 3, "x^3-16", 6),
    OmegaSpot(2, 2, 3, "x^3-4", 6),
    OmegaSpot(3, 1, 2, "x^2-3", 2),
    OmegaSpot(3, 1, 2, "x^2+3", 2),
]

SHAPES = [
    ShapeFixture('p2.odd.03mod8', p=2, a=4288, b=3947, m=1, shape=((2, 2), (2, 2), (2, 2)), nu_index=6,
                 stated=(((2, 2), (2, 2), (2, 2)),)),
    ShapeFixture('p2.odd.47mod8', p=2, a=4508, b=2783, m=1, shape=((2, 2), (2, 4)), nu_index=6,
                 stated=(((2, 1), (2, 4)),), corrected=(((2, 2), (2, 4)),),
                 note='stated residue degree 1 for the prime from x - 1; the residual y^2+y+1 is irreducible, so f = 2'),
    ShapeFixture('p2.odd.43.u_gt', p=2, a=1700, b=-4517, m=1, shape=((1, 1), (1, 1), (2, 1), (2, 4)), nu_index=9,
                 stated=(((1, 1), (1, 1), (2, 1), (4, 2)),), corrected=(((1, 1), (1, 1), (2, 1), (2, 4)),),
                 note='stated e = 4, f = 2 for the prime from x^2+x+1; a single side of length 2 with irreducible residual of degree 1 over F_4 gives e = 2, f = 4'),
    ShapeFixture('p2.odd.43.u_eq', p=2, a=-2676, b=1107, m=1, shape=((1, 2), (2, 1), (2, 4)), nu_index=8,
                 stated=(((1, 2), (2, 1), (4, 2)),), corrected=(((1, 2), (2, 1), (2, 4)),),
                 note='same e/f swap for the prime from x^2+x+1'),
    ShapeFixture('p2.odd.43.u_lt_even', p=2, a=-1044, b=-1533, m=1, shape=((2, 1), (2, 1), (2, 4)), nu_index=7,
                 stated=(((2, 1), (2, 1), (4, 2)),), corrected=(((2, 1), (2, 1), (2, 4)),),
                 note='same e/f swap for the prime from x^2+x+1'),
    ShapeFixture('p2.odd.43.u_lt_odd_div', p=2, a=-2556, b=4227, m=1, shape=((1, 1), (1, 1), (2, 1), (2, 4)), nu_index=8,
                 stated=(((1, 1), (1, 1), (2, 1), (4, 2)),), corrected=(((1, 1), (1, 1), (2, 1), (2, 4)),),
                 note='same e/f swap for the prime from x^2+x+1'),
    ShapeFixture('p2.odd.21mod4', p=2, a=2830, b=821, m=1, shape=((1, 1), (3, 1), (4, 2)), nu_index=1,
                 stated=(((1, 1), (3, 1), (4, 2)),)),
    ShapeFixture('p2.phi_x.two_sides', p=2, a=17920, b=-59392, m=1, shape=((1, 1), (11, 1)), nu_index=49,
                 stated=(((1, 1), (11, 1)),)),
    ShapeFixture('p2.phi_x.coprime', p=2, a=-39936, b=30, m=1, shape=((12, 1),), nu_index=0,
                 stated=(((12, 1),),)),
    ShapeFixture('p2.phi_x.nu3_9', p=2, a=8, b=296, m=1, shape=((4, 1), (4, 2)), nu_index=12,
                 stated=(((4, 1), (4, 2)),)),
    ShapeFixture('p2.nu4.a', p=2, a=-2608, b=1264, m=1, shape=((12, 1),), nu_index=18,
                 stated=(((12, 1),),)),
    ShapeFixture('p2.nu4.b', p=2, a=-3424, b=3728, m=1, shape=((12, 1),), nu_index=21,
                 stated=(((12, 1),),)),
    ShapeFixture('p2.nu4.c', p=2, a=-1184, b=1328, m=1, shape=((3, 1), (9, 1)), nu_index=25,
                 stated=(((3, 1), (9, 1)),)),
    ShapeFixture('p2.nu4.d', p=2, a=-1088, b=-4176, m=1, shape=((6, 2),), nu_index=26,
                 stated=(((6, 2),),)),
    ShapeFixture('p2.nu4.e', p=2, a=1344, b=-3728, m=1, shape=((3, 1), (3, 1), (6, 1)), nu_index=28,
                 stated=(((3, 1), (3, 1), (6, 1)),)),
    ShapeFixture('p2.nu4.f', p=2, a=-2688, b=1392, m=1, shape=((3, 2), (6, 1)), nu_index=28,
                 stated=(((3, 2), (6, 1)),)),
    ShapeFixture('p2.nu4.g', p=2, a=768, b=-3344, m=1, shape=((3, 1), (3, 1), (6, 1)), nu_index=28,
                 stated=(((3, 1), (3, 1), (6, 1)),)),
    ShapeFixture('p2.nu6.a', p=2, a=-3264, b=4800, m=1, shape=((4, 1), (4, 2)), nu_index=30,
                 stated=(((4, 1), (4, 2)),)),
    ShapeFixture('p2.nu6.b1', p=2, a=3200, b=3136, m=1, shape=((4, 1), (4, 2)), nu_index=33,
                 stated=(((4, 1), (4, 2)),)),
    ShapeFixture('p2.nu6.b2', p=2, a=-4096, b=2368, m=1, shape=((4, 1), (4, 2)), nu_index=36,
                 stated=(((4, 1), (4, 2)),)),
    ShapeFixture('p2.nu6.b3.split', p=2, a=3328, b=-2752, m=1, shape=((2, 1), (2, 1), (4, 2)), nu_index=37,
                 stated=(((2, 1), (2, 1), (4, 2)),)),
    ShapeFixture('p2.nu6.b3.inert', p=2, a=-256, b=1856, m=1, shape=((2, 2), (4, 2)), nu_index=37,
                 stated=(((2, 2), (4, 2)),)),
    ShapeFixture('p2.nu6.b4.a256', p=2, a=3328, b=-4032, m=1, shape=((4, 1), (4, 2)), nu_index=36,
                 stated=(((4, 1), (4, 2)),)),
    ShapeFixture('p2.nu6.b4.576', p=2, a=-3584, b=3648, m=1, shape=((2, 2), (2, 2), (2, 2)), nu_index=39,
                 stated=(((2, 2), (2, 4)),), corrected=(((2, 2), (2, 2), (2, 2)),),
                 note='the order-two residual over F_4 splits; three primes of residue degree 2 make 2 a common index divisor'),
    ShapeFixture('p2.nu6.b4.64', p=2, a=3584, b=64, m=1, shape=((2, 1), (2, 1), (2, 2), (2, 2)), nu_index=39,
                 stated=(((2, 1), (2, 1), (2, 2), (2, 2)),)),
    ShapeFixture('p2.nu6.c1', p=2, a=128, b=-3648, m=1, shape=((4, 1), (4, 2)), nu_index=33,
                 stated=(((4, 1), (4, 2)),)),
    ShapeFixture('p2.nu6.c2', p=2, a=4608, b=3520, m=1, shape=((2, 1), (2, 1), (2, 2), (2, 2)), nu_index=36,
                 stated=(((2, 1), (2, 1), (2, 4)),), corrected=(((2, 1), (2, 1), (2, 2), (2, 2)),),
                 note='the order-two residual over F_4 splits; two primes of each residue degree 1 and 2 make 2 a common index divisor'),
    ShapeFixture('p2.nu6.c3', p=2, a=2816, b=-3392, m=1, shape=((2, 2), (2, 2), (2, 2)), nu_index=36,
                 stated=(((2, 2), (2, 2), (2, 2)),)),
    ShapeFixture('p2.nu8.b', p=2, a=-512, b=1280, m=1, shape=((12, 1),), nu_index=43,
                 stated=(((12, 1),),)),
    ShapeFixture('p2.nu8.c', p=2, a=-3584, b=-256, m=1, shape=((12, 1),), nu_index=46,
                 stated=(((12, 1),),)),
    ShapeFixture('p2.nu8.d', p=2, a=2048, b=-1280, m=1, shape=((6, 2),), nu_index=48,
                 stated=(((6, 2),),)),
    ShapeFixture('p2.nu8.e', p=2, a=3072, b=-256, m=1, shape=((6, 1), (6, 1)), nu_index=49,
                 stated=(((6, 1), (6, 1)),)),
    ShapeFixture('p2.nu8.f', p=2, a=6144, b=-2304, m=1, shape=((3, 2), (6, 1)), nu_index=50,
                 stated=(((3, 2), (6, 1)),)),
    ShapeFixture('p2.nu8.g', p=2, a=4096, b=7936, m=1, shape=((3, 1), (3, 1), (6, 1)), nu_index=50,
                 stated=(((3, 1), (3, 1), (6, 1)),)),
    ShapeFixture('p3.b1.01mod9', p=3, a=-1539, b=-4760, m=1, shape=((1, 2), (1, 2), (2, 2), (2, 2)), nu_index=4,
                 stated=(((1, 2), (1, 2), (2, 2), (2, 2)),)),
    ShapeFixture('p3.m.35mod9', p=3, a=-3363, b=1958, m=1, shape=((1, 1), (2, 1), (3, 1), (3, 2)), nu_index=1,
                 stated=(((1, 1), (2, 1), (3, 1), (3, 2)),)),
    ShapeFixture('p3.m.iii_b', p=3, a=3678, b=4952, m=1, shape=((3, 1), (3, 1), (3, 2)), nu_index=1,
                 stated=(((3, 1), (3, 1), (3, 2)),)),
    ShapeFixture('p3.m.iii_c', p=3, a=4119, b=3197, m=1, shape=((1, 1), (1, 2), (3, 1), (3, 2)), nu_index=3,
                 stated=(((1, 3), (3, 1), (3, 2)), ((1, 1), (1, 2), (3, 1), (3, 2)))),
    ShapeFixture('p3.m.iii_d1', p=3, a=4794, b=308, m=1, shape=((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)), nu_index=4,
                 stated=(((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)),)),
    ShapeFixture('p3.m.iii_d2.even', p=3, a=636, b=-1204, m=1, shape=((1, 1), (2, 1), (3, 1), (3, 2)), nu_index=3,
                 stated=(((1, 1), (2, 1), (3, 1), (3, 2)),)),
    ShapeFixture('p3.m.iii_d2.odd_inert', p=3, a=-4386, b=-4120, m=1, shape=((1, 1), (1, 2), (3, 1), (3, 2)), nu_index=4,
                 stated=(((1, 1), (1, 2), (3, 1), (3, 2)),)),
    ShapeFixture('p3.m.iii_d2.odd_split', p=3, a=-4710, b=3737, m=1, shape=((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)), nu_index=4,
                 stated=(((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)),)),
    ShapeFixture('p3.m.iii_d3.inert', p=3, a=2877, b=4898, m=1, shape=((1, 1), (1, 2), (3, 1), (3, 2)), nu_index=4,
                 stated=(((1, 1), (1, 2), (3, 1), (3, 2)),)),
    ShapeFixture('p3.m.iii_d3.div', p=3, a=-4440, b=3224, m=1, shape=((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)), nu_index=5,
                 stated=(((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)),)),
    ShapeFixture('p3.m.iii_e', p=3, a=1437, b=-277, m=1, shape=((1, 3), (3, 1), (3, 2)), nu_index=3,
                 stated=(((1, 3), (3, 1), (3, 2)),)),
    ShapeFixture('p3.m.iii_f', p=3, a=-102, b=4799, m=1, shape=((1, 1), (1, 2), (3, 1), (3, 2)), nu_index=3,
                 stated=(((1, 1), (1, 2), (3, 1), (3, 2)),)),
    ShapeFixture('p3.m.iii_g.div', p=3, a=789, b=4772, m=1, shape=((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)), nu_index=4,
                 stated=(((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)),)),
    ShapeFixture('p3.m.iii_h', p=3, a=402, b=4079, m=1, shape=((1, 1), (1, 2), (3, 1), (3, 2)), nu_index=3,
                 stated=(((1, 3), (3, 1), (3, 2)), ((1, 1), (1, 2), (2, 2), (3, 1))), corrected=(((1, 3), (3, 1), (3, 2)), ((1, 1), (1, 2), (3, 1), (3, 2))),
                 note='second printed alternative has e = 2 on the last prime (sum ef = 10); the prime from x^2+1 has e = 3'),
    ShapeFixture('p3.m.iii_i.div', p=3, a=-3243, b=569, m=1, shape=((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)), nu_index=4,
                 stated=(((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)),)),
    ShapeFixture('p3.p.65mod9', p=3, a=-4845, b=446, m=1, shape=((1, 1), (2, 1), (3, 1), (3, 2)), nu_index=1,
                 stated=(((1, 1), (2, 1), (3, 1), (3, 2)),)),
    ShapeFixture('p3.p.iv_b', p=3, a=-1662, b=3044, m=1, shape=((3, 1), (3, 1), (3, 2)), nu_index=1,
                 stated=(((3, 1), (3, 1), (3, 2)),)),
    ShapeFixture('p3.p.iv_c', p=3, a=1686, b=-205, m=1, shape=((1, 3), (3, 1), (3, 2)), nu_index=3,
                 stated=(((1, 3), (2, 2), (3, 1)), ((1, 1), (1, 2), (2, 2), (3, 1))), corrected=(((1, 3), (3, 1), (3, 2)), ((1, 1), (1, 2), (3, 1), (3, 2))),
                 note='stated e = 2 on the prime from x^2+1 (sum ef = 10)'),
    ShapeFixture('p3.p.iv_d1', p=3, a=2874, b=-1501, m=1, shape=((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)), nu_index=4,
                 stated=(((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)),)),
    ShapeFixture('p3.p.iv_d2.even', p=3, a=3306, b=3143, m=1, shape=((1, 1), (2, 1), (3, 1), (3, 2)), nu_index=3,
                 stated=(((1, 1), (2, 1), (3, 1), (3, 2)),)),
    ShapeFixture('p3.p.iv_d2.odd_inert', p=3, a=-4362, b=-4120, m=1, shape=((1, 1), (1, 2), (3, 1), (3, 2)), nu_index=4,
                 stated=(((1, 1), (1, 2), (3, 1), (3, 2)),)),
    ShapeFixture('p3.p.iv_d2.odd_split', p=3, a=579, b=-4039, m=1, shape=((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)), nu_index=4,
                 stated=(((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)),)),
    ShapeFixture('p3.p.iv_d3.inert', p=3, a=4008, b=-3526, m=1, shape=((1, 1), (1, 2), (3, 1), (3, 2)), nu_index=4,
                 stated=(((1, 1), (1, 2), (3, 1), (3, 2)),)),
    ShapeFixture('p3.p.iv_d3.div', p=3, a=-3174, b=-2932, m=1, shape=((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)), nu_index=5,
                 stated=(((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)),)),
    ShapeFixture('p3.p.iv_e', p=3, a=-3075, b=110, m=1, shape=((1, 1), (1, 2), (3, 1), (3, 2)), nu_index=3,
                 stated=(((1, 3), (2, 2), (3, 1)), ((1, 1), (1, 2), (2, 2), (3, 1))), corrected=(((1, 3), (3, 1), (3, 2)), ((1, 1), (1, 2), (3, 1), (3, 2))),
                 note='stated e = 2 on the prime from x^2+1 (sum ef = 10)'),
    ShapeFixture('p3.p.iv_f.div', p=3, a=3378, b=4025, m=1, shape=((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)), nu_index=4,
                 stated=(((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)),)),
    ShapeFixture('p3.p.iv_g', p=3, a=-2868, b=2342, m=1, shape=((1, 3), (3, 1), (3, 2)), nu_index=3,
                 stated=(((1, 3), (3, 1), (3, 2)),)),
    ShapeFixture('p3.p.iv_h', p=3, a=-3543, b=-4678, m=1, shape=((1, 1), (1, 2), (3, 1), (3, 2)), nu_index=3,
                 stated=(((1, 1), (1, 2), (3, 1), (3, 2)),)),
    ShapeFixture('p3.p.iv_i.div', p=3, a=3855, b=-3301, m=1, shape=((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)), nu_index=4,
                 stated=(((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)),)),
    ShapeFixture('p3.phi_x.two_sides', p=3, a=50301, b=104976, m=1, shape=((1, 1), (11, 1)), nu_index=37,
                 stated=(((1, 1), (11, 1)),)),
    ShapeFixture('p3.phi_x.coprime', p=3, a=0, b=-33, m=1, shape=((12, 1),), nu_index=0,
                 stated=(((12, 1),),)),
    ShapeFixture('p3.phi_x.nu2_10', p=3, a=209952, b=225, m=1, shape=((6, 2),), nu_index=6,
                 stated=(((6, 2),), ((6, 1), (6, 1)))),
    ShapeFixture('p3.phi_x.nu3_9', p=3, a=196830, b=459, m=1, shape=((4, 1), (4, 2)), nu_index=18,
                 stated=(((4, 3),), ((4, 1), (4, 2)), ((12, 1),), ((4, 1), (8, 1)), ((4, 1), (4, 1), (4, 1)))),
    ShapeFixture('p3.phi_x.nu4', p=3, a=0, b=-1377, m=1, shape=((3, 2), (3, 2)), nu_index=18,
                 stated=(((3, 1), (3, 1), (3, 3)), ((3, 3), (3, 3))), corrected=(((3, 1), (3, 1), (3, 2)), ((3, 2), (3, 2))),
                 note='stated f = 3 for every prime (sum ef = 15 and 18); a slope of denominator 3 over x gives f = 1 or 2 from the residual factors'),
    ShapeFixture('p3.nu6.plus', p=3, a=2187, b=729, m=1, shape=((2, 6),), nu_index=36,
                 stated=(((6, 2),), ((2, 2), (4, 2)), ((2, 2), (2, 2), (2, 2)), ((2, 2), (2, 4)), ((2, 6),))),
    ShapeFixture('p3.nu6.a', p=3, a=-2916, b=1458, m=1, shape=((6, 1), (6, 1)), nu_index=30,
                 stated=(((6, 1), (6, 1)),)),
    ShapeFixture('p3.nu6.b', p=3, a=-2187, b=8019, m=1, shape=((6, 1), (6, 1)), nu_index=32,
                 stated=(((6, 1), (6, 1)),)),
    ShapeFixture('p3.nu6.c', p=3, a=4374, b=-7290, m=1, shape=((2, 1), (2, 2), (2, 3)), nu_index=36,
                 stated=(((2, 1), (2, 1), (2, 2), (2, 2)),), corrected=(((2, 1), (2, 2), (2, 3)),),
                 note='stated two primes of each residue degree 1 and 2; PARI and the engine give one prime of each residue degree 1, 2 and 3, so one order-two residual is an irreducible cubic'),
    ShapeFixture('p3.nu6.d', p=3, a=6561, b=-729, m=1, shape=((2, 1), (2, 1), (2, 1), (2, 1), (2, 2)), nu_index=36,
                 stated=(((2, 1), (2, 1), (2, 2), (2, 2)),), corrected=(((2, 1), (2, 1), (2, 1), (2, 1), (2, 2)),),
                 note='one order-two residual splits further; four primes of residue degree 1 exceed the three monic linear polynomials over F_3, so 3 is a common index divisor'),
    ShapeFixture('p2.thm2.m4', p=2, a=130, b=3345, m=4, shape=((2, 2), (4, 2)), nu_index=2,
                 stated=(((2, 2), (4, 2)),)),
    ShapeFixture('p2.thm2.m8', p=2, a=-302, b=3881, m=8, shape=((2, 2), (4, 2)), nu_index=2,
                 stated=(((2, 2), (4, 2)),)),
    ShapeFixture('p11.unit_a.a', p=11, a=-3002, b=3454, m=1, shape=((1, 1), (11, 1)), nu_index=0,
                 stated=(((1, 1), (11, 1)),)),
    ShapeFixture('p11.unit_a.b', p=11, a=4053, b=44, m=1, shape=((1, 1), (1, 1), (10, 1)), nu_index=1,
                 stated=(((1, 1), (1, 1), (10, 1)),)),
    ShapeFixture('p5.phi_x.two_sides', p=5, a=-12109375, b=-46875000, m=1, shape=((1, 1), (11, 1)), nu_index=43,
                 stated=(((1, 1), (11, 1)),)),
    ShapeFixture('p5.phi_x.coprime', p=5, a=0, b=2812500, m=1, shape=((12, 1),), nu_index=33,
                 stated=(((12, 1),),)),
    ShapeFixture('p5.unit', p=5, a=-4586, b=-2349, m=1, shape=((1, 1), (1, 1), (1, 4), (1, 6)), nu_index=1,
                 stated=(((1, 2), (1, 4), (1, 6)), ((1, 4), (1, 6), (2, 1)), ((1, 1), (1, 1), (1, 4), (1, 6)))),
    ShapeFixture('p7.phi_x.two_sides', p=7, a=238, b=132590423, m=1, shape=((1, 1), (11, 1)), nu_index=1,
                 stated=(((1, 1), (11, 1)),)),
    ShapeFixture('p7.unit', p=7, a=1509, b=-1781, m=1, shape=((1, 1), (1, 1), (1, 3), (1, 7)), nu_index=1,
                 stated=(((1, 2), (1, 3), (1, 7)), ((1, 3), (1, 7), (2, 1)), ((1, 1), (1, 1), (1, 3), (1, 7)))),
]

VERTICES = [
    VertexFixture('iv.a', a=1695696, b=906160, p=2, h=1, e=3, psi=(1, 1), key='x^3-2',
                  vertices=((0, 13), (4, 12)), w_min=None),
    VertexFixture('iv.b', a=1695712, b=906128, p=2, h=1, e=3, psi=(1, 1), key='x^3-2',
                  vertices=((0, 15), (4, 12)), w_min=None),
    VertexFixture('iv.c', a=1695712, b=906160, p=2, h=1, e=3, psi=(1, 1), key='x^3-2x-2',
                  vertices=((0, None), (1, 16), (4, 12)), w_min=18),
    VertexFixture('iv.d', a=1695808, b=906160, p=2, h=1, e=3, psi=(1, 1), key='x^3-2',
                  vertices=((0, 18), (4, 12)), w_min=None),
    VertexFixture('iv.e', a=1695936, b=906352, p=2, h=1, e=3, psi=(1, 1), key='x^3-2x^2-2',
                  vertices=((0, None), (1, 18), (2, 15), (4, 12)), w_min=22),
    VertexFixture('iv.f', a=1695872, b=906352, p=2, h=1, e=3, psi=(1, 1), key='x^3-2',
                  vertices=((0, 21), (2, 15), (4, 12)), w_min=None),
    VertexFixture('iv.g', a=1695872, b=906480, p=2, h=1, e=3, psi=(1, 1), key='x^3-2',
                  vertices=((0, None), (1, 18), (2, 15), (4, 12)), w_min=22),
    VertexFixture('v.a[x^2-2]', a=1695808, b=906176, p=2, h=1, e=2, psi=(1, 1), key='x^2-2',
                  vertices=((0, 13), (2, 12)), w_min=None),
    VertexFixture('v.a[x^4-2x^2-4]', a=1695808, b=906176, p=2, h=1, e=2, psi=(1, 1, 1), key='x^4-2x^2-4',
                  vertices=((0, 13), (2, 12)), w_min=None),
    VertexFixture('v.b1[x^2-2x-2]', a=1695872, b=906304, p=2, h=1, e=2, psi=(1, 1), key='x^2-2x-2',
                  vertices=((0, 15), (2, 12)), w_min=None),
    VertexFixture('v.b2[x^2-2x-2]', a=1695744, b=906560, p=2, h=1, e=2, psi=(1, 1), key='x^2-2x-2',
                  vertices=((0, 17), (2, 12)), w_min=None),
    VertexFixture('v.b1[x^4-2x^3-2x^2-4x-12]', a=1695872, b=906304, p=2, h=1, e=2, psi=(1, 1, 1), key='x^4-2x^3-2x^2-4x-12',
                  vertices=((0, 15), (2, 12)), w_min=None),
    VertexFixture('v.b2[x^4-2x^3-2x^2-4x-12]', a=1695744, b=906560, p=2, h=1, e=2, psi=(1, 1, 1), key='x^4-2x^3-2x^2-4x-12',
                  vertices=((0, 17), (2, 12)), w_min=None),
    VertexFixture('v.b3[g22]', a=1696000, b=906560, p=2, h=1, e=2, psi=(1, 1, 1), key='x^4-2x^3-2x^2-4x-12',
                  vertices=((0, 17), (2, 12)), w_min=None),
    VertexFixture('v.b3.split[g21]', a=1696512, b=906560, p=2, h=1, e=2, psi=(1, 1), key='x^2-2x-2',
                  vertices=((0, None), (1, 15), (2, 12)), w_min=19),
    VertexFixture('v.b3.inert[g21]', a=1696512, b=907072, p=2, h=1, e=2, psi=(1, 1), key='x^2-2x-2',
                  vertices=((0, 18), (2, 12)), w_min=None),
    VertexFixture('v.b4.a256[x^2-2x-6]', a=1696000, b=906304, p=2, h=1, e=2, psi=(1, 1), key='x^2-2x-6',
                  vertices=((0, 17), (2, 12)), w_min=None),
    VertexFixture('v.b4.576[x^2-2x-6]', a=1696256, b=906816, p=2, h=1, e=2, psi=(1, 1), key='x^2-2x-6',
                  vertices=((0, 18), (2, 12)), w_min=None),
    VertexFixture('v.b4.a256[x^4-2x^3-6x^2-4x-12]', a=1696000, b=906304, p=2, h=1, e=2, psi=(1, 1, 1), key='x^4-2x^3-6x^2-4x-12',
                  vertices=((0, 17), (2, 12)), w_min=None),
    VertexFixture('v.b4.576[x^4-2x^3-6x^2-4x-12]', a=1696256, b=906816, p=2, h=1, e=2, psi=(1, 1, 1), key='x^4-2x^3-6x^2-4x-12',
                  vertices=((0, 18), (2, 12)), w_min=None),
    VertexFixture('v.b4.64[g21]', a=1696256, b=906304, p=2, h=1, e=2, psi=(1, 1), key='x^2-2x-6',
                  vertices=((0, None), (1, 15), (2, 12)), w_min=19),
    VertexFixture('v.b4.64[g22]', a=1696256, b=906304, p=2, h=1, e=2, psi=(1, 1, 1), key='x^4-2x^3-6x^2-4x-12',
                  vertices=((0, 19), (1, 15), (2, 12)), w_min=None),
    VertexFixture('v.c1[x^2-2]', a=1695872, b=906432, p=2, h=1, e=2, psi=(1, 1), key='x^2-2',
                  vertices=((0, 15), (2, 12)), w_min=None),
    VertexFixture('v.c1[x^4-2x^2-4]', a=1695872, b=906432, p=2, h=1, e=2, psi=(1, 1, 1), key='x^4-2x^2-4',
                  vertices=((0, 15), (2, 12)), w_min=None),
    VertexFixture('v.c2[g21]', a=1696000, b=906688, p=2, h=1, e=2, psi=(1, 1), key='x^2-2',
                  vertices=((0, None), (1, 14), (2, 12)), w_min=17),
    VertexFixture('v.c2[g22]', a=1696000, b=906688, p=2, h=1, e=2, psi=(1, 1, 1), key='x^4-2x^2-4',
                  vertices=((0, 16), (2, 12)), w_min=None),
    VertexFixture('v.c3[g21]', a=1696000, b=906432, p=2, h=1, e=2, psi=(1, 1), key='x^2-2',
                  vertices=((0, 16), (2, 12)), w_min=None),
    VertexFixture('v.c3[g22]', a=1696000, b=906432, p=2, h=1, e=2, psi=(1, 1, 1), key='x^4-2x^2-4',
                  vertices=((0, None), (1, 14), (2, 12)), w_min=17),
    VertexFixture('vi.a', a=1696000, b=906496, p=2, h=2, e=3, psi=(1, 1), key='x^3-4',
                  vertices=((0, 26), (4, 24)), w_min=None),
    VertexFixture('vi.b', a=1696256, b=906496, p=2, h=2, e=3, psi=(1, 1), key='x^3-4',
                  vertices=((0, 27), (4, 24)), w_min=None),
    VertexFixture('vi.c', a=1696256, b=907008, p=2, h=2, e=3, psi=(1, 1), key='x^3-4',
                  vertices=((0, 29), (4, 24)), w_min=None),
    VertexFixture('vi.d', a=1696768, b=908032, p=2, h=2, e=3, psi=(1, 1), key='x^3-4',
                  vertices=((0, 30), (4, 24)), w_min=None),
    VertexFixture('vi.e', a=1696768, b=909056, p=2, h=2, e=3, psi=(1, 1), key='x^3-4',
                  vertices=((0, 32), (2, 27), (4, 24)), w_min=None),
    VertexFixture('vi.f', a=1697792, b=907008, p=2, h=2, e=3, psi=(1, 1), key='x^3-4',
                  vertices=((0, 33), (2, 27), (4, 24)), w_min=None),
    VertexFixture('vi.g', a=1697792, b=909056, p=2, h=2, e=3, psi=(1, 1), key='x^3-4',
                  vertices=((0, None), (1, 30), (2, 27), (4, 24)), w_min=34),
    VertexFixture('nu3_6.a[x^2-3]', a=2013498, b=1171503, p=3, h=1, e=2, psi=(2, 1), key='x^2-3',
                  vertices=((0, 13), (3, 12)), w_min=None),
    VertexFixture('nu3_6.b[x^2-3]', a=2816856, b=758160, p=3, h=1, e=2, psi=(2, 1), key='x^2-3',
                  vertices=((0, 14), (3, 12)), w_min=None),
    VertexFixture('nu3_6.c[x^2-3]', a=2812482, b=760347, p=3, h=1, e=2, psi=(2, 1), key='x^2-3',
                  vertices=((0, 15), (3, 12)), w_min=None),
    VertexFixture('nu3_6.d[x^2-3]', a=2814669, b=760347, p=3, h=1, e=2, psi=(2, 1), key='x^2-3',
                  vertices=((0, None), (1, 14), (3, 12)), w_min=16),
    VertexFixture('nu3_6.a[x^2+3]', a=2013498, b=1171503, p=3, h=1, e=2, psi=(1, 1), key='x^2+3',
                  vertices=((0, 13), (3, 12)), w_min=None),
    VertexFixture('nu3_6.b[x^2+3]', a=2816856, b=758160, p=3, h=1, e=2, psi=(1, 1), key='x^2+3',
                  vertices=((0, 14), (3, 12)), w_min=None),
    VertexFixture('nu3_6.c[x^2+3]', a=2812482, b=760347, p=3, h=1, e=2, psi=(1, 1), key='x^2+3',
                  vertices=((0, 15), (3, 12)), w_min=None),
    VertexFixture('nu3_6.d[x^2+3]', a=2814669, b=760347, p=3, h=1, e=2, psi=(1, 1), key='x^2+3',
                  vertices=((0, None), (1, 14), (3, 12)), w_min=16),
]


def shape_fixtures(p: Optional[int] = None) -> list[ShapeFixture]:
    return [f for f in SHAPES if p is None or f.p == p]


def vertex_fixtures(p: Optional[int] = None) -> list[VertexFixture]:
    return [f for f in VERTICES if p is None or f.p == p]
