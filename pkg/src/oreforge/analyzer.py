"""Common index divisors of fields defined by x^n + a x^m + b.

The engine works prime by prime: Dedekind's criterion, then Ore's theorem,
then a search for a regular shift of a linear factor, then second-order
polygons.  The resulting splitting shape goes through Engstrom's test
(p | i(K) iff more primes of some residue degree f lie above p than there
are monic irreducibles of degree f over F_p).  The closed-form theorems for
these trinomials are provided as predicates and used as cross-checks.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Optional

from .arith import INF, IntPoly, is_prime, trinomial_disc, unit_part, vp
from .finitefield import count_monic_irreducibles, factor_mod_p, poly_ring, prime_field
from .intfactor import DEFAULT_BUDGET, Budget, squarefull_part
from .ore import (
    Block,
    PhiReport,
    SplittingShape,
    analyze_phi,
    dedekind_divides,
    find_regular_shift,
    phi_lifts,
)
from .order2 import AugmentedValuation, analyse_branch

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)
SHIFT_BOUND = 64

YES, NO, UNKNOWN = "yes", "no", "unknown"


class InvalidField(ValueError):
    """The trinomial does not define a field we can analyse (e.g. reducible)."""


class UnknownEscape(RuntimeError):
    """A predicate needs an integer factorization the budget could not provide."""


class ConsistencyError(AssertionError):
    """A closed-form theorem and the engine disagree."""


# ---------------------------------------------------------------------------
# Fields
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TrinomialField:
    a: int
    b: int
    m: int = 1
    n: int = 12

    def __post_init__(self):
        if not 0 < self.m < self.n:
            raise InvalidField(f"need 0 < m < n, got m={self.m}, n={self.n}")
        if self.b == 0:
            raise InvalidField("b = 0 gives a reducible polynomial")

    @property
    def poly(self) -> IntPoly:
        return IntPoly.trinomial(self.n, self.m, self.a, self.b)

    @property
    def discriminant(self) -> int:
        return _disc(self.n, self.m, self.a, self.b)

    def normalization_defect(self) -> Optional[int]:
        """A prime p with p^(n-m) | a and p^n | b, if any (then alpha/p is integral)."""
        from sympy import integer_nthroot, primerange

        bound = integer_nthroot(abs(self.b), self.n)[0]
        for p in primerange(2, bound + 1):
            if vp(self.a, p) >= self.n - self.m and vp(self.b, p) >= self.n:
                return p
        return None

    def __str__(self):
        return str(self.poly)


@lru_cache(maxsize=4096)
def _disc(n, m, a, b):
    return trinomial_disc(n, m, a, b)


# ---------------------------------------------------------------------------
# Irreducibility over Q
# ---------------------------------------------------------------------------

def _degree_sums(F: IntPoly, p: int) -> Optional[frozenset]:
    """Degrees of all products of irreducible factors of F mod p (None if not squarefree)."""
    return _degree_sums_reduced(tuple(c % p for c in F.coeffs), p)


@lru_cache(maxsize=1 << 15)
def _degree_sums_reduced(coeffs: tuple, p: int) -> Optional[frozenset]:
    R = poly_ring(prime_field(p))
    f = R.trim(coeffs)
    if len(f) != len(coeffs) or len(R.gcd(f, R.deriv(f))) > 1:
        return None
    degs = []
    for g, d in R.distinct_degree(f):
        degs += [d] * ((len(g) - 1) // d)
    sums = {0}
    for d in degs:
        sums |= {s + d for s in sums}
    return frozenset(sums)


def is_irreducible(F: IntPoly, primes: int = 40, disc: Optional[int] = None) -> bool:
    """Irreducibility of a monic F over Q.

    Factorization patterns modulo small primes usually prove irreducibility
    (no degree is a subset sum for every prime).  When they do not, the
    answer comes from an exact factorization over Z.
    """
    n = F.degree
    possible = set(range(1, n))
    p = 2
    used = 0
    while used < primes and possible:
        sums = None if disc is not None and disc % p == 0 else _degree_sums(F, p)
        if sums is not None:
            possible &= sums
            used += 1
        p += 1
        while not is_prime(p):
            p += 1
    if not possible:
        return True
    from sympy import Poly, symbols

    x = symbols("x")
    _, factors = Poly(list(reversed(F.coeffs)), x).factor_list()
    return len(factors) == 1 and factors[0][1] == 1


# ---------------------------------------------------------------------------
# Engstrom's test
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IndexVerdict:
    p: int
    divides_iK: str  # yes / no / unknown
    nu_iK: Optional[int] = None
    witness_f: Optional[int] = None
    shape: Optional[SplittingShape] = None
    source: str = "engine"


def residue_degree_counts(branches) -> dict[int, int]:
    out: dict[int, int] = {}
    for _, f in branches:
        out[f] = out.get(f, 0) + 1
    return out


def _excess(branches, p: int) -> Optional[int]:
    """Smallest f with P_f > N_f, or None."""
    for f, P in sorted(residue_degree_counts(branches).items()):
        if P > count_monic_irreducibles(f, p):
            return f
    return None


def _block_fillings(block: Block):
    """All multisets of (e, f) consistent with the block."""
    D, r = divmod(block.degree, block.e_unit * block.f_unit)
    if r:
        raise ValueError("inconsistent block")
    cells = [(i, j) for i in range(1, D + 1) for j in range(1, D + 1) if i * j <= D]

    def rec(rest, start):
        if rest == 0:
            yield ()
            return
        for k in range(start, len(cells)):
            i, j = cells[k]
            if i * j <= rest:
                for tail in rec(rest - i * j, k):
                    yield ((i * block.e_unit, j * block.f_unit),) + tail

    return list(rec(D, 0))


def shape_completions(shape: SplittingShape):
    """Every full list of branches compatible with the unresolved blocks."""
    base = list(shape.branches)
    options = [_block_fillings(b) for b in shape.unresolved]
    for combo in itertools.product(*options):
        yield sorted(base + [br for part in combo for br in part])


def engstrom_divides(shape: SplittingShape) -> IndexVerdict:
    p = shape.p
    if not shape.unresolved:
        f = _excess(shape.branches, p)
        if f is None:
            return IndexVerdict(p, NO, 0, None, shape)
        return IndexVerdict(p, YES, nu_iK_table(shape), f, shape)
    results = set()
    witness = None
    for comp in shape_completions(shape):
        f = _excess(comp, p)
        results.add(f is not None)
        if f is not None and witness is None:
            witness = f
    if results == {False}:
        return IndexVerdict(p, NO, 0, None, shape)
    if results == {True}:
        # the divisibility is certain but the shape is not, so no table lookup
        return IndexVerdict(p, YES, None, witness, shape)
    return IndexVerdict(p, UNKNOWN, None, None, shape)


# Shapes whose exact nu_p(i(K)) is known from Engstrom's tables, keyed by p.
_NU_TABLE = {
    2: {
        ((2, 2), (2, 2), (2, 2)): 2,
        ((2, 1), (2, 1), (2, 2), (2, 2)): 3,
        ((1, 1), (1, 1), (2, 1), (2, 4)): 1,
        ((1, 1), (1, 1), (2, 1), (4, 2)): 1,
    },
    3: {
        ((1, 1), (1, 1), (1, 1), (3, 1), (3, 2)): 1,
    },
}


def nu_iK_table(shape: SplittingShape) -> Optional[int]:
    if not shape.conclusive or shape.unresolved:
        return None
    if _excess(shape.branches, shape.p) is None:
        return 0
    return _NU_TABLE.get(shape.p, {}).get(tuple(sorted(shape.branches)))


# ---------------------------------------------------------------------------
# Per-prime engine
# ---------------------------------------------------------------------------

@dataclass
class PrimeAnalysis:
    p: int
    nu_delta: int
    method: str
    shape: SplittingShape
    nu_index_alpha: Optional[int]  # exact value when known
    index_lower_bound: int
    notes: list = field(default_factory=list)
    phi_reports: list = field(default_factory=list)


_METHOD_RANK = {"discriminant": 0, "dedekind": 1, "ore-regular": 2, "shift-search": 3, "order2": 4}


def _dedekind_shape(F: IntPoly, p: int) -> list[tuple[int, int]]:
    return [(mult, len(g) - 1) for g, mult in factor_mod_p(F, p)]


def analyze_prime(F: IntPoly, p: int, nu_delta: Optional[int] = None) -> PrimeAnalysis:
    """Splitting of p and nu_p((Z_K : Z[alpha])) as far as order two reaches."""
    if nu_delta is None:
        nu_delta = vp(_poly_disc(F), p)
    if nu_delta <= 1:
        return PrimeAnalysis(p, nu_delta, "discriminant",
                             SplittingShape(p, tuple(_dedekind_shape(F, p)), method="discriminant"), 0, 0)
    if not dedekind_divides(F, p):
        return PrimeAnalysis(p, nu_delta, "dedekind",
                             SplittingShape(p, tuple(_dedekind_shape(F, p)), method="dedekind"), 0, 0)
    method = "ore-regular"
    branches: list[tuple[int, int]] = []
    blocks: list[Block] = []
    ind = 0
    notes = []
    reports = []
    for phi, mult in phi_lifts(F, p):
        rep = analyze_phi(F, phi, p, mult)
        if not rep.regular and phi.degree == 1:
            found = find_regular_shift(F, p, -phi.coeffs[0] % p, SHIFT_BOUND)
            if found is not None:
                s, rep = found
                notes.append(f"x - {s} is regular")
                method = _max_method(method, "shift-search")
        reports.append(rep)
        ind += rep.ind
        if rep.regular:
            branches += rep.branches()
            continue
        for side in rep.sides:
            for psi, m in side.factors:
                f1 = phi.degree * (len(psi) - 1)
                if m == 1:
                    branches.append((side.side.e, f1))
                elif phi.degree == 1:
                    w = AugmentedValuation(p, rep.phi, side.side.h, side.side.e)
                    res = analyse_branch(F, w, psi)
                    method = _max_method(method, "order2")
                    branches += res.branches
                    blocks += res.blocks
                    ind += res.ind
                    notes.append(f"order 2 along {rep.phi} with key {res.key.g2}")
                    if res.blocks:
                        notes.append("repeated order-2 residual factor; order 3 would be needed")
                else:
                    blocks.append(Block(side.side.e, f1, side.side.e * f1 * m))
                    notes.append(f"{rep.phi} is not regular and has degree > 1")
    shape = SplittingShape(p, tuple(branches), conclusive=not blocks, method=method, unresolved=tuple(blocks))
    return PrimeAnalysis(p, nu_delta, method, shape, None if blocks else ind, ind, notes, reports)


def _max_method(a: str, b: str) -> str:
    return a if _METHOD_RANK[a] >= _METHOD_RANK[b] else b


def _poly_disc(F: IntPoly) -> int:
    from .arith import discriminant

    return discriminant(F)


# ---------------------------------------------------------------------------
# Closed-form theorems
# ---------------------------------------------------------------------------

def _pair_mod(a: int, b: int, n: int) -> tuple[int, int]:
    return a % n, b % n


def thm1_primes(fld: TrinomialField) -> list[int]:
    """Primes forced into i(K) by the mod 8 / mod 9 conditions (any m, n = 12)."""
    out = []
    if fld.n != 12:
        return out
    if _pair_mod(fld.a, fld.b, 8) in {(0, 3), (0, 7)}:
        out.append(2)
    if _pair_mod(fld.a, fld.b, 9) in {(0, 1), (0, 8)}:
        out.append(3)
    return out


def thm1_predicate(fld: TrinomialField) -> Optional[int]:
    primes = thm1_primes(fld)
    return primes[0] if primes else None


def thm1_nu2(fld: TrinomialField) -> Optional[int]:
    """nu_2(i(K)) = 2 when (a, b) = (0, 3) mod 8."""
    return 2 if fld.n == 12 and _pair_mod(fld.a, fld.b, 8) == (0, 3) else None


def thm2_predicate(fld: TrinomialField) -> Optional[int]:
    if fld.n != 12:
        return None
    ab = _pair_mod(fld.a, fld.b, 8)
    if fld.m in (3, 4, 8, 9) and ab in {(2, 1), (6, 5)}:
        return 2
    if fld.m in (3, 6, 9) and ab == (4, 7):
        return 2
    return None


def thm3_predicate(n: int, k: int, a: int, b: int, p: int) -> bool:
    """x^n + a x^(2k) + b: the four conditions forcing the odd prime p into i(K)."""
    if not (0 < 2 * k < n) or p == 2 or not is_prime(p):
        return False
    if (2 * k * (n - 2 * k)) % p == 0:
        return False
    if (n - 2 * k) % (p - 1):
        return False
    if b == 0:
        return False
    nb = vp(b, p)
    if nb < 1 or nb % 2:
        return False
    return a % p == p - 1 and unit_part(b, p) % p == 1


def corollary_primes(fld: TrinomialField) -> list[int]:
    """Odd primes forced into i(K) when the middle exponent is even.

    p - 1 must divide n - m, so only primes up to n - m + 1 can qualify.
    """
    if fld.m % 2:
        return []
    return [p for p in range(3, fld.n - fld.m + 2)
            if is_prime(p) and thm3_predicate(fld.n, fld.m // 2, fld.a, fld.b, p)]


@dataclass
class MongCheck:
    value: Optional[bool]
    failed: list = field(default_factory=list)
    undecided: list = field(default_factory=list)


_MONG_MOD9 = {(0, 2), (0, 4), (0, 5), (0, 7), (3, 8), (3, 1), (3, 4), (3, 7),
              (6, 8), (6, 1), (6, 4), (6, 7)}


def mong_check(a: int, b: int, budget: Budget = DEFAULT_BUDGET) -> MongCheck:
    """The five conditions for Z[alpha] to be integrally closed (m = 1)."""
    out = MongCheck(None)
    if b == 0:
        raise InvalidField("b = 0")
    sqf = squarefull_part(b, budget)
    if sqf.squarefull_primes:
        out.failed.append(1)
    elif not sqf.complete:
        out.undecided.append(1)
    if a % 2 == 0 and b % 2 and _pair_mod(a, b, 4) not in {(0, 1), (2, 3)}:
        out.failed.append(2)
    if a % 3 == 0 and b % 3 and _pair_mod(a, b, 9) not in _MONG_MOD9:
        out.failed.append(3)
    if b % 11 == 0 and a % 11 and vp(b - a ** 2 + a ** 12, 11) != 1:
        out.failed.append(4)
    # condition 5 concerns the primes outside {2, 3, 11} that do not divide ab
    sfD = squarefull_part(trinomial_disc(12, 1, a, b), budget)
    if any(q not in (2, 3, 11) and (a * b) % q for q in sfD.squarefull_primes):
        out.failed.append(5)
    elif not sfD.complete:
        out.undecided.append(5)
    if out.failed:
        out.value = False
    elif not out.undecided:
        out.value = True
    return out


def mong_predicate(a: int, b: int, budget: Budget = DEFAULT_BUDGET) -> bool:
    chk = mong_check(a, b, budget)
    if chk.value is None:
        raise UnknownEscape(f"conditions {chk.undecided} need a factorization beyond the budget")
    return chk.value


@dataclass(frozen=True)
class Classification:
    divides: Optional[bool]  # None when no regular shift was found
    nu: Optional[int] = None
    case: str = ""


@lru_cache(maxsize=1024)
def _regular_shift(a: int, b: int, p: int, residue: int) -> Optional[int]:
    """First s = residue (mod p), by increasing distance, with F (x - s)-regular."""
    found = find_regular_shift(IntPoly.trinomial(12, 1, a, b), p, residue % p, SHIFT_BOUND)
    return None if found is None else found[0]


def _vals_at(a: int, b: int, s: int, p: int):
    Fs = s ** 12 + a * s + b
    dFs = 12 * s ** 11 + a
    return vp(Fs, p), vp(dFs, p), Fs


def _crit3(a, b, s, offset):
    """The x - s condition for p = 3: big value, or odd small value with unit = -1."""
    U, V, Fs = _vals_at(a, b, s, 3)
    if U is INF:
        return True
    if V is INF or U > 2 * V - offset:
        return True
    return U < 2 * V - offset and U % 2 == 1 and unit_part(Fs, 3) % 3 == 2


def thmp2_classify(a: int, b: int) -> Classification:
    """2 | i(K) for x^12 + a x + b, following the six condition groups."""
    if a % 2:
        return Classification(False, 0, "a odd")
    ab8 = _pair_mod(a, b, 8)
    if ab8 in {(0, 3), (0, 7)}:
        return Classification(True, 2 if ab8 == (0, 3) else None, "1")
    if ab8 == (4, 3):
        u, v = vp(a + b + 1, 2), vp(a + 12, 2)
        if u > 2 * v - 1:
            return Classification(True, 1, "2")
        if u < 2 * v - 1 and u % 2 == 1:
            s = _regular_shift(a, b, 2, 1)
            if s is None:
                return Classification(None, None, "2 needs a regular shift")
            U, V, _ = _vals_at(a, b, s, 2)
            if U > 2 * V - 1:
                return Classification(True, 1, "2")
        return Classification(False, 0, "2 fails")
    if _pair_mod(a, b, 256) in {(64, 112), (192, 112), (0, 240), (128, 240)}:
        return Classification(True, None, "3")
    ab1024 = _pair_mod(a, b, 1024)
    if ab1024 in {(256, 832), (768, 832), (0, 64), (512, 64)}:
        return Classification(True, 3 if ab1024 in {(0, 64), (512, 64)} else None, "4")
    if _pair_mod(a, b, 512) in {(0, 192), (256, 192)}:
        return Classification(True, 2, "5")
    if a % 2 ** 11 == 0 and b % 2 ** 12 == 768 + 2 ** 10 + 2 ** 11:
        return Classification(True, None, "6")
    return Classification(False, 0, "none")


_P3_C2 = {(15, 65), (42, 38), (69, 11)}
_P3_C3 = {(6, 47), (33, 20), (60, 74), (24, 56), (51, 29), (78, 2)}
_P3_C4 = {(12, 11), (39, 38), (66, 65)}
_P3_C5 = {(3, 2), (30, 29), (57, 56), (21, 74), (48, 20), (75, 47)}


def _p3_result(ok: Optional[bool], case: str) -> Classification:
    return Classification(ok, None if ok is None else int(ok), case)


def thmp3_classify(a: int, b: int) -> Classification:
    """3 | i(K) for x^12 + a x + b, following the five condition groups."""
    if a % 3:
        return Classification(False, 0, "a not divisible by 3")
    if _pair_mod(a, b, 9) in {(0, 1), (0, 8)}:
        return Classification(True, None, "1")
    ab81 = _pair_mod(a, b, 81)

    def search(residue, offset):
        s = _regular_shift(a, b, 3, residue)
        return None if s is None else _crit3(a, b, s, offset)

    def branchy(t, w, unit, residue):
        if t > 2 * w - 1:
            return True
        if t < 2 * w - 1:
            return t % 2 == 1 and unit % 3 == 2
        return unit % 3 == 1 and search(residue, 1)

    if ab81 in _P3_C2:
        t, w = vp(b + a + 1, 3), vp(a + 12, 3)
        ok = branchy(t, w, unit_part(b + a + 1, 3) if t is not INF else 0, 1)
        return _p3_result(ok, "2")
    if ab81 in _P3_C3:
        ok = search(1, 1)
        return _p3_result(ok, "3")
    if ab81 in _P3_C4:
        t, w = vp(b - a + 1, 3), vp(a - 12, 3)
        ok = branchy(t, w, unit_part(b - a + 1, 3) if t is not INF else 0, -1)
        return _p3_result(ok, "4")
    if ab81 in _P3_C5:
        ok = search(-1, 1)
        return _p3_result(ok, "5")
    return Classification(False, 0, "none")


def pge5_nondivisor(a: int, b: int, p: int) -> bool:
    """Primes p >= 5 never divide i(K) for x^12 + a x + b."""
    if p < 5 or not is_prime(p):
        raise ValueError("p must be a prime >= 5")
    return True


# ---------------------------------------------------------------------------
# Whole-field analysis
# ---------------------------------------------------------------------------

NOT_MONOGENIC = "NotMonogenic"
MONOGENIC_VIA_ALPHA = "MonogenicViaAlpha"
UNKNOWN_VERDICT = "Unknown"


@dataclass
class PrimeReport:
    analysis: PrimeAnalysis
    verdict: IndexVerdict
    theorem_notes: list = field(default_factory=list)

    @property
    def p(self) -> int:
        return self.analysis.p


@dataclass
class AnalysisReport:
    field: TrinomialField
    delta: int
    delta_complete: bool
    unresolved_cofactors: list
    primes: list[PrimeReport]
    monogenity: str
    reason: str = ""

    @property
    def index_of_Zalpha(self) -> dict:
        return {r.p: r.analysis.nu_index_alpha for r in self.primes}

    @property
    def delta_valuations(self) -> dict:
        return {r.p: r.analysis.nu_delta for r in self.primes}

    def prime(self, p: int) -> Optional[PrimeReport]:
        for r in self.primes:
            if r.p == p:
                return r
        return None

    @property
    def index_divisors(self) -> list[int]:
        return [r.p for r in self.primes if r.verdict.divides_iK == YES]

    @property
    def iK(self) -> Optional[int]:
        """i(K) when every prime below n is settled, else None."""
        out = 1
        for p in range(2, self.field.n):
            if not is_prime(p):
                continue
            r = self.prime(p)
            if r is None:
                continue
            if r.verdict.divides_iK == NO:
                continue
            if r.verdict.divides_iK == YES and r.verdict.nu_iK is not None:
                out *= p ** r.verdict.nu_iK
            else:
                return None
        return out


def primes_to_examine(fld: TrinomialField, budget: Budget = DEFAULT_BUDGET):
    """(sorted primes, factorization complete?, unresolved cofactors)."""
    D = fld.discriminant
    if D == 0:
        raise InvalidField("F is not squarefree")
    sf = squarefull_part(D, budget)
    primes = set(sf.squarefull_primes)
    if fld.m == 1:
        primes |= set(SMALL_PRIMES)
    return sorted(primes), sf.complete, list(sf.unresolved)


def _theorem_claims(fld: TrinomialField) -> dict[int, list[str]]:
    claims: dict[int, list[str]] = {}
    for p in thm1_primes(fld):
        claims.setdefault(p, []).append("thm1")
    if thm2_predicate(fld):
        claims.setdefault(2, []).append("thm2")
    for p in corollary_primes(fld):
        claims.setdefault(p, []).append("thm3")
    if fld.n == 12 and fld.m == 1:
        c2 = thmp2_classify(fld.a, fld.b)
        if c2.divides:
            claims.setdefault(2, []).append(f"thmp2({c2.case})")
        c3 = thmp3_classify(fld.a, fld.b)
        if c3.divides:
            claims.setdefault(3, []).append(f"thmp3({c3.case})")
    return claims


def _theorem_nu(fld: TrinomialField, p: int) -> Optional[int]:
    if fld.n != 12 or fld.m != 1:
        return thm1_nu2(fld) if p == 2 else None
    if p == 2:
        return thmp2_classify(fld.a, fld.b).nu
    if p == 3:
        return thmp3_classify(fld.a, fld.b).nu
    return None


def analyze(fld: TrinomialField, budget: Budget = DEFAULT_BUDGET, check_irreducible: bool = True,
            cross_check: bool = True) -> AnalysisReport:
    F = fld.poly
    D = fld.discriminant
    if D == 0:
        raise InvalidField(f"{F} has a repeated root")
    if check_irreducible and not is_irreducible(F, disc=D):
        raise InvalidField(f"{F} is reducible over Q")
    primes, complete, unresolved = primes_to_examine(fld, budget)
    claims = _theorem_claims(fld) if cross_check else {}
    reports = []
    for p in primes:
        pa = analyze_prime(F, p, vp(D, p))
        verdict = engstrom_divides(pa.shape)
        notes = claims.get(p, [])
        if notes:
            if verdict.divides_iK == NO:
                raise ConsistencyError(f"{fld}: {notes} claim {p} | i(K) but the engine found {pa.shape.describe()}")
            if verdict.divides_iK == UNKNOWN:
                verdict = IndexVerdict(p, YES, None, None, pa.shape, source=notes[0])
        if verdict.divides_iK == YES and verdict.nu_iK is None:
            nu = _theorem_nu(fld, p)
            if nu:
                verdict = IndexVerdict(p, YES, nu, verdict.witness_f, pa.shape, source="theorem")
        if (verdict.nu_iK is not None and pa.nu_index_alpha is not None
                and verdict.nu_iK > pa.nu_index_alpha):
            raise ConsistencyError(f"{fld}: nu_{p}(i(K)) exceeds nu_{p} of the index of Z[alpha]")
        reports.append(PrimeReport(pa, verdict, notes))
    divisors = [r.p for r in reports if r.verdict.divides_iK == YES]
    if divisors:
        mono = NOT_MONOGENIC
        reason = "common index divisor " + ", ".join(str(p) for p in divisors)
    elif complete and all(r.analysis.nu_index_alpha == 0 for r in reports):
        mono = MONOGENIC_VIA_ALPHA
        reason = "Z[alpha] is the ring of integers"
    else:
        mono = UNKNOWN_VERDICT
        bits = []
        if not complete:
            bits.append("discriminant not fully factored")
        if any(r.verdict.divides_iK == UNKNOWN for r in reports):
            bits.append("inconclusive splitting")
        if any(r.verdict.divides_iK == NO and r.analysis.nu_index_alpha != 0 for r in reports):
            bits.append("i(K) = 1 but Z[alpha] is not maximal")
        reason = "; ".join(bits)
    return AnalysisReport(fld, D, complete, unresolved, reports, mono, reason)
