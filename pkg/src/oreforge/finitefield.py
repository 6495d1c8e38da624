"""Finite fields F_p, towers F_p[x]/(phi)[z]/(psi), and polynomial factorization.

Polynomials over a field are plain tuples of field elements, lowest degree
first and trimmed.  Elements of F_p are ints in [0, p); elements of an
extension are such tuples over the base field.  The factorization
algorithms (square-free split, distinct-degree, Cantor-Zassenhaus) are
written once in :class:`PolyRing`; :class:`FpPolyRing` only swaps in fast
integer kernels.
"""
from __future__ import annotations

import itertools
import os
import random
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Any, Iterator, Sequence

from .arith import IntPoly, format_poly, is_prime

Poly = tuple  # tuple of field elements, lowest degree first

DEFAULT_SEED = 20240917


def default_seed() -> int:
    """Splitter seed: ``ORE_FORGE_SEED`` when set, else a fixed constant."""
    raw = os.environ.get("ORE_FORGE_SEED")
    return int(raw) if raw not in (None, "") else DEFAULT_SEED


# ---------------------------------------------------------------------------
# Fields
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def char(self) -> int:
        return self.p

    @property
    def q(self) -> int:
        return self.p

    @property
    def degree(self) -> int:
        return 1

    zero = 0
    one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, k):
        return pow(a, k, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def from_int(self, c: int):
        return c % self.p

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def random(self, rng: random.Random):
        return rng.randrange(self.p)

    def fmt(self, a) -> str:
        return str(a)

    def sym(self, a) -> int:
        """Signed representative in [-p/2, p/2)."""
        return a - self.p if 2 * a >= self.p else a

    def __str__(self):
        return f"F_{self.p}"


@dataclass(frozen=True)
class ExtensionField:
    """base[t]/(modulus) with a monic irreducible modulus over ``base``."""

    base: Any
    modulus: Poly
    var: str = "x"
    ring: "PolyRing" = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "ring", poly_ring(self.base))
        mod = self.ring.trim(self.modulus)
        object.__setattr__(self, "modulus", mod)
        if len(mod) < 2 or mod[-1] != self.base.one:
            raise ValueError("extension modulus must be monic of positive degree")

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def char(self) -> int:
        return self.base.char

    @property
    def q(self) -> int:
        return self.base.q ** self.degree

    @property
    def zero(self):
        return ()

    @property
    def one(self):
        return (self.base.one,)

    def gen(self):
        return self.ring.rem((self.base.zero, self.base.one), self.modulus)

    def add(self, a, b):
        return self.ring.add(a, b)

    def sub(self, a, b):
        return self.ring.sub(a, b)

    def neg(self, a):
        return self.ring.neg(a)

    def mul(self, a, b):
        return self.ring.rem(self.ring.mul(a, b), self.modulus)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = self.ring.xgcd(a, self.modulus)
        if len(g) != 1:
            raise ValueError("modulus is not irreducible")
        return self.ring.scale(s, self.base.inv(g[0]))

    def pow(self, a, k):
        return self.ring.powmod(a, k, self.modulus)

    def is_zero(self, a) -> bool:
        return not a

    def from_int(self, c: int):
        return self.ring.trim((self.base.from_int(c),))

    def embed(self, c):
        """Base-field element as a constant of this field."""
        return self.ring.trim((c,))

    def reduce(self, poly: Sequence):
        """Element represented by an arbitrary polynomial over the base."""
        return self.ring.rem(self.ring.trim(tuple(poly)), self.modulus)

    def elements(self) -> Iterator[tuple]:
        base = list(self.base.elements())
        for digits in itertools.product(base, repeat=self.degree):
            yield self.ring.trim(digits[::-1])

    def random(self, rng: random.Random):
        return self.ring.trim(tuple(self.base.random(rng) for _ in range(self.degree)))

    def fmt(self, a) -> str:
        if not a:
            return "0"
        return format_poly(a, self.var, self.base.fmt)

    def __str__(self):
        return f"{self.base}[{self.var}]/({format_poly(self.modulus, self.var, self.base.fmt)})"


# ---------------------------------------------------------------------------
# Polynomial rings
# ---------------------------------------------------------------------------

class PolyRing:
    """Polynomial arithmetic and factorization over a finite field ``F``."""

    def __init__(self, F):
        self.F = F

    # -- representation ------------------------------------------------------
    def trim(self, f: Sequence) -> Poly:
        f = list(f)
        isz = self.F.is_zero
        while f and isz(f[-1]):
            f.pop()
        return tuple(f)

    def from_ints(self, coeffs: Sequence[int]) -> Poly:
        return self.trim(self.F.from_int(c) for c in coeffs)

    def x(self) -> Poly:
        return (self.F.zero, self.F.one)

    def one(self) -> Poly:
        return (self.F.one,)

    def deg(self, f: Poly) -> int:
        return len(f) - 1

    def fmt(self, f: Poly, var: str = "y") -> str:
        if not f:
            return "0"
        return format_poly(f, var, self.F.fmt)

    # -- arithmetic ------------------------------------------------------------
    def add(self, f: Poly, g: Poly) -> Poly:
        F = self.F
        n = max(len(f), len(g))
        z = F.zero
        return self.trim(F.add(f[i] if i < len(f) else z, g[i] if i < len(g) else z) for i in range(n))

    def neg(self, f: Poly) -> Poly:
        return tuple(self.F.neg(c) for c in f)

    def sub(self, f: Poly, g: Poly) -> Poly:
        return self.add(f, self.neg(g))

    def scale(self, f: Poly, c) -> Poly:
        return self.trim(self.F.mul(a, c) for a in f)

    def mul(self, f: Poly, g: Poly) -> Poly:
        if not f or not g:
            return ()
        F = self.F
        out = [F.zero] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if F.is_zero(a):
                continue
            for j, b in enumerate(g):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return self.trim(out)

    def divmod(self, f: Poly, g: Poly) -> tuple[Poly, Poly]:
        if not g:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.F
        r = list(f)
        dg = len(g) - 1
        if len(r) - 1 < dg:
            return (), tuple(r)
        inv = F.inv(g[-1])
        q = [F.zero] * (len(r) - dg)
        for k in range(len(r) - 1, dg - 1, -1):
            c = r[k]
            if F.is_zero(c):
                continue
            c = F.mul(c, inv)
            q[k - dg] = c
            for j in range(dg):
                r[k - dg + j] = F.sub(r[k - dg + j], F.mul(c, g[j]))
            r[k] = F.zero
        return self.trim(q), self.trim(r[:dg])

    def rem(self, f: Poly, g: Poly) -> Poly:
        return self.divmod(f, g)[1]

    def quo(self, f: Poly, g: Poly) -> Poly:
        q, r = self.divmod(f, g)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def monic(self, f: Poly) -> Poly:
        if not f:
            return f
        return self.scale(f, self.F.inv(f[-1]))

    def gcd(self, f: Poly, g: Poly) -> Poly:
        while g:
            f, g = g, self.rem(f, g)
        return self.monic(f)

    def xgcd(self, f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
        """(d, s, t) with s f + t g = d (d not normalized)."""
        r0, r1 = f, g
        s0, s1 = self.one(), ()
        t0, t1 = (), self.one()
        while r1:
            q, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self.sub(s0, self.mul(q, s1))
            t0, t1 = t1, self.sub(t0, self.mul(q, t1))
        return r0, s0, t0

    def deriv(self, f: Poly) -> Poly:
        F = self.F
        return self.trim(F.mul(F.from_int(i), c) for i, c in enumerate(f) if i)

    def powmod(self, f: Poly, k: int, m: Poly) -> Poly:
        result = self.one()
        base = self.rem(f, m)
        while k:
            if k & 1:
                result = self.rem(self.mul(result, base), m)
            k >>= 1
            if k:
                base = self.rem(self.mul(base, base), m)
        return self.rem(result, m)

    def pow(self, f: Poly, k: int) -> Poly:
        result = self.one()
        while k:
            if k & 1:
                result = self.mul(result, f)
            f = self.mul(f, f)
            k >>= 1
        return result

    def eval(self, f: Poly, a):
        F = self.F
        acc = F.zero
        for c in reversed(f):
            acc = F.add(F.mul(acc, a), c)
        return acc

    def is_one(self, f: Poly) -> bool:
        return len(f) == 1 and f[0] == self.F.one

    # -- factorization -----------------------------------------------------------
    def _pth_root(self, f: Poly) -> Poly:
        F = self.F
        p = F.char
        e = F.q // p  # a -> a^(q/p) is the inverse of Frobenius on F_q
        return self.trim(F.pow(f[i], e) if F.q != p else f[i] for i in range(0, len(f), p))

    def squarefree_decomposition(self, f: Poly) -> list[tuple[Poly, int]]:
        """Monic f = prod g_i^i with g_i square-free, pairwise coprime."""
        f = self.monic(f)
        out: dict[int, Poly] = {}
        self._sqf(f, 1, out)
        return sorted(((g, m) for m, g in out.items() if len(g) > 1), key=lambda t: t[1])

    def _sqf(self, f: Poly, mult: int, out: dict):
        if len(f) <= 1:
            return
        p = self.F.char
        fp = self.deriv(f)
        if not fp:
            self._sqf(self._pth_root(f), mult * p, out)
            return
        c = self.gcd(f, fp)
        w = self.quo(f, c)
        i = 1
        while len(w) > 1:
            y = self.gcd(w, c)
            z = self.quo(w, y)
            if len(z) > 1:
                k = mult * i
                out[k] = self.mul(out[k], z) if k in out else z
            i += 1
            w = y
            c = self.quo(c, y)
        if len(c) > 1:
            self._sqf(self._pth_root(c), mult * p, out)

    def distinct_degree(self, f: Poly) -> list[tuple[Poly, int]]:
        """Square-free monic f split into products of same-degree irreducibles."""
        out = []
        q = self.F.q
        x = self.x()
        h = self.rem(x, f) if len(f) > 2 else x
        d = 0
        rest = f
        while len(rest) - 1 >= 2 * (d + 1):
            d += 1
            h = self.powmod(h, q, rest)
            g = self.gcd(rest, self.sub(h, x))
            if len(g) > 1:
                out.append((g, d))
                rest = self.quo(rest, g)
                h = self.rem(h, rest)
        if len(rest) > 1:
            out.append((rest, len(rest) - 1))
        return out

    def _splitter(self, f: Poly, d: int, a: Poly) -> Poly:
        F = self.F
        if F.char == 2:
            # trace map a + a^2 + ... + a^(2^(kd-1)) modulo f
            k = (F.q.bit_length() - 1) * d
            t = self.rem(a, f)
            acc = t
            for _ in range(k - 1):
                t = self.rem(self.mul(t, t), f)
                acc = self.add(acc, t)
            return self.gcd(f, acc)
        e = (F.q ** d - 1) // 2
        b = self.sub(self.powmod(a, e, f), self.one())
        return self.gcd(f, b)

    def equal_degree(self, f: Poly, d: int, rng: random.Random) -> list[Poly]:
        """Split a product of distinct degree-d irreducibles (Cantor-Zassenhaus)."""
        n = len(f) - 1
        if n == d:
            return [f]
        F = self.F
        if d == 1 and F.q <= 64:
            return self._roots_exhaustive(f)
        for _ in range(200):
            a = self.trim(F.random(rng) for _ in range(n))
            if len(a) < 2:
                continue
            g = self._splitter(f, d, a)
            if 1 < len(g) < len(f):
                return self.equal_degree(g, d, rng) + self.equal_degree(self.quo(f, g), d, rng)
        # deterministic fallback: sweep candidate splitters in a fixed order
        elems = list(itertools.islice(F.elements(), 0, None))
        for deg_a in range(1, n):
            for coeffs in itertools.product(elems, repeat=deg_a):
                a = self.trim(tuple(coeffs) + (F.one,))
                g = self._splitter(f, d, a)
                if 1 < len(g) < len(f):
                    return self.equal_degree(g, d, rng) + self.equal_degree(self.quo(f, g), d, rng)
        raise RuntimeError("equal-degree splitting failed")

    def _roots_exhaustive(self, f: Poly) -> list[Poly]:
        F = self.F
        out = []
        for a in F.elements():
            if F.is_zero(self.eval(f, a)):
                out.append((F.neg(a), F.one))
        if sum(len(g) - 1 for g in out) != len(f) - 1:
            raise RuntimeError("root search did not split the polynomial")
        return [self.trim(g) for g in out]

    def factor(self, f: Poly, seed: int | None = None) -> list[tuple[Poly, int]]:
        """Monic irreducible factors with multiplicities, in canonical order."""
        f = self.trim(f)
        if not f:
            raise ValueError("cannot factor the zero polynomial")
        rng = random.Random(default_seed() if seed is None else seed)
        out = []
        for g, m in self.squarefree_decomposition(f):
            for h, d in self.distinct_degree(g):
                for irr in self.equal_degree(h, d, rng):
                    out.append((self.monic(irr), m))
        out.sort(key=lambda t: (len(t[0]), _sort_key(t[0]), t[1]))
        return out

    def is_irreducible(self, f: Poly) -> bool:
        """x^(q^d)-gcd test (Rabin)."""
        f = self.monic(self.trim(f))
        n = len(f) - 1
        if n < 1:
            return False
        if n == 1:
            return True
        q = self.F.q
        x = self.x()
        h = self.rem(x, f)
        for d in range(1, n // 2 + 1):
            h = self.powmod(h, q, f)
            if len(self.gcd(f, self.sub(h, x))) > 1:
                return False
        return True

    def is_squarefree(self, f: Poly) -> bool:
        f = self.trim(f)
        if len(f) <= 2:
            return True
        return all(m == 1 for _, m in self.squarefree_decomposition(f))

    def roots(self, f: Poly) -> list:
        return [self.F.neg(g[0]) for g, _ in self.factor(f) if len(g) == 2]


def _sort_key(f):
    return tuple(_elem_key(c) for c in reversed(f))


def _elem_key(c):
    if isinstance(c, int):
        return (c,)
    return (len(c),) + tuple(x for e in reversed(c) for x in _elem_key(e))


class FpPolyRing(PolyRing):
    """Same algorithms, integer kernels for the prime field."""

    def __init__(self, F: PrimeField):
        super().__init__(F)
        self.p = F.p

    def trim(self, f):
        f = list(f)
        while f and f[-1] == 0:
            f.pop()
        return tuple(f)

    def add(self, f, g):
        p = self.p
        if len(f) < len(g):
            f, g = g, f
        out = list(f)
        for i, c in enumerate(g):
            out[i] = (out[i] + c) % p
        return self.trim(out)

    def neg(self, f):
        p = self.p
        return tuple(-c % p for c in f)

    def sub(self, f, g):
        p = self.p
        n = max(len(f), len(g))
        out = [0] * n
        for i, c in enumerate(f):
            out[i] = c
        for i, c in enumerate(g):
            out[i] = (out[i] - c) % p
        return self.trim(out)

    def scale(self, f, c):
        p = self.p
        return self.trim(a * c % p for a in f)

    def mul(self, f, g):
        if not f or not g:
            return ()
        p = self.p
        out = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    out[i + j] += a * b
        return self.trim(c % p for c in out)

    def divmod(self, f, g):
        if not g:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        r = list(f)
        dg = len(g) - 1
        if len(r) - 1 < dg:
            return (), tuple(r)
        inv = pow(g[-1], -1, p)
        q = [0] * (len(r) - dg)
        for k in range(len(r) - 1, dg - 1, -1):
            c = r[k] % p
            if not c:
                continue
            c = c * inv % p
            q[k - dg] = c
            base = k - dg
            for j in range(dg):
                if g[j]:
                    r[base + j] -= c * g[j]
            r[k] = 0
        return self.trim(q), self.trim(c % p for c in r[:dg])

    def deriv(self, f):
        p = self.p
        return self.trim(i * c % p for i, c in enumerate(f) if i)

    def eval(self, f, a):
        acc = 0
        for c in reversed(f):
            acc = (acc * a + c) % self.p
        return acc


_RING_CACHE: dict = {}


def poly_ring(F) -> PolyRing:
    ring = _RING_CACHE.get(F)
    if ring is None:
        ring = FpPolyRing(F) if isinstance(F, PrimeField) else PolyRing(F)
        _RING_CACHE[F] = ring
    return ring


def prime_field(p: int) -> PrimeField:
    return _PF_CACHE.get(p) or _PF_CACHE.setdefault(p, PrimeField(p))


_PF_CACHE: dict[int, PrimeField] = {}


# ---------------------------------------------------------------------------
# Public entry points
# ---------------------------------------------------------------------------

def reduce_mod_p(f: IntPoly, p: int) -> Poly:
    return poly_ring(prime_field(p)).from_ints(f.coeffs)


def factor_mod_p(f: IntPoly, p: int, seed: int | None = None) -> list[tuple[Poly, int]]:
    """Factorization of f mod p into monic irreducibles (coefficients in [0, p))."""
    seed = default_seed() if seed is None else seed
    return list(_factor_reduced(tuple(c % p for c in f.coeffs), p, seed))


@lru_cache(maxsize=1 << 15)
def _factor_reduced(coeffs: tuple, p: int, seed: int) -> tuple:
    # range scans revisit the same reductions mod small p over and over
    R = poly_ring(prime_field(p))
    fb = R.trim(coeffs)
    if not fb:
        raise ValueError(f"polynomial vanishes mod {p}")
    if len(fb) == 1:
        return ()
    return tuple(R.factor(fb, seed))


def factor_over_fq(F, g: Sequence, seed: int | None = None) -> list[tuple[Poly, int]]:
    """Factorization of a polynomial over the finite field ``F``."""
    R = poly_ring(F)
    g = R.trim(tuple(g))
    if not g:
        raise ValueError("cannot factor the zero polynomial")
    if len(g) == 1:
        return []
    return R.factor(g, seed)


def residue_field(phi: Poly, p: int, var: str = "x"):
    """F_p[x]/(phi); collapses to F_p itself when phi is linear."""
    F = prime_field(p)
    if len(phi) == 2:
        return F
    return ExtensionField(F, tuple(phi), var)


def mobius(n: int) -> int:
    result, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            result = -result
        k += 1
    return -result if n > 1 else result


def count_monic_irreducibles(f: int, p: int) -> int:
    """N_f: number of monic irreducibles of degree f over F_p (necklace formula)."""
    if f < 1:
        raise ValueError("degree must be positive")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    total = sum(mobius(d) * p ** (f // d) for d in range(1, f + 1) if f % d == 0)
    return total // f
