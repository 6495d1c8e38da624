"""Exact integer, valuation and integer-polynomial arithmetic.

Everything here is exact: Python integers for coefficients, a dedicated
``INF`` sentinel for the valuation of zero, and no floating point at all.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from math import comb, gcd
from typing import Iterable, Sequence, Union


# ---------------------------------------------------------------------------
# Extended naturals
# ---------------------------------------------------------------------------

@total_ordering
class _Infinity:
    """The valuation of zero: larger than every integer, absorbing under +."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("oreforge.INF")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ValueError("INF - INF is undefined")
        return self

    def __mul__(self, other):
        if other == 0:
            raise ValueError("INF * 0 is undefined")
        return self

    __rmul__ = __mul__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
ExtNat = Union[int, _Infinity]


def is_inf(v) -> bool:
    return v is INF


# ---------------------------------------------------------------------------
# Primality
# ---------------------------------------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Bases 2..41 are a deterministic Miller-Rabin witness set below this bound.
MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Miller-Rabin with a deterministic base set below the bound, BPSW above it."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    if n >= MR_DETERMINISTIC_BOUND:
        from sympy import isprime

        return bool(isprime(n))
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Valuation:
    """The p-adic valuation; the prime is certified when the object is built."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"valuation needs a prime, got {self.p!r}")

    def __call__(self, n: int) -> ExtNat:
        return _vp(n, self.p)

    def gauss(self, f: "IntPoly") -> ExtNat:
        return min((_vp(c, self.p) for c in f.coeffs), default=INF)


def _vp(n: int, p: int) -> ExtNat:
    if n == 0:
        return INF
    n = abs(n)
    k = 0
    # peel off large powers first; keeps big valuations cheap
    pk, step = p, 1
    while n % pk == 0:
        n //= pk
        k += step
        pk, step = pk * pk, step * 2
    while n % p == 0:
        n //= p
        k += 1
    return k


def vp(n: int, p: int) -> ExtNat:
    """Largest k with p^k | n, or INF when n == 0."""
    return Valuation(p)(n)


def unit_part(n: int, p: int) -> int:
    """n / p^vp(n), the p-free part (keeps the sign). n must be nonzero."""
    if n == 0:
        raise ValueError("zero has no unit part")
    while n % p == 0:
        n //= p
    return n


def gauss_vp(f: "IntPoly | Sequence[int]", p: int) -> ExtNat:
    """Gauss valuation: min of vp over the coefficients, INF for zero."""
    coeffs = f.coeffs if isinstance(f, IntPoly) else tuple(f)
    Valuation(p)
    return min((_vp(c, p) for c in coeffs if c), default=INF)


# ---------------------------------------------------------------------------
# Integer polynomials
# ---------------------------------------------------------------------------

def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial, lowest degree first; zero is ``()``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    # -- constructors -------------------------------------------------------
    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> "IntPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def trinomial(cls, n: int, m: int, a: int, b: int) -> "IntPoly":
        """x^n + a x^m + b."""
        if not 0 < m < n:
            raise ValueError("need 0 < m < n")
        c = [0] * (n + 1)
        c[n] = 1
        c[m] += a
        c[0] += b
        return cls(c)

    # -- basic data ---------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations ----------------------------------------------------
    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power")
        result, base = IntPoly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod_monic(self, d: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Euclidean division by a monic divisor, exact over Z."""
        if not d.is_monic():
            raise ValueError("divisor must be monic")
        r = list(self.coeffs)
        dd = d.degree
        if len(r) - 1 < dd:
            return IntPoly(), self
        q = [0] * (len(r) - dd)
        dc = d.coeffs
        for k in range(len(r) - 1, dd - 1, -1):
            c = r[k]
            if c:
                q[k - dd] = c
                base = k - dd
                for j in range(dd):
                    if dc[j]:
                        r[base + j] -= c * dc[j]
                r[k] = 0
        return IntPoly(q), IntPoly(r[:dd])

    def exact_div(self, n: int) -> "IntPoly":
        """Divide every coefficient by n, insisting on exactness."""
        out = []
        for c in self.coeffs:
            q, r = divmod(c, n)
            if r:
                raise ValueError(f"{self} is not divisible by {n}")
            out.append(q)
        return IntPoly(out)

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_shift(self, s: int) -> "IntPoly":
        """f(x + s)."""
        return IntPoly(taylor_expand(self, s))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def mod(self, n: int) -> tuple[int, ...]:
        """Coefficients reduced into [0, n), trimmed."""
        return _trim(c % n for c in self.coeffs)

    # -- display ------------------------------------------------------------
    def __str__(self):
        return format_poly(self.coeffs)

    def __repr__(self):
        return f"IntPoly({format_poly(self.coeffs)})"


def _as_poly(v) -> IntPoly:
    return v if isinstance(v, IntPoly) else IntPoly((v,))


def format_poly(coeffs: Sequence, var: str = "x", fmt=str) -> str:
    """Human-readable rendering, highest degree first."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        s = fmt(c)
        neg = isinstance(c, int) and c < 0
        mag = str(-c) if neg else s
        if k == 0:
            body = mag
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if mag == "1":
                body = mono
            elif isinstance(c, int):
                body = f"{mag}{mono}"
            else:
                body = f"({mag}){mono}" if "+" in mag or " " in mag else f"{mag}{mono}"
        terms.append(("-" if neg else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Taylor expansion, resultants, discriminants
# ---------------------------------------------------------------------------

def taylor_expand(f: IntPoly, s: int) -> list[int]:
    """Coefficients c_i with f(x) = sum c_i (x - s)^i (repeated synthetic division)."""
    c = list(f.coeffs)
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += s * c[j + 1]
    return c


def taylor_coefficient(f: IntPoly, s: int, i: int) -> int:
    """Single Taylor coefficient f^(i)(s)/i! without expanding everything."""
    return sum(comb(k, i) * c * s ** (k - i) for k, c in enumerate(f.coeffs) if k >= i)


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over Z."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0:
        r = [x * lb ** e for x in r]
    return r


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant over Z by the subresultant pseudo-remainder sequence."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    A, B = list(f.coeffs), list(g.coeffs)
    ca, cb = f.content(), g.content()
    A = [x // ca for x in A]
    B = [x // cb for x in B]
    da, db = len(A) - 1, len(B) - 1
    t = ca ** db * cb ** da
    s = 1
    if da < db:
        A, B = B, A
        da, db = db, da
        if da % 2 and db % 2:
            s = -1
    if db == 0:
        return s * t * B[0] ** da
    g_, h = 1, 1
    while True:
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = _prem(A, B)
        if not R:
            return 0
        A = B
        div = g_ * h ** delta
        B = [x // div for x in R]
        g_ = A[-1]
        # h <- g^delta / h^(delta - 1), exact
        if delta == 0:
            h = h
        else:
            h = g_ ** delta // h ** (delta - 1)
        da, db = len(A) - 1, len(B) - 1
        if db == 0:
            break
    lcB = B[0]
    # final step: h^(1 - da) * lc(B)^da, exact
    if da == 0:
        h = 1
    else:
        h = lcB ** da // h ** (da - 1)
    return s * t * h


def discriminant(f: IntPoly) -> int:
    """(-1)^(d(d-1)/2) Res(f, f') / lc(f)."""
    d = f.degree
    if d < 1:
        raise ValueError("discriminant needs positive degree")
    r = resultant(f, f.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, f.lc)
    assert rem == 0
    return q


def trinomial_disc_m1(a: int, b: int) -> int:
    """Discriminant of x^12 + a x + b in closed form."""
    return 2 ** 24 * 3 ** 12 * b ** 11 - 11 ** 11 * a ** 12


def trinomial_disc(n: int, m: int, a: int, b: int) -> int:
    """Discriminant of x^n + a x^m + b (general closed form, d = gcd(n, m))."""
    d = gcd(n, m)
    n1, m1 = n // d, m // d
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    inner = n ** n1 * b ** (n1 - m1) - (-1) ** n1 * (n - m) ** (n1 - m1) * m ** m1 * a ** n1
    return sign * b ** (m - 1) * inner ** d


def sym_mod(c: int, p: int) -> int:
    """Representative of c mod p in [-p/2, p/2)."""
    r = c % p
    return r - p if 2 * r >= p else r
