"""Budgeted detection of the squarefull part of an integer.

Only the primes p with p^2 | n matter to the analyzer, so a full
factorization is not needed: after trial division, a composite cofactor
below TRIAL_BOUND^3 that is not a perfect square cannot hide a repeated
prime.  Larger cofactors go through Pollard rho, p-1 and ECM with fixed
seeds and small budgets; anything that survives is reported as unresolved
instead of being guessed at.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from sympy import factorint, integer_nthroot, isprime, primerange
from sympy.ntheory import pollard_pm1
from sympy.ntheory.ecm import ecm

TRIAL_BOUND = 2 ** 14


@dataclass(frozen=True)
class Budget:
    rho_steps: int = 5000
    rho_retries: int = 2
    pm1_bound: int = 20000
    ecm_b1: int = 2000
    ecm_b2: int = 200000
    ecm_curves: int = 30

    @classmethod
    def none(cls) -> "Budget":
        """Trial division and perfect-power checks only."""
        return cls(0, 0, 0, 0, 0, 0)

    @classmethod
    def thorough(cls) -> "Budget":
        """Enough effort to settle nearly every discriminant with |a|, |b| <= 10^3."""
        return cls(rho_steps=50000, rho_retries=3, pm1_bound=200000, ecm_b1=10000, ecm_b2=1000000, ecm_curves=80)

    @classmethod
    def light(cls) -> "Budget":
        """Cheap settings for range scans: short rho, small p-1, no ECM."""
        return cls(rho_steps=5000, rho_retries=1, pm1_bound=5000, ecm_b1=0, ecm_b2=0, ecm_curves=0)

    @classmethod
    def named(cls, name: str) -> "Budget":
        presets = {"none": cls.none, "light": cls.light, "default": cls, "thorough": cls.thorough}
        if name not in presets:
            raise ValueError(f"unknown budget {name!r}; choose from {', '.join(presets)}")
        return presets[name]()


DEFAULT_BUDGET = Budget()


@dataclass
class SquarefullResult:
    n: int
    exponents: dict = field(default_factory=dict)  # known prime -> exponent
    unresolved: list = field(default_factory=list)  # composite cofactors we could not split

    @property
    def complete(self) -> bool:
        return not self.unresolved

    @property
    def squarefull_primes(self) -> list[int]:
        return sorted(p for p, k in self.exponents.items() if k >= 2)

    @property
    def squarefree(self):
        """True/False when decided, None when an unresolved cofactor remains."""
        if self.squarefull_primes:
            return False
        return True if self.complete else None


def brent_rho(n: int, max_steps: int, c: int = 1, batch: int = 64) -> int | None:
    """Brent's cycle variant of Pollard rho with batched gcds; a proper factor or None."""
    y, r, q = 2, 1, 1
    x = ys = y
    steps = 0
    while steps < max_steps:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and steps < max_steps:
            ys = y
            for _ in range(min(batch, r - k)):
                y = (y * y + c) % n
                q = q * (x - y) % n
            steps += min(batch, r - k)
            g = gcd(q, n)
            if g > 1:
                break
            k += batch
        else:
            r *= 2
            continue
        if g == n:
            # the batch overshot; step back one at a time
            while True:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
                if g > 1:
                    break
        return g if g < n else None
    return None


_TRIAL_PRIMES = tuple(int(q) for q in primerange(2, TRIAL_BOUND))


def trial_division(n: int) -> dict:
    """Prime powers below TRIAL_BOUND, plus the remaining cofactor (exponent 1) if > 1."""
    out = {}
    for q in _TRIAL_PRIMES:
        if q * q > n:
            break
        if n % q == 0:
            k = 0
            while n % q == 0:
                n //= q
                k += 1
            out[q] = k
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _split(c: int, budget: Budget) -> int | None:
    for inc in range(1, budget.rho_retries + 2 if budget.rho_steps else 1):
        d = brent_rho(c, budget.rho_steps, inc)
        if d:
            return d
    if budget.pm1_bound:
        d = pollard_pm1(c, B=budget.pm1_bound, retries=1, seed=1234)
        if d:
            return d
    if budget.ecm_curves:
        try:
            fs = ecm(c, B1=budget.ecm_b1, B2=budget.ecm_b2, max_curve=budget.ecm_curves, seed=1234)
        except ValueError:
            return None
        if len(fs) > 1:
            return min(fs)
    return None


def _perfect_power(c: int):
    for k in range(2, c.bit_length() + 1):
        if 2 ** k > c:
            break
        r, exact = integer_nthroot(c, k)
        if exact:
            return r, k
    return None


def _coprime_base(pieces: list[tuple[int, bool]]) -> list[tuple[int, bool]]:
    """Split pieces until any two are coprime or equal.

    Each piece carries a flag saying whether it is known to be squarefree;
    a divisor of such a piece inherits the flag.
    """
    pieces = [pc for pc in pieces if pc[0] > 1]
    while True:
        for i in range(len(pieces)):
            for j in range(i):
                (x, fx), (y, fy) = pieces[i], pieces[j]
                if x == y:
                    continue
                g = gcd(x, y)
                if g > 1:
                    fg = fx or fy
                    rest = [pieces[k] for k in range(len(pieces)) if k not in (i, j)]
                    new = [(g, fg), (x // g, fx), (g, fg), (y // g, fy)]
                    pieces = rest + [pc for pc in new if pc[0] > 1]
                    break
            else:
                continue
            break
        else:
            return pieces


def squarefull_part(n: int, budget: Budget = DEFAULT_BUDGET) -> SquarefullResult:
    """Primes dividing n at least twice, as far as the budget allows."""
    return _squarefull_part(abs(n), budget)


@lru_cache(maxsize=4096)
def _squarefull_part(n: int, budget: Budget) -> SquarefullResult:
    if n == 0:
        raise ValueError("0 has no squarefull part")
    res = SquarefullResult(n)
    small = trial_division(n)
    pieces: list[tuple[int, bool]] = []
    stack = []
    for p, k in small.items():
        p, k = int(p), int(k)
        if p < TRIAL_BOUND or isprime(p):
            res.exponents[p] = k
        else:
            stack += [p] * k
    while stack:
        c = stack.pop()
        if isprime(c):
            pieces.append((c, True))
            continue
        pp = _perfect_power(c)
        if pp:
            stack += [int(pp[0])] * pp[1]
        elif c < TRIAL_BOUND ** 3:
            # no prime below the trial bound and not a square: c = q or q*r
            pieces.append((c, True))
        else:
            d = _split(c, budget)
            if d:
                d = int(d)
                stack += [d, c // d]
            else:
                pieces.append((c, False))
    counts: dict[int, list] = {}
    for c, flag in _coprime_base(pieces):
        entry = counts.setdefault(c, [0, False])
        entry[0] += 1
        entry[1] = entry[1] or flag
    for c, (k, flag) in sorted(counts.items()):
        if isprime(c):
            res.exponents[c] = res.exponents.get(c, 0) + k
        elif k >= 2 or not flag:
            # a repeated or unsplit composite: try once more, with the full budget
            sub = factorint(c) if c < TRIAL_BOUND ** 4 else None
            if sub and all(isprime(q) for q in sub):
                for q, e in sub.items():
                    res.exponents[int(q)] = res.exponents.get(int(q), 0) + int(e) * k
            else:
                res.unresolved.append(c)
    return res


def is_squarefree(n: int, budget: Budget = DEFAULT_BUDGET):
    """True, False, or None when the budget ran out."""
    return squarefull_part(n, budget).squarefree
