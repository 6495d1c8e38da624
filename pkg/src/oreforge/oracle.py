"""Round 2 (Pohst-Zassenhaus) p-maximal order, used as an independent index oracle.

Orders are lattices between Z[alpha] and (1/p^k) Z[alpha].  An order O is
stored as ``d * O`` in power-basis coordinates, an integer lattice that
contains d * Z^n and is kept in lower triangular Hermite normal form reduced
modulo d.  Each round computes the p-radical of O as the kernel of a
Frobenius power on O/pO and replaces O by the ring of multipliers of the
radical, until nothing changes.

Nothing here depends on Newton polygons; the analyzer is tested against it.
"""
from __future__ import annotations

from dataclasses import dataclass

from .arith import IntPoly, vp

MAX_ROUNDS = 200


@dataclass
class OrderBasis:
    """Rows of ``matrix`` divided by p^k form a Z-basis of the order."""

    p: int
    k: int
    matrix: list  # n x n, lower triangular, row i supported on columns <= i

    @property
    def n(self) -> int:
        return len(self.matrix)

    @property
    def index_exponent(self) -> int:
        """nu_p((O : Z[alpha]))."""
        return self.n * self.k - sum(vp(self.matrix[i][i], self.p) for i in range(self.n))


# ---------------------------------------------------------------------------
# Integer and F_p linear algebra
# ---------------------------------------------------------------------------

def hnf_mod(rows, n: int, d: int) -> list:
    """Lower triangular HNF of the lattice spanned by ``rows`` and d*Z^n."""
    work = [[c % d for c in r] for r in rows if any(c % d for c in r)]
    out = [None] * n
    for j in range(n - 1, -1, -1):
        pivot = [0] * n
        pivot[j] = d
        rest = []
        for r in work:
            if r[j] == 0:
                rest.append(r)
                continue
            # extended gcd step between pivot and r on column j
            a, b = pivot[j], r[j]
            x0, y0, x1, y1 = 1, 0, 0, 1
            while b:
                q = a // b
                a, b = b, a - q * b
                x0, x1 = x1, x0 - q * x1
                y0, y1 = y1, y0 - q * y1
            g = a
            u, v = pivot[j] // g, r[j] // g
            new_pivot = [(x0 * pc + y0 * rc) % d for pc, rc in zip(pivot, r)]
            other = [(-v * pc + u * rc) % d for pc, rc in zip(pivot, r)]
            new_pivot[j] = g
            other[j] = 0
            pivot = new_pivot
            if any(other):
                rest.append(other)
        g = pivot[j]
        # pivot * (d / g) lies in d*Z^n modulo the lower columns; keep it as a generator
        carry = [(c * (d // g)) % d for c in pivot]
        carry[j] = 0
        if any(carry):
            rest.append(carry)
        out[j] = pivot
        work = [[c for c in r] for r in rest]
        for r in work:
            r[j] = 0
        work = [r for r in work if any(r)]
    # reduce entries below each pivot
    for j in range(n):
        for i in range(j + 1, n):
            q = out[i][j] // out[j][j]
            if q:
                out[i] = [a - q * b for a, b in zip(out[i], out[j])]
    return out


def solve_lower(M, y) -> list:
    """c with c . M = y for lower triangular M (exact; raises if not integral)."""
    n = len(M)
    y = list(y)
    c = [0] * n
    for j in range(n - 1, -1, -1):
        q, r = divmod(y[j], M[j][j])
        if r:
            raise ArithmeticError("vector is not in the lattice")
        c[j] = q
        if q:
            row = M[j]
            for t in range(j + 1):
                y[t] -= q * row[t]
    return c


def left_kernel_mod_p(A, p: int) -> list:
    """Basis of {x : x . A = 0} over F_p for an r x c matrix A."""
    r = len(A)
    if r == 0:
        return []
    cols = len(A[0])
    # row reduce [A | I]
    aug = [[v % p for v in A[i]] + [1 if t == i else 0 for t in range(r)] for i in range(r)]
    row = 0
    for col in range(cols):
        piv = next((i for i in range(row, r) if aug[i][col]), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = pow(aug[row][col], -1, p)
        aug[row] = [v * inv % p for v in aug[row]]
        for i in range(r):
            if i != row and aug[i][col]:
                f = aug[i][col]
                aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[row])]
        row += 1
        if row == r:
            break
    return [v[cols:] for v in aug[row:]]


# ---------------------------------------------------------------------------
# Round 2
# ---------------------------------------------------------------------------

def _mulmod(f: list, g: list, F: IntPoly) -> list:
    n = F.degree
    prod = [0] * (2 * n - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    prod[i + j] += a * b
    low = F.coeffs
    for t in range(2 * n - 2, n - 1, -1):
        c = prod[t]
        if c:
            prod[t] = 0
            for s in range(n):
                prod[t - n + s] -= c * low[s]
    return prod[:n]


def _structure_constants(O: OrderBasis, F: IntPoly) -> list:
    """T[i][j] = coordinates of w_i * w_j in the basis of O."""
    d = O.p ** O.k
    M = O.matrix
    n = O.n
    dM = [[d * c for c in row] for row in M]
    T = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            # (M_i/d)(M_j/d) = Y/d^2 = (c . M)/d, so c . (dM) = Y
            Y = _mulmod(M[i], M[j], F)
            T[i][j] = T[j][i] = solve_lower(dM, Y)
    return T


def _mul_coords(T, x, y, mod=None) -> list:
    n = len(x)
    out = [0] * n
    for i, a in enumerate(x):
        if a:
            for j, b in enumerate(y):
                if b:
                    ab = a * b
                    row = T[i][j]
                    for t in range(n):
                        out[t] += ab * row[t]
    if mod:
        out = [v % mod for v in out]
    return out


def _pow_coords(T, x, e: int, p: int, one) -> list:
    result = list(one)
    base = [v % p for v in x]
    while e:
        if e & 1:
            result = _mul_coords(T, result, base, p)
        e >>= 1
        if e:
            base = _mul_coords(T, base, base, p)
    return result


def _one_coords(O: OrderBasis) -> list:
    d = O.p ** O.k
    y = [0] * O.n
    y[0] = d
    return solve_lower(O.matrix, y)


def radical(O: OrderBasis, T) -> list:
    """Basis (O-coordinates, lower triangular HNF mod p) of the p-radical of O."""
    p, n = O.p, O.n
    q = p
    while q < n:
        q *= p
    one = _one_coords(O)
    images = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        images.append(_pow_coords(T, e, q, p, one))
    ker = left_kernel_mod_p(images, p)
    return hnf_mod(ker, n, p)


def enlarge(O: OrderBasis, F: IntPoly) -> OrderBasis | None:
    """One Round 2 step; None when O is already p-maximal."""
    p, n = O.p, O.n
    T = _structure_constants(O, F)
    J = radical(O, T)
    rows = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        row = []
        for gamma in J:
            prod = _mul_coords(T, e, gamma)
            row += [c % p for c in solve_lower(J, prod)]
        rows.append(row)
    U = left_kernel_mod_p(rows, p)
    # U/pO = {x in O : x I in pI} / pO; the new order is (U + pO)/p
    if not U:
        return None
    d = p ** O.k
    M = O.matrix
    gens = []
    for u in U:
        gens.append([sum(u[i] * M[i][t] for i in range(n)) for t in range(n)])
    gens += [[p * c for c in row] for row in M]
    return OrderBasis(p, O.k + 1, hnf_mod(gens, n, d * p))


def p_maximal_order(F: IntPoly, p: int) -> OrderBasis:
    if not F.is_monic():
        raise ValueError("F must be monic")
    n = F.degree
    O = OrderBasis(p, 0, [[1 if i == j else 0 for j in range(n)] for i in range(n)])
    for _ in range(MAX_ROUNDS):
        nxt = enlarge(O, F)
        if nxt is None:
            return O
        O = nxt
    raise RuntimeError("Round 2 did not stabilise")


def p_maximal_index(F: IntPoly, p: int) -> int:
    """nu_p((Z_K : Z[alpha]))."""
    from .arith import discriminant

    if vp(discriminant(F), p) < 2:
        return 0
    return p_maximal_order(F, p).index_exponent
