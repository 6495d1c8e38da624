import random
from functools import reduce

import pytest
from hypothesis import given, settings, strategies as st
from sympy import GF, Poly, symbols
from sympy import mobius as sym_mobius

from oreforge.arith import IntPoly
from oreforge.finitefield import (
    DEFAULT_SEED, ExtensionField, PrimeField, count_monic_irreducibles, default_seed, factor_mod_p,
    factor_over_fq, mobius, poly_ring, prime_field, reduce_mod_p, residue_field,
)

X = symbols("x")
PRIMES = [2, 3, 5, 7, 11, 13]


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(9)


@pytest.mark.parametrize("p", PRIMES)
def test_prime_field_inverses(p):
    F = prime_field(p)
    for a in range(1, p):
        assert F.mul(a, F.inv(a)) == 1
    assert F.pow(2 % p or 1, p - 1) == 1


def test_extension_field_f4():
    F4 = residue_field((1, 1, 1), 2)
    assert isinstance(F4, ExtensionField)
    assert F4.q == 4
    elems = list(F4.elements())
    assert len(elems) == 4
    for a in elems:
        if not F4.is_zero(a):
            assert F4.mul(a, F4.inv(a)) == F4.one
    t = F4.gen()
    # t^2 + t + 1 = 0
    assert F4.add(F4.add(F4.mul(t, t), t), F4.one) == F4.zero


def test_extension_modulus_must_be_monic():
    with pytest.raises(ValueError):
        ExtensionField(prime_field(3), (1, 0, 2))


def test_residue_field_of_linear_is_base():
    assert residue_field((1, 1), 5) is prime_field(5)


def _mul_all(R, factors):
    return reduce(R.mul, [R.pow(g, e) for g, e in factors], R.one())


@settings(max_examples=80)
@given(st.sampled_from(PRIMES), st.lists(st.integers(-30, 30), min_size=2, max_size=13))
def test_factor_mod_p_reconstructs(p, c):
    f = IntPoly(c + [1])
    R = poly_ring(prime_field(p))
    fac = factor_mod_p(f, p)
    assert _mul_all(R, fac) == reduce_mod_p(f, p)
    for g, _ in fac:
        assert g[-1] == 1
        assert Poly(list(reversed(g)), X, modulus=p).is_irreducible


@settings(max_examples=40)
@given(st.sampled_from(PRIMES), st.lists(st.integers(0, 12), min_size=2, max_size=10))
def test_factor_mod_p_agrees_with_sympy(p, c):
    f = IntPoly(c + [1])
    ours = sorted((tuple(g), e) for g, e in factor_mod_p(f, p))
    _, theirs = Poly(list(reversed(f.coeffs)), X, modulus=p).factor_list()
    theirs = sorted((tuple(int(v) % p for v in reversed(h.all_coeffs())), e) for h, e in theirs)
    assert ours == theirs


def test_factorization_independent_of_seed(monkeypatch):
    f = IntPoly.trinomial(12, 1, 72, 51)
    base = factor_mod_p(f, 5, seed=1)
    assert factor_mod_p(f, 5, seed=99) == base
    monkeypatch.setenv("ORE_FORGE_SEED", "7")
    assert default_seed() == 7
    assert factor_mod_p(f, 5) == base


def test_default_seed(monkeypatch):
    monkeypatch.delenv("ORE_FORGE_SEED", raising=False)
    assert default_seed() == DEFAULT_SEED


def test_factor_over_extension():
    F4 = residue_field((1, 1, 1), 2)
    R = poly_ring(F4)
    # y^2 + y + 1 splits over F_4
    g = (F4.one, F4.one, F4.one)
    fac = factor_over_fq(F4, g)
    assert [R.deg(h) for h, _ in fac] == [1, 1]
    assert _mul_all(R, fac) == R.trim(g)


def test_factor_zero_polynomial_mod_p():
    with pytest.raises(ValueError):
        factor_mod_p(IntPoly((3, 0, 3)), 3)


@pytest.mark.parametrize("n", range(1, 200))
def test_mobius(n):
    assert mobius(n) == sym_mobius(n)


@pytest.mark.parametrize("f,p,n", [(1, 2, 2), (2, 2, 1), (2, 3, 3), (3, 2, 2), (4, 2, 3), (2, 5, 10), (6, 2, 9)])
def test_count_monic_irreducibles_spot(f, p, n):
    assert count_monic_irreducibles(f, p) == n


@given(st.integers(1, 12), st.sampled_from(PRIMES))
def test_count_monic_irreducibles_degree_sum(f, p):
    # sum over d | f of d * N_d = p^f
    assert sum(d * count_monic_irreducibles(d, p) for d in range(1, f + 1) if f % d == 0) == p ** f


def test_count_rejects_bad_input():
    with pytest.raises(ValueError):
        count_monic_irreducibles(0, 2)
    with pytest.raises(ValueError):
        count_monic_irreducibles(2, 4)


@settings(max_examples=40)
@given(st.sampled_from([2, 3, 5]), st.lists(st.integers(0, 4), min_size=1, max_size=6),
       st.lists(st.integers(0, 4), min_size=1, max_size=6))
def test_gcd_divides_both(p, a, b):
    R = poly_ring(prime_field(p))
    f, g = R.from_ints(a + [1]), R.from_ints(b + [1])
    d = R.gcd(f, g)
    assert not R.rem(f, d) and not R.rem(g, d)


@pytest.mark.parametrize("p", [2, 3])
def test_squarefree_decomposition(p):
    R = poly_ring(prime_field(p))
    x1 = R.from_ints([1, 1])
    f = R.mul(R.pow(x1, 3), R.from_ints([0, 1]))
    parts = R.squarefree_decomposition(f)
    assert _mul_all(R, parts) == f
