import pytest
from hypothesis import given, settings, strategies as st
from sympy import factorint, nextprime

from oreforge.intfactor import (
    Budget, TRIAL_BOUND, brent_rho, is_squarefree, squarefull_part, trial_division,
)


def test_budget_presets():
    assert Budget.named("default") == Budget()
    assert Budget.named("light").ecm_curves == 0
    assert Budget.named("none").rho_steps == 0
    assert Budget.thorough().rho_steps > Budget().rho_steps
    with pytest.raises(ValueError):
        Budget.named("huge")


def test_trial_division():
    assert trial_division(360) == {2: 3, 3: 2, 5: 1}
    big = nextprime(TRIAL_BOUND * 10)
    assert trial_division(4 * big) == {2: 2, big: 1}


def test_brent_rho_finds_factor():
    n = 1000003 * 1000033
    d = brent_rho(n, 100000)
    assert d in (1000003, 1000033)


def test_zero_has_no_squarefull_part():
    with pytest.raises(ValueError):
        squarefull_part(0)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 10 ** 12))
def test_squarefull_primes_match_sympy(n):
    res = squarefull_part(n)
    assert res.complete
    truth = sorted(p for p, k in factorint(n).items() if k >= 2)
    assert res.squarefull_primes == truth


def test_large_square_of_prime():
    q = nextprime(10 ** 12)
    res = squarefull_part(7 * q * q)
    assert res.squarefull_primes == [q]
    assert is_squarefree(7 * q * q) is False


def test_large_squarefree_semiprime():
    q, r = nextprime(10 ** 9), nextprime(2 * 10 ** 9)
    assert is_squarefree(q * r) is True


def test_no_budget_may_leave_cofactors():
    q, r = nextprime(10 ** 15), nextprime(3 * 10 ** 15)
    res = squarefull_part(q * r, Budget.none())
    assert res.squarefree in (True, None)
    if res.squarefree is None:
        assert res.unresolved == [q * r]


def test_sign_is_ignored():
    assert squarefull_part(-72).squarefull_primes == [2, 3]
