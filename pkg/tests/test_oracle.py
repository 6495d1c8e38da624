import pytest
from hypothesis import given, settings, strategies as st

from oreforge.analyzer import is_irreducible
from oreforge.arith import IntPoly, trinomial_disc, vp
from oreforge.oracle import OrderBasis, hnf_mod, left_kernel_mod_p, p_maximal_index, p_maximal_order, solve_lower
from oreforge.ore import ore_report


def test_hnf_mod_identity():
    assert hnf_mod([], 3, 5) == [[5, 0, 0], [0, 5, 0], [0, 0, 5]]


def test_hnf_mod_is_lower_triangular():
    H = hnf_mod([[1, 2, 3], [0, 4, 2]], 3, 8)
    for i, row in enumerate(H):
        assert all(c == 0 for c in row[i + 1:])
        assert 8 % row[i] == 0


def test_solve_lower_round_trip():
    M = [[2, 0], [3, 4]]
    assert solve_lower(M, [2 * 5 + 3 * 7, 4 * 7]) == [5, 7]
    with pytest.raises(ArithmeticError):
        solve_lower(M, [1, 0])


def test_left_kernel():
    A = [[1, 1], [2, 2], [0, 1]]
    ker = left_kernel_mod_p(A, 3)
    for x in ker:
        assert all(sum(x[i] * A[i][j] for i in range(3)) % 3 == 0 for j in range(2))
    assert len(ker) == 1


def test_trivial_order_has_index_zero():
    O = OrderBasis(2, 0, [[1, 0], [0, 1]])
    assert O.index_exponent == 0


def test_quadratic_orders():
    # Z[sqrt(5)] has index 2 in the ring of integers; Z[sqrt(3)] is maximal at 2
    assert p_maximal_index(IntPoly((-5, 0, 1)), 2) == 1
    assert p_maximal_index(IntPoly((-3, 0, 1)), 2) == 0
    # x^2 - 12: alpha/2 is integral
    assert p_maximal_index(IntPoly((-12, 0, 1)), 2) == 1


def test_monic_required():
    with pytest.raises(ValueError):
        p_maximal_order(IntPoly((1, 0, 2)), 2)


# Values computed by this oracle and checked against an independent number field package.
@pytest.mark.parametrize("a,b,m,p,ind", [
    (84, 147, 1, 2, 8),
    (84, 147, 1, 3, 0),
    (336, 5195, 1, 2, 6),
    (336, 5195, 1, 3, 4),
    (24576, 216128, 1, 2, 39),
    (24576, 216128, 1, 3, 4),
    (4288, 3947, 1, 2, 6),
    (14, 90, 10, 3, 5),
    (60, 15, 6, 2, 6),
])
def test_frozen_indices(a, b, m, p, ind):
    assert p_maximal_index(IntPoly.trinomial(12, m, a, b), p) == ind


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 11), st.integers(-100, 100), st.integers(-100, 100).filter(bool),
       st.sampled_from([2, 3, 5]))
def test_oracle_matches_ore_when_regular(m, a, b, p):
    D = trinomial_disc(12, m, a, b)
    F = IntPoly.trinomial(12, m, a, b)
    if D == 0 or not is_irreducible(F):
        return
    idx = p_maximal_index(F, p)
    assert 2 * idx <= vp(D, p)
    rep = ore_report(F, p)
    assert idx >= rep.index_lower_bound
    if rep.regular:
        assert idx == rep.index_lower_bound
