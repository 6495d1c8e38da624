import pytest
from hypothesis import given, settings, strategies as st
from sympy import Poly, symbols

from oreforge import fixtures
from oreforge.analyzer import (
    MONOGENIC_VIA_ALPHA, NO, NOT_MONOGENIC, UNKNOWN, UNKNOWN_VERDICT, YES, InvalidField, TrinomialField,
    UnknownEscape, analyze, analyze_prime, corollary_primes, engstrom_divides, is_irreducible, mong_check,
    mong_predicate, nu_iK_table, primes_to_examine, shape_completions, thm1_nu2, thm1_primes, thm2_predicate,
    thm3_predicate, thmp2_classify, thmp3_classify,
)
from oreforge.arith import IntPoly
from oreforge.intfactor import Budget
from oreforge.ore import Block, SplittingShape

X = symbols("x")


def test_field_validation():
    with pytest.raises(InvalidField):
        TrinomialField(1, 0)
    with pytest.raises(InvalidField):
        TrinomialField(1, 1, m=12)
    assert str(TrinomialField(72, 51)) == "x^12 + 72x + 51"


def test_normalization_defect():
    assert TrinomialField(2 ** 11, 2 ** 12, 1).normalization_defect() == 2
    assert TrinomialField(72, 51).normalization_defect() is None


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 11), st.integers(-50, 50), st.integers(-50, 50).filter(bool))
def test_irreducibility_matches_sympy(m, a, b):
    F = IntPoly.trinomial(12, m, a, b)
    truth = Poly(list(reversed(F.coeffs)), X).is_irreducible
    assert is_irreducible(F) == truth


@pytest.mark.parametrize("a,b,m", [
    (2, 1, 6),  # (x^6 + 1)^2
    (0, -4096, 1),  # x^12 - 2^12
    (-2, 1, 6),  # (x^6 - 1)^2
])
def test_reducible_fields_rejected(a, b, m):
    fld = TrinomialField(a, b, m)
    with pytest.raises(InvalidField):
        analyze(fld)


def test_engstrom_counts():
    # three primes of degree 2 over F_2, but only one irreducible quadratic exists
    v = engstrom_divides(SplittingShape(2, ((2, 2), (2, 2), (2, 2))))
    assert v.divides_iK == YES and v.witness_f == 2 and v.nu_iK == 2
    assert engstrom_divides(SplittingShape(2, ((1, 1), (1, 1), (10, 1)))).divides_iK == YES
    assert engstrom_divides(SplittingShape(2, ((1, 1), (1, 1), (10, 2)))).divides_iK == NO
    assert engstrom_divides(SplittingShape(3, ((1, 1), (1, 1), (10, 1)))).divides_iK == NO
    assert engstrom_divides(SplittingShape(3, ((1, 1), (1, 1), (1, 1), (9, 1)))).divides_iK == YES


def test_engstrom_with_unresolved_block():
    # a block of total degree 4 and e divisible by 2: either one prime or two of f = 1
    sh = SplittingShape(2, ((1, 1), (1, 1), (8, 1)), conclusive=False, unresolved=(Block(2, 1, 4),))
    assert engstrom_divides(sh).divides_iK == YES
    sh = SplittingShape(2, ((8, 1),), conclusive=False, unresolved=(Block(2, 1, 4),))
    assert engstrom_divides(sh).divides_iK == UNKNOWN


def test_shape_completions_cover_degree():
    sh = SplittingShape(2, ((4, 2),), conclusive=False, unresolved=(Block(2, 1, 4),))
    comps = list(shape_completions(sh))
    assert all(sum(e * f for e, f in c) == 12 for c in comps)
    assert [(4, 2), (4, 1)] in comps or [(4, 1), (4, 2)] in comps


def test_nu_table():
    assert nu_iK_table(SplittingShape(2, ((2, 2), (2, 2), (2, 2)))) == 2
    assert nu_iK_table(SplittingShape(2, ((12, 1),))) == 0
    assert nu_iK_table(SplittingShape(2, ((1, 1), (1, 1), (1, 1), (9, 1)))) is None


@pytest.mark.parametrize("a,b,expected", [(8, 3, [2]), (0, 7, [2]), (9, 1, [3]), (1, 1, [])])
def test_thm1(a, b, expected):
    assert thm1_primes(TrinomialField(a, b)) == expected


def test_thm1_nu2():
    assert thm1_nu2(TrinomialField(8, 3)) == 2
    assert thm1_nu2(TrinomialField(8, 7)) is None


@pytest.mark.parametrize("a,b,m,fires", [
    (2, 1, 3, True), (6, 5, 8, True), (4, 7, 6, True), (4, 7, 4, False), (2, 1, 1, False),
])
def test_thm2(a, b, m, fires):
    assert (thm2_predicate(TrinomialField(a, b, m)) == 2) == fires


def test_thm3_and_corollary():
    # x^12 - x^10 + 9: p = 3, 2k = 10, n - 2k = 2 divisible by p - 1
    assert thm3_predicate(12, 5, -1, 9, 3)
    assert corollary_primes(TrinomialField(-1, 9, 10)) == [3]
    assert not thm3_predicate(12, 5, -1, 3, 3)  # odd valuation of b
    assert not thm3_predicate(12, 5, 1, 9, 3)   # a is not -1 mod p
    assert corollary_primes(TrinomialField(-1, 9, 3)) == []


@settings(max_examples=30, deadline=None)
@given(st.integers(-2000, 2000), st.integers(-2000, 2000).filter(bool), st.integers(1, 11))
def test_theorems_never_contradict_engine(a, b, m):
    fld = TrinomialField(a, b, m)
    if not is_irreducible(fld.poly, disc=fld.discriminant):
        return
    claims = set(thm1_primes(fld)) | set(corollary_primes(fld))
    if thm2_predicate(fld):
        claims.add(2)
    for p in claims:
        assert engstrom_divides(analyze_prime(fld.poly, p).shape).divides_iK == YES


@settings(max_examples=40, deadline=None)
@given(st.integers(-3000, 3000), st.integers(-3000, 3000).filter(bool))
def test_p2_p3_classifiers_agree_with_engine(a, b):
    fld = TrinomialField(a, b)
    if not is_irreducible(fld.poly, disc=fld.discriminant):
        return
    for p, cls in ((2, thmp2_classify(a, b)), (3, thmp3_classify(a, b))):
        if cls.divides is None:
            continue
        verdict = engstrom_divides(analyze_prime(fld.poly, p).shape).divides_iK
        if cls.divides:
            assert verdict == YES
        # a "no" from the classifier can miss classes, so only "yes" is binding


def test_mong_check():
    chk = mong_check(1, 1)
    assert chk.value is not None
    assert mong_check(1, 4).failed[:1] == [1]
    with pytest.raises(InvalidField):
        mong_check(1, 0)


def test_mong_predicate_budget_escape():
    # with no budget a large squarefree-looking b cannot be certified
    from sympy import nextprime

    b = nextprime(10 ** 15) * nextprime(3 * 10 ** 15)
    chk = mong_check(1, b, Budget.none())
    if chk.value is None:
        with pytest.raises(UnknownEscape):
            mong_predicate(1, b, Budget.none())


def test_primes_to_examine_includes_small_primes():
    primes, complete, unresolved = primes_to_examine(TrinomialField(1, 1))
    assert set(primes) >= {2, 3, 5, 7, 11, 13}
    assert complete and not unresolved


@pytest.mark.parametrize("ex", fixtures.EXAMPLES, ids=lambda e: f"{e.a}_{e.b}")
def test_worked_example(ex):
    for m in ex.ms:
        rep = analyze(TrinomialField(ex.a, ex.b, m))
        assert rep.monogenity == ex.verdict
        for p, nu in ex.divisors.items():
            pr = rep.prime(p)
            assert pr.verdict.divides_iK == YES
            if nu is not None:
                assert pr.verdict.nu_iK == nu
        if ex.iK:
            assert rep.iK == ex.iK


def test_eisenstein_example_excludes_two():
    rep = analyze(TrinomialField(576, 386, 1))
    assert rep.prime(2).verdict.divides_iK == NO


def test_class_64_112_has_two():
    a, b = fixtures.CLASS_64_112
    rep = analyze(TrinomialField(a, b, 1))
    assert 2 in rep.index_divisors
    assert rep.monogenity == NOT_MONOGENIC


def test_monogenic_field():
    rep = analyze(TrinomialField(1, 1))
    assert rep.monogenity == MONOGENIC_VIA_ALPHA
    assert rep.iK == 1
    assert all(v == 0 for v in rep.index_of_Zalpha.values())


def test_unknown_verdict_without_budget():
    from sympy import nextprime

    b = nextprime(10 ** 14)
    rep = analyze(TrinomialField(1, b), Budget.none())
    assert rep.monogenity in (MONOGENIC_VIA_ALPHA, UNKNOWN_VERDICT, NOT_MONOGENIC)
    if not rep.delta_complete:
        assert rep.monogenity != MONOGENIC_VIA_ALPHA


def test_general_degree():
    rep = analyze(TrinomialField(14, 90, 10, n=12))
    assert 3 in rep.index_divisors
    rep = analyze(TrinomialField(2, 9, 2, n=6))
    assert rep.field.n == 6
