import random
from itertools import permutations

import pytest

from oracles import brute_skew_tableaux_weights
from tropcirc.combinatorics import (
    Partition,
    Permutation,
    SkewShape,
    hook_length_count,
    partitions_in_box,
    reduced_words,
    subpartitions,
)
from tropcirc.sympoly import (
    ExactPolynomial,
    NotHomogeneousError,
    NotSymmetricError,
    dominating_partition,
    elementary,
    lr_coefficient,
    monomial,
    schur,
    schur_expand,
    skew_schur,
    skew_schur_by_tableaux,
    stanley_poly,
    stanley_poly_by_words,
)

SMALL_SKEW = SkewShape((2, 1), (1,))


def P(n, terms):
    return ExactPolynomial(n, terms)


def test_polynomial_arithmetic():
    x1, x2 = ExactPolynomial.variable(2, 1), ExactPolynomial.variable(2, 2)
    assert (x1 + x2) * (x1 + x2) == P(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert (x1 - x1).is_zero()
    assert 3 * x1 == P(2, {(1, 0): 3})
    assert P(2, {(1, 0): 2, (0, 0): -2}).degrees() == {0, 1}
    with pytest.raises(ValueError):
        P(2, {(1,): 1})


def test_coefficients_are_unbounded():
    big = 10**40
    assert (P(1, {(1,): big}) * P(1, {(1,): big})).coefficient((2,)) == big * big


def test_skew_schur_examples():
    assert skew_schur(SMALL_SKEW, 2) == P(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert skew_schur(SkewShape((1,)), 3) == P(3, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})
    assert skew_schur(SkewShape((1, 1, 1)), 2).is_zero()


def test_skew_schur_routes_agree():
    # strip recursion vs tableau enumeration vs brute-force fillings
    for lam in partitions_in_box(3, 3):
        for mu in subpartitions(lam):
            shape = SkewShape(lam, mu)
            for n in (1, 2, 3):
                fast = skew_schur(shape, n)
                assert fast == skew_schur_by_tableaux(shape, n)
                if shape.size <= 5:
                    assert fast == P(n, [(w, 1) for w in brute_skew_tableaux_weights(lam, mu, n)])


def test_elementary_examples():
    assert elementary(2, 2) == P(2, {(1, 1): 1})
    assert elementary(1, 3) == P(3, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})
    assert elementary(3, 2).is_zero()
    assert elementary(0, 3) == ExactPolynomial.constant(3)


def test_monomial_examples():
    assert monomial((2,), 2) == P(2, {(2, 0): 1, (0, 2): 1})
    assert monomial((1, 1), 2) == P(2, {(1, 1): 1})
    assert monomial((2, 1), 2) == P(2, {(2, 1): 1, (1, 2): 1})
    assert monomial((1, 1, 1), 2).is_zero()


def test_stanley_examples():
    assert stanley_poly(Permutation.identity(2), 2) == ExactPolynomial.constant(2)
    assert stanley_poly(Permutation((2, 1)), 2) == P(2, {(1, 0): 1, (0, 1): 1})
    w = Permutation((2, 1, 4, 3))
    assert reduced_words(w) == [(1, 3), (3, 1)]
    # (1,3): ascent -> b=(1,2); (3,1): b in {(1,1),(1,2),(2,2)}
    assert stanley_poly_by_words(w, 2) == P(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert stanley_poly(w, 2) == skew_schur(SMALL_SKEW, 2)


def test_stanley_routes_agree_up_to_s5():
    for m in range(1, 6):
        for p in permutations(range(1, m + 1)):
            w = Permutation(p)
            for n in range(1, 5):
                assert stanley_poly(w, n) == stanley_poly_by_words(w, n)


def test_schur_expand_examples():
    assert schur_expand(skew_schur(SMALL_SKEW, 2)) == {(1, 1): 1, (2,): 1}
    assert schur_expand(schur((3, 1), 3)) == {(3, 1): 1}
    # m_2 = a s_2 + b s_11: x1^2 fixes a = 1, then x1 x2 gives 0 = a + b
    assert schur_expand(monomial((2,), 2)) == {(2,): 1, (1, 1): -1}


def test_schur_expand_errors():
    with pytest.raises(NotSymmetricError, match="not symmetric"):
        schur_expand(P(2, {(1, 0): 1}))
    with pytest.raises(NotHomogeneousError):
        schur_expand(P(2, {(1, 0): 1, (0, 1): 1, (0, 0): 1}))
    assert schur_expand(ExactPolynomial(2)) == {}


def test_schur_expand_recombines_for_all_shapes_in_4x4():
    for lam in partitions_in_box(4, 4):
        for mu in subpartitions(lam):
            shape = SkewShape(lam, mu)
            for n in (1, 2, 3, 4):
                f = skew_schur(shape, n)
                exp = schur_expand(f)
                assert exp.recombine(n) == f
                assert all(c > 0 for c in exp.values())


def test_family_polynomials_are_symmetric():
    polys = [schur(lam, n) for n in range(1, 5) for lam in partitions_in_box(n, 8 // n)]
    polys += [elementary(k, n) for n in range(1, 5) for k in range(n + 1)]
    polys += [monomial(lam, n) for n in range(1, 5) for lam in partitions_in_box(4, 2)]
    polys += [stanley_poly(Permutation(p), n) for p in permutations(range(1, 5)) for n in range(1, 5)]
    for f in polys:
        assert f.is_symmetric()
        assert f.is_homogeneous()


def test_dominating_partition_examples():
    assert dominating_partition(skew_schur(SMALL_SKEW, 2)) == (2,)
    assert dominating_partition(monomial((2,), 2)) is None
    assert dominating_partition(elementary(2, 3)) == (1, 1)


def test_dominating_partition_requires_single_top():
    # s_{3,1,1,1} + s_{2,2,2} has two incomparable maximal shapes
    f = schur((3, 1, 1, 1), 4) + schur((2, 2, 2), 4)
    assert dominating_partition(f) is None


def test_lr_coefficient_examples():
    assert lr_coefficient((2, 1), (1,), (2,), 2) == 1
    assert lr_coefficient((3, 2), (), (3, 2), 5) == 1
    # (2,2)/(1) has SSYT weights (2,1),(1,2) in 2 variables, so s_{21} appears once
    weights = brute_skew_tableaux_weights((2, 2), (1,), 2)
    assert sorted(weights) == [(1, 2), (2, 1)]
    assert lr_coefficient((2, 2), (1,), (2, 1), 2) == 1
    with pytest.raises(ValueError):
        lr_coefficient((2, 2), (1,), (1, 1, 1), 2)


def test_stanley_positivity_and_reduced_word_count():
    rng = random.Random(7)
    perms = [Permutation(p) for p in permutations(range(1, 5))]
    s5 = list(permutations(range(1, 6)))
    perms += [Permutation(p) for p in rng.sample(s5, 30)]
    for w in perms:
        ell = w.length()
        n = max(ell, 1)
        F = stanley_poly(w, n)
        exp = schur_expand(F)
        assert all(c >= 0 for c in exp.values())
        squarefree = (1,) * ell + (0,) * (n - ell)
        count = len(reduced_words(w))
        assert F.coefficient(squarefree) == count
        assert sum(c * hook_length_count(lam) for lam, c in exp.items()) == count


def test_stanley_positivity_all_s5():
    for p in permutations(range(1, 6)):
        w = Permutation(p)
        exp = schur_expand(stanley_poly(w, max(w.length(), 1)))
        assert all(c >= 0 for c in exp.values())
        assert all(isinstance(k, Partition) for k in exp)
