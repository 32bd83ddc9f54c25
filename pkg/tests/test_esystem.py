from fractions import Fraction
from itertools import combinations

import pytest

from yhecke.esystem import (esolution, ftl_params, sweep_all_subsets,
                            verify_esystem, verify_subset_fast, ytl_params)
from yhecke.rings import Cyclo, Poly, RatFun


def test_d2_full_subset():
    s = esolution(2, (0, 1))
    assert s.x[1] == Cyclo.from_rational(0)
    assert s.E_D == Cyclo.from_rational(Fraction(1, 2))


def test_singleton_zero():
    for d in (1, 2, 3, 5):
        s = esolution(d, (0,))
        assert all(v.is_one() for v in s.x)
        assert s.E_D.is_one()


def test_d3_pair():
    s = esolution(3, (0, 1))
    assert s.E_D == Cyclo.from_rational(Fraction(1, 2))


def test_empty_subset_rejected():
    with pytest.raises(ValueError):
        esolution(3, ())


def test_verify_known_solutions():
    assert verify_esystem([1, 0, 0, 0])
    assert verify_esystem([Cyclo.root(5, k) for k in range(5)])
    assert not verify_esystem([1, Fraction(1, 3)])


def test_fast_verifier_matches_generic():
    # dual route: the integer sweep must agree with field arithmetic
    for d in range(1, 6):
        for size in range(1, d + 1):
            for D in combinations(range(d), size):
                fast = verify_subset_fast(d, D)
                sol = esolution(d, D)  # construction runs verify_esystem
                assert fast and verify_esystem(sol.x)
                assert sol.E_D == Cyclo.from_rational(Fraction(1, size))


def test_sweep_counts():
    assert sweep_all_subsets(4) == 15
    assert sweep_all_subsets(6) == 63


def test_ytl_case_i():
    x, zval = ytl_params(4, "i", m=1)
    assert x[0].is_one()
    assert all(x[l] == Cyclo.root(4, l) for l in range(4))
    u = Poly.var("u")
    assert zval == RatFun.new(Poly.const(-1), u + Poly.one())
    _, z1 = ytl_params(4, "i-z1", m=1)
    assert z1 == RatFun.of(-1)


def test_ytl_case_ii_matches_esolution():
    for d in (3, 5):
        for pair in ((0, 1), (1, 2)):
            x, zval = ytl_params(d, "ii", pair=pair)
            assert zval == RatFun.of(Fraction(-1, 2))
            sol = esolution(d, pair)
            assert tuple(x) == tuple(sol.x)


def test_ftl_sup1_empty_reproduces_esolution():
    for d in (2, 3):
        for D in [(0,), (0, 1)]:
            cond = ftl_params(d, (), D)
            sol = esolution(d, D)
            u = Poly.var("u")
            assert cond.z == RatFun.new(Poly.const(-1), (u + Poly.one()) * len(D))
            for k in range(d):
                assert cond.x[k] == RatFun.of(Poly.const(sol.x[k]))


def test_ftl_sup2_empty():
    cond = ftl_params(2, (0,), ())
    assert cond.z == RatFun.of(-1)
    assert all(v == RatFun.of(1) for v in cond.x)


def test_ftl_validation():
    with pytest.raises(ValueError):
        ftl_params(3, (0,), (0,))
    with pytest.raises(ValueError):
        ftl_params(3, (), ())
