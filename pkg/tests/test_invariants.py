import random
from fractions import Fraction

import pytest

from yhecke.braids import (BraidWord, FramedBraid, closure_components,
                           conway_triple, mixed_crossing_positions)
from yhecke.esystem import esolution
from yhecke.invariants import (delta, e_k_factor, gamma_framed,
                               gamma_specialized, homflypt, jones, jones_u, nu,
                               set_partitions, theta_combinatorial, theta_d_cap,
                               theta_d_small, theta_skein, theta_routes,
                               theta_cap_routes, theta2_combinatorial)
from yhecke.rings import Poly, RatFun, parse_expr

q = Poly.var("q")
UNKNOT = BraidWord(1, ())
UNLINK2 = BraidWord(2, ())
HOPF = BraidWord(2, (1, 1))
TREFOIL = BraidWord(2, (1, 1, 1))


def rf(v):
    return RatFun.of(v)


class TestThetaFamily:
    def test_unknot(self):
        assert theta_d_small(UNKNOT, 1) == Poly.one()
        assert theta_d_cap(UNKNOT, 3) == Poly.one()

    def test_two_unlink(self):
        # (mu / E_D)^(n-1) with E_D = 1/d
        for d in (1, 2, 3):
            got = rf(theta_d_cap(UNLINK2, d))
            mu = RatFun.new(Poly.var("sqrt_lambda") ** -1 - Poly.var("sqrt_lambda"), q - q ** -1)
            assert got == mu * d
            assert rf(theta_d_small(UNLINK2, d)) == rf(-(q + q ** -1) * d)

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_hopf_spec_value(self, d):
        got = rf(theta_d_small(HOPF, d))
        assert got == parse_expr(f"q^3 - q - (q^5 + q^3)*{d}")

    def test_theta_is_lambda_specialization(self):
        for b in (HOPF, TREFOIL, BraidWord(3, (1, -2, 1)), BraidWord(3, (1, 2, 1, 2))):
            for d in (1, 2):
                cap = rf(theta_d_cap(b, d))
                assert cap.substitute({"sqrt_lambda": q * q}) == rf(theta_d_small(b, d))

    def test_d_independence(self):
        # same |D| inside different ambient moduli gives the same invariant
        for b in (HOPF, TREFOIL, BraidWord(3, (1, -2))):
            base = rf(theta_d_cap(b, 2))
            assert rf(theta_d_cap(b, 2, modulus=3, D=(0, 1))) == base
            assert rf(theta_d_cap(b, 2, modulus=4, D=(1, 3))) == base

    def test_values_clear_to_laurent(self):
        for b in (HOPF, TREFOIL, BraidWord(3, (1, 1, 2, 2))):
            assert isinstance(theta_d_small(b, 2), Poly)


class TestClassicalCollapse:
    def test_jones_trefoil(self):
        assert jones(TREFOIL) == parse_expr("q^2 + q^6 - q^8").to_laurent()

    def test_jones_u_route_alignment(self):
        # the u-presentation construction agrees after sqrt_u -> q
        for b in (UNKNOT, UNLINK2, HOPF, TREFOIL, BraidWord(3, (1, -2, 1, -2)),
                  BraidWord(3, (1, 2, -1, 2)), BraidWord(2, (-1, -1, -1))):
            v_u = jones_u(b).substitute({"sqrt_u": q})
            assert v_u == rf(jones(b))

    def test_jones_u_two_unlink(self):
        su = Poly.var("sqrt_u")
        assert jones_u(UNLINK2) == -(su + su ** -1)

    def test_homflypt_trefoil(self):
        sl = Poly.var("sqrt_lambda")
        expected = sl ** 2 * (q ** 2) + sl ** 2 * (q ** -2) - sl ** 4
        assert homflypt(TREFOIL) == expected

    def test_d1_is_classical(self):
        for b in (HOPF, TREFOIL, BraidWord(3, (1, -2, 1))):
            assert rf(theta_d_cap(b, 1)) == rf(homflypt(b))
            assert rf(theta_d_small(b, 1)) == rf(jones(b))


class TestPartitionMachinery:
    def test_set_partition_counts(self):
        assert [len(set_partitions(range(m))) for m in range(5)] == [1, 1, 2, 5, 15]

    def test_partitions_are_partitions(self):
        for part in set_partitions(range(4)):
            flat = sorted(x for block in part for x in block)
            assert flat == list(range(4))

    def test_nu_hopf(self):
        c = closure_components(HOPF)
        assert nu(((0,), (1,)), c) == 1
        assert nu(((0, 1),), c) == 0

    def test_e_k(self):
        E = Poly.var("E")
        assert e_k_factor(1) == Poly.one()
        assert e_k_factor(2) == E ** -1 - 1
        assert e_k_factor(3) == (E ** -1 - 1) * (E ** -1 - 2)


class TestCombinatorialRoute:
    def test_knot_reduces_to_homflypt(self):
        assert theta_combinatorial(TREFOIL) == rf(homflypt(TREFOIL))
        assert theta2_combinatorial(TREFOIL) == jones(TREFOIL)

    def test_two_unlink(self):
        mu = RatFun.new(Poly.var("sqrt_lambda") ** -1 - Poly.var("sqrt_lambda"), q - q ** -1)
        e_inv = rf(Poly.var("E") ** -1)
        assert theta_combinatorial(UNLINK2) == mu * e_inv
        assert rf(theta2_combinatorial(UNLINK2)) == rf(-(q + q ** -1)) * e_inv

    def test_e1_collapse(self):
        for b in (HOPF, BraidWord(3, (1, 1, 2, 2)), BraidWord(3, (1, -2))):
            assert theta_combinatorial(b).substitute({"E": 1}) == rf(homflypt(b))
            assert rf(theta2_combinatorial(b)).substitute({"E": 1}) == rf(jones(b))

    def test_hopf_spot_check(self):
        got = rf(theta2_combinatorial(HOPF))
        assert got == parse_expr("q^3 - q - (q^5 + q^3)*E^-1")


class TestSkeinRoute:
    def test_unknot_and_knots_delegate(self):
        assert theta_skein(UNKNOT) == rf(1)
        assert theta_skein(TREFOIL) == rf(jones(TREFOIL))

    def test_hopf_one_step(self):
        # switching the first mixed crossing: T(hopf) = q^4 T(L-) + q^2(q-q^-1) T(L0)
        l_minus = BraidWord(2, (-1, 1))
        l_zero = BraidWord(2, (1,))
        lhs = theta_skein(HOPF)
        rhs = rf(q ** 4) * theta_skein(l_minus) + rf(q ** 2 * (q - q ** -1)) * theta_skein(l_zero)
        assert lhs == rhs

    def test_matches_combinatorial(self):
        for b in (HOPF, BraidWord(3, (1, 1, 2, 2)), BraidWord(3, (1, -2, 1, 2)),
                  BraidWord(3, (-1, -1, 2, 2))):
            assert theta_skein(b) == rf(theta2_combinatorial(b))
            assert theta_skein(b, generic_lambda=True) == theta_combinatorial(b)

    def test_skein_relation_on_mixed_crossings(self):
        rng = random.Random(31)
        sl = Poly.var("sqrt_lambda")
        lam = rf(sl * sl)
        checked = 0
        while checked < 50:
            n = rng.choice((2, 3))
            letters = tuple(rng.choice((1, -1, n - 1, -(n - 1)))
                            for _ in range(rng.randint(1, 5)))
            b = BraidWord(n, letters)
            mixed = mixed_crossing_positions(b)
            if not mixed:
                continue
            pos = rng.choice(mixed)
            lp, lm, lz = conway_triple(b, pos)
            d = rng.choice((1, 2, 3))
            v_p, v_m, v_z = (rf(theta_d_cap(x, d)) for x in (lp, lm, lz))
            assert (rf(sl) ** -1) * v_p - rf(sl) * v_m == rf(q - q ** -1) * v_z
            checked += 1


class TestRouteAgreement:
    def test_small_corpus(self):
        words = [UNKNOT, UNLINK2, HOPF, TREFOIL,
                 BraidWord(3, (1, -2, 1)), BraidWord(3, (1, 2)),
                 BraidWord(3, (1, 1, 2, 2)), BraidWord(3, (-1, 2, -1, 2))]
        for b in words:
            for d in (1, 2):
                r = theta_routes(b, d)
                assert r["trace"] == r["comb"] == r["skein"], (b.letters, d)
                rc = theta_cap_routes(b, d)
                assert rc["trace"] == rc["comb"] == rc["skein"], (b.letters, d)


class TestFramedInvariants:
    def test_unknot_zero_framing(self):
        fb = FramedBraid(3, (0,), UNKNOT)
        assert gamma_framed(fb, (0, 1)) == rf(1)
        assert gamma_specialized(fb, (0, 1)) == Poly.one()

    def test_framed_unknot_value_is_x_k(self):
        d = 3
        sol = esolution(d, (0, 1))
        for k in (1, 2):
            fb = FramedBraid(d, (k,), UNKNOT)
            assert gamma_framed(fb, (0, 1)) == rf(Poly.const(sol.x[k]))

    def test_delta_is_zero_framing_lift(self):
        for b in (HOPF, TREFOIL):
            fb = FramedBraid(2, (0,) * b.strands, b)
            assert delta(b, 2, (0, 1), True) == gamma_specialized(fb, (0, 1))
            assert delta(b, 2, (0, 1), False) == gamma_framed(fb, (0, 1))

    def test_d1_specialized_is_jones(self):
        # Gamma_{1,{0}}(u,u) recovers the classical Jones construction
        for b in (UNKNOT, HOPF, TREFOIL, BraidWord(3, (1, -2, 1, -2))):
            got = delta(b, 1, (0,), True)
            assert rf(got) == rf(jones_u(b))

    def test_markov_invariance(self):
        rng = random.Random(4242)
        for _ in range(10):
            n = rng.choice((2, 3))
            letters = tuple(rng.choice([i * s for i in range(1, n) for s in (1, -1)])
                            for _ in range(rng.randint(0, 4)))
            fb = FramedBraid(2, tuple(rng.randrange(2) for _ in range(n)), BraidWord(n, letters))
            base = gamma_framed(fb, (0, 1))
            base_s = gamma_specialized(fb, (0, 1))
            g = BraidWord(n, (rng.choice([i * s for i in range(1, n) for s in (1, -1)]),)) if n > 1 else BraidWord(n, ())
            conj = fb.conjugate_by_braid(g)
            assert gamma_framed(conj, (0, 1)) == base
            t_conj = fb.conjugate_by_framing(rng.randint(1, n))
            assert gamma_framed(t_conj, (0, 1)) == base
            for sign in (1, -1):
                stab = fb.stabilize(sign)
                assert gamma_framed(stab, (0, 1)) == base
                assert gamma_specialized(stab, (0, 1)) == base_s


class TestStructuralPhenomena:
    def test_theta_on_knots_is_d_independent(self):
        # on knots the whole family collapses to the Jones polynomial
        for b in (TREFOIL, BraidWord(3, (1, -2, 1, -2)), BraidWord(2, (-1, -1, -1)),
                  BraidWord(3, (1, 1, 1, 2, -1, 2))):
            v = rf(jones(b))
            for d in (1, 2, 3):
                assert rf(theta_d_small(b, d)) == v

    def test_dense_torus_link_all_routes(self):
        # (3,6) torus link: 12 crossings, three components, all pairwise
        # linking numbers 2; every route must agree
        b = BraidWord(3, (1, 2) * 6)
        c = closure_components(b)
        assert len(c.components) == 3
        assert all(c.lk(i, j) == 2 for i in range(3) for j in range(3) if i != j)
        comb = rf(theta2_combinatorial(b))
        assert theta_skein(b) == comb
        assert rf(theta_d_small(b, 2)) == comb.substitute({"E": Fraction(1, 2)})
        cap = theta_combinatorial(b)
        assert theta_skein(b, generic_lambda=True) == cap
        assert rf(theta_d_cap(b, 3)) == cap.substitute({"E": Fraction(1, 3)})
