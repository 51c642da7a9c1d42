import math

import numpy as np
import pytest

import magspec as ms
from magspec import eigfn


class TestNorms:
    def test_constant_vector(self):
        rep = ms.norms(np.full(16, 2.0), h=0.5, p_list=(1.0, 2.0))
        assert rep.sup_norm == 2.0
        assert rep.lp[1.0] == pytest.approx(8.0)
        assert rep.lp[2.0] == pytest.approx(4.0)
        assert not rep.l2_normalized

    def test_normalized_flag(self):
        v = np.ones(4) / math.sqrt(4 * 0.25)
        rep = ms.norms(v, h=0.5)
        assert rep.l2_normalized

    def test_complex_moduli(self):
        v = np.array([3 + 4j, 0.0])
        rep = ms.norms(v, h=1.0)
        assert rep.sup_norm == pytest.approx(5.0)

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError):
            ms.norms(np.zeros(3), h=1.0)


class TestRearrangement:
    def test_sorted_and_equimeasurable(self):
        v = np.array([1.0, -3.0, 2.0, 0.5])
        prof = ms.decreasing_rearrangement(v, h=0.5)
        assert np.array_equal(prof.u_values, [3.0, 2.0, 1.0, 0.5])
        assert prof.cell_area == pytest.approx(0.25)
        # distribution functions of v and its rearrangement agree at any level
        for t in (0.0, 0.7, 1.5, 2.5):
            assert ms.distribution_function(v, 0.5, t) == pytest.approx(
                0.25 * np.count_nonzero(prof.u_values > t))

    def test_distribution_monotone(self):
        rng = np.random.default_rng(7)
        v = rng.normal(size=50)
        levels = np.linspace(0, 3, 20)
        mus = [ms.distribution_function(v, 0.1, t) for t in levels]
        assert all(a >= b for a, b in zip(mus, mus[1:]))


class TestZProfile:
    def test_value_at_origin(self):
        # d = 2: nu = 0 and J_0(0) = 1
        assert ms.z_profile(4.0, 2, 0.0) == pytest.approx(1.0)

    def test_vanishes_at_ball_boundary(self):
        lam = 9.0
        r_ball = ms.bessel_zero(0.0, 1) / 3.0
        assert ms.z_profile(lam, 2, r_ball) == 0.0
        assert ms.z_profile(lam, 2, 2 * r_ball) == 0.0

    def test_matches_bessel_inside(self):
        lam = 2.0
        r = 0.3
        assert ms.z_profile(lam, 2, r) == pytest.approx(
            ms.bessel_j(0.0, math.sqrt(lam) * r), rel=1e-14)

    def test_three_dimensional_origin_limit(self):
        # nu = 1/2: limit is lam^{1/4} 2^{-1/2} / Gamma(3/2)
        lam = 5.0
        expected = lam**0.25 / (math.sqrt(2.0) * math.gamma(1.5))
        assert ms.z_profile(lam, 3, 0.0) == pytest.approx(expected, rel=1e-13)
        r_small = np.array([1e-8, 1e-6])
        vals = ms.z_profile(lam, 3, r_small)
        assert vals == pytest.approx(expected, rel=1e-6)


class TestZNorm:
    def test_l2_closed_form_d2(self):
        # d = 2: ||z||_2^2 = pi j_{0,1}^2 J_1(j_{0,1})^2 / lam
        lam = 7.0
        j01 = ms.bessel_zero(0.0, 1)
        expected = math.sqrt(math.pi / lam) * j01 * abs(ms.bessel_j(1.0, j01))
        assert ms.z_lp_norm(lam, 2, 2.0) == pytest.approx(expected, rel=1e-10)

    def test_scaling_in_lambda(self):
        # z_lam(r) = z_1(sqrt(lam) r) up to the nu power; L_p norm scales as
        # lam^{(nu p - d) / (2p)} relative amplitude lam^{nu/2}
        d, p = 2, 1.0
        a = ms.z_lp_norm(1.0, d, p)
        b = ms.z_lp_norm(4.0, d, p)
        assert b == pytest.approx(a * 4.0 ** (-d / (2 * p)), rel=1e-10)

    def test_extremal_chiti_ratio_is_exact(self):
        # on the ball itself the sharp sup bound is an identity:
        # z(0) = C_d(p) lam^{d/2p} ||z||_p
        for d in (2, 3):
            for p in (1.0, 2.0):
                lam = float(ms.bessel_zero((d - 2) / 2.0, 1)) ** 2
                table = ms.constants_table(d, p_list=(p,))
                rhs = table.chiti_p[p] * lam ** (d / (2 * p)) * ms.z_lp_norm(lam, d, p)
                assert ms.z_profile(lam, d, 0.0) == pytest.approx(rhs, rel=1e-9)


class TestChitiCheck:
    def test_square_ground_state(self, square_ground_state_h64):
        dom, spec, pair = square_ground_state_h64
        lam, vec = float(spec.values[0]), pair.vector
        checks = ms.chiti_check(vec, dom.h, lam, d=2)
        by_name = {c.name: c for c in checks}
        assert by_name["chiti-sup-bound"].passed
        assert by_name["heat-kernel-sup-bound"].passed
        # the square is not a ball, so the sharp bound is strict; at p = 2 the
        # square is close to extremal (ratio ~ 0.996), at p = 1 comfortably so
        ratio2 = by_name["chiti-sup-bound"].lhs / by_name["chiti-sup-bound"].rhs
        assert ratio2 < 0.9999
        chk1 = ms.chiti_check(vec, dom.h, lam, d=2, p=1.0)[0]
        assert chk1.lhs / chk1.rhs <= 0.99

    def test_heat_kernel_weaker_than_sharp_at_p2(self, square_ground_state_h64):
        dom, spec, pair = square_ground_state_h64
        lam, vec = float(spec.values[0]), pair.vector
        sharp, heat = ms.chiti_check(vec, dom.h, lam, d=2)
        assert heat.rhs >= sharp.rhs


class TestComparisonCheck:
    def test_square_ground_state(self, square_ground_state_h64):
        dom, spec, pair = square_ground_state_h64
        lam, vec = float(spec.values[0]), pair.vector
        verdict = ms.comparison_check(vec, dom.h, lam, d=2, measure=dom.measure)
        assert verdict.passed
        assert verdict.inclusion.passed
        assert verdict.domination.passed
        assert verdict.ball_measure <= verdict.domain_measure + verdict.inclusion.slack

    def test_analytic_disk_profile_is_extremal(self):
        # feed the exact ball profile back in: domination is an equality
        lam = float(ms.bessel_zero(0.0, 1)) ** 2  # unit disk, measure pi
        h = 1 / 256
        dom = ms.build_domain(ms.Disk(1.0), h)
        r = np.hypot(dom.points[:, 0], dom.points[:, 1])
        omega = ms.z_profile(lam, 2, r)
        verdict = ms.comparison_check(omega, h, lam, d=2, measure=dom.measure,
                                      tol=0.005)
        assert verdict.passed


class TestRearrangementOde:
    def test_exact_profile_has_no_violations(self):
        lam = float(ms.bessel_zero(0.0, 1)) ** 2
        s = np.arange(1, 20001) * (math.pi / 20000)
        u = ms.z_profile(lam, 2, np.sqrt(s / math.pi))
        prof = eigfn.RearrangementProfile(s_grid=s, u_values=u)
        chk = ms.rearrangement_ode_check(prof, lam, 2)
        assert chk.applicable and chk.diagnostic and chk.passed
        assert chk.context["violating_fraction"] == 0.0

    def test_square_ground_state(self, square_ground_state_h64):
        dom, spec, pair = square_ground_state_h64
        lam, vec = float(spec.values[0]), pair.vector
        prof = ms.decreasing_rearrangement(vec, dom.h)
        chk = ms.rearrangement_ode_check(prof, lam, 2)
        assert chk.passed
        assert chk.context["violating_fraction"] <= 0.05

    def test_constant_profile_not_applicable(self):
        prof = eigfn.RearrangementProfile(
            s_grid=np.arange(1, 101) * 0.01, u_values=np.ones(100))
        chk = ms.rearrangement_ode_check(prof, 10.0, 2)
        assert not chk.applicable
        assert chk.passed

    def test_tiny_profile_not_applicable(self):
        prof = eigfn.RearrangementProfile(
            s_grid=np.arange(1, 5) * 0.1, u_values=np.array([4.0, 3.0, 2.0, 1.0]))
        chk = ms.rearrangement_ode_check(prof, 10.0, 2)
        assert not chk.applicable
