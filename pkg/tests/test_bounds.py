import math

import numpy as np
import pytest

from merobounds.errors import (
    BadParameter,
    BadRadius,
    ClassMismatch,
    NoPole,
    RadiusBeyondPole,
)
from merobounds.functions import (
    ClassKind,
    ClassSpec,
    build_fp,
    build_koebe_rotation,
    build_kp,
    from_inverse_coefficients,
    mu,
)
from merobounds.integrals import dirichlet_f_over_z_series, dirichlet_f_series, dirichlet_series, l1_mean_series
from merobounds.bounds import (
    BoundQuantity,
    build_report,
    check_bound,
    gronwall_check,
    jenkins_bound,
    l1_bound,
    lemma1_check,
    max_dirichlet_f,
    max_dirichlet_f_over_z,
    max_dirichlet_zf_sigma_p,
    max_dirichlet_zf_up_lambda,
    s_class_dirichlet_f_max,
    s_class_dirichlet_f_over_z_max,
    s_class_dirichlet_zf_max,
)

P_GRID = (0.2, 0.35, 0.5, 0.65, 0.8)
R_GRID = tuple(k / 20 for k in range(1, 21))
LAMBDAS = (0.25, 0.5, 1.0)


# ---- jenkins coefficient bound -------------------------------------------------

def test_jenkins_closed_form_equals_geometric_sum():
    for n in (2, 3, 5, 9):
        for p in (0.3, 0.5, 0.85):
            geometric = sum(p ** (2 * k) for k in range(n)) / p ** (n - 1)
            assert jenkins_bound(n, p) == pytest.approx(geometric, rel=1e-14)


def test_jenkins_hand_value():
    assert jenkins_bound(2, 0.5) == pytest.approx(2.5, rel=1e-15)


def test_jenkins_approaches_analytic_class_bound():
    # as the pole leaves the disk the bound tends to the classical n
    assert jenkins_bound(2, 0.99) == pytest.approx(2.0, rel=0.02)


def test_jenkins_validation():
    with pytest.raises(BadParameter):
        jenkins_bound(1, 0.5)
    with pytest.raises(BadParameter):
        jenkins_bound(3, 1.0)


def test_jenkins_attained_by_extremal_coefficients():
    from merobounds.functions import f_over_z_series

    for p in (0.3, 0.5, 0.7):
        d = f_over_z_series(build_kp(p, order=14))
        for n in range(2, 13):
            assert abs(d[n - 1]) == pytest.approx(jenkins_bound(n, p), rel=1e-10)


# ---- area-theorem sum ------------------------------------------------------------

def test_gronwall_sharp_for_extremal_pole_map():
    for p in P_GRID:
        rep = gronwall_check(build_kp(p))
        assert rep.computed == pytest.approx(1.0, abs=1e-15)
        assert rep.satisfied and rep.sharp


def test_gronwall_sharp_for_koebe():
    rep = gronwall_check(build_koebe_rotation(math.pi / 5))
    assert rep.computed == pytest.approx(1.0, rel=1e-14)
    assert rep.sharp


def test_gronwall_violation_detected():
    rep = gronwall_check(from_inverse_coefficients([0.0, 1.2]))
    assert rep.computed == pytest.approx(1.44, rel=1e-15)
    assert not rep.satisfied
    assert not rep.sharp


def test_gronwall_short_series():
    rep = gronwall_check(from_inverse_coefficients([-2.0], pole=0.5))
    assert rep.computed == 0.0
    assert rep.satisfied


# ---- weighted tail inequality ------------------------------------------------------

@pytest.mark.parametrize("t", [-1.0, 0.0, 0.5, 1.0, 2.0])
@pytest.mark.parametrize("lam", LAMBDAS)
def test_lemma_tail_equality_for_extremal_member(t, lam):
    f = build_fp(0.5, lam)
    for r in (0.25, 0.7, 1.0):
        rep = lemma1_check(f, lam, t, r)
        assert abs(rep.slack) <= 1e-12 * rep.bound
        assert rep.sharp


def test_lemma_tail_strict_for_thinner_member():
    lam = 0.8
    f = build_fp(0.5, 0.4)  # half the extremal z^2 coefficient
    rep = lemma1_check(f, lam, 1.0, 0.6)
    assert rep.satisfied
    assert rep.slack > 0
    assert not rep.sharp


def test_lemma_tail_validation():
    f = build_fp(0.5, 1.0)
    with pytest.raises(BadParameter):
        lemma1_check(f, 1.0, 2.5, 0.5)
    with pytest.raises(BadRadius):
        lemma1_check(f, 1.0, 1.0, 0.0)
    with pytest.raises(BadParameter):
        lemma1_check(f, 1.5, 1.0, 0.5)
    with pytest.raises(NoPole):
        lemma1_check(build_koebe_rotation(0.0), 1.0, 1.0, 0.5)


# ---- closed-form maxima --------------------------------------------------------------

def test_zf_sigma_bound_hand_value():
    assert max_dirichlet_zf_sigma_p(1.0, 0.5) == pytest.approx(8.25 * math.pi, rel=1e-15)


def test_zf_bounds_attained_by_extremal_functions():
    for p in P_GRID:
        kp = build_kp(p)
        fps = {lam: build_fp(p, lam) for lam in LAMBDAS}
        for r in R_GRID:
            got = dirichlet_series(kp.inv_series, r).value
            assert got == pytest.approx(max_dirichlet_zf_sigma_p(r, p), rel=1e-12)
            for lam, fp in fps.items():
                got = dirichlet_series(fp.inv_series, r).value
                assert got == pytest.approx(max_dirichlet_zf_up_lambda(r, p, lam), rel=1e-12)


def test_up_lambda_bound_nested_inside_sigma_bound():
    for p in P_GRID:
        for lam in LAMBDAS:
            for r in R_GRID:
                margin = max_dirichlet_zf_sigma_p(r, p) - max_dirichlet_zf_up_lambda(r, p, lam)
                assert margin > 1e-12


def test_f_route_maxima_attained():
    for p in (0.35, 0.6, 0.8):
        f = build_kp(p, order=128)
        for frac in (0.1, 0.5, 0.8):
            r = frac * p
            assert dirichlet_f_over_z_series(f, r).value == pytest.approx(
                max_dirichlet_f_over_z(r, p), rel=1e-8
            )
            assert dirichlet_f_series(f, r).value == pytest.approx(
                max_dirichlet_f(r, p), rel=1e-8
            )


def test_f_route_maxima_reject_radius_beyond_pole():
    with pytest.raises(RadiusBeyondPole):
        max_dirichlet_f_over_z(0.5, 0.5)
    with pytest.raises(RadiusBeyondPole):
        max_dirichlet_f(0.7, 0.5)


def test_large_pole_limits_match_analytic_class():
    # as p -> 1 the pole-class forms collapse to the analytic-class ones
    p, r = 0.999, 0.5
    assert max_dirichlet_zf_sigma_p(r, p) == pytest.approx(s_class_dirichlet_zf_max(r), rel=2e-3)
    assert max_dirichlet_f_over_z(r, p) == pytest.approx(
        s_class_dirichlet_f_over_z_max(r), rel=1e-2
    )
    assert max_dirichlet_f(r, p) == pytest.approx(s_class_dirichlet_f_max(r), rel=1e-2)


def test_koebe_attains_analytic_class_zf_bound():
    k = build_koebe_rotation(math.pi / 7)
    for r in (0.3, 0.75, 1.0):
        got = dirichlet_series(k.inv_series, r).value
        assert got == pytest.approx(s_class_dirichlet_zf_max(r), rel=1e-13)


# ---- integral-mean bounds --------------------------------------------------------------

def test_l1_bound_dispatch():
    r = 0.5
    sigma = ClassSpec(ClassKind.SIGMA_P, p=0.5)
    want_sigma = 1.0 + 6.25 * 0.25 + 0.0625
    assert l1_bound(sigma, r) == pytest.approx(want_sigma, rel=1e-15)
    assert l1_bound(ClassSpec(ClassKind.CO_P, p=0.5), r) == l1_bound(sigma, r)
    assert l1_bound(ClassSpec(ClassKind.SIGMA_STAR_P, p=0.5, w0=-0.5), r) == l1_bound(sigma, r)
    assert l1_bound(ClassSpec(ClassKind.S), r) == pytest.approx(2.0625, rel=1e-15)
    u = ClassSpec(ClassKind.U_P_LAMBDA, p=0.5, lam=0.5)
    m = 0.5 * mu(0.5)
    assert l1_bound(u, r) == pytest.approx(1 + (2 + 0.5 * m) ** 2 * 0.25 + m * m * 0.0625, rel=1e-14)


def test_l1_bounds_attained():
    for p in P_GRID:
        spec = ClassSpec(ClassKind.SIGMA_P, p=p)
        f = build_kp(p)
        for r in (0.3, 0.8, 1.0):
            assert l1_mean_series(f, r).value == pytest.approx(l1_bound(spec, r), rel=1e-13)
    for lam in LAMBDAS:
        spec = ClassSpec(ClassKind.U_P_LAMBDA, p=0.35, lam=lam)
        f = build_fp(0.35, lam)
        for r in (0.3, 0.8, 1.0):
            assert l1_mean_series(f, r).value == pytest.approx(l1_bound(spec, r), rel=1e-13)


# ---- report semantics --------------------------------------------------------------------

def test_report_slack_and_flags():
    rep = build_report("X", computed=1.0, bound=2.0, r=0.5)
    assert rep.slack == 1.0 and rep.satisfied and not rep.sharp
    rep = build_report("X", computed=2.0, bound=2.0, r=0.5)
    assert rep.satisfied and rep.sharp
    rep = build_report("X", computed=2.1, bound=2.0, r=0.5)
    assert not rep.satisfied and not rep.sharp


def test_sharp_implies_satisfied_even_for_large_bounds():
    # a big bound widens the relative sharpness window; the satisfied flag
    # must still gate it
    rep = build_report("X", computed=1e6 + 1e-4, bound=1e6, r=0.5)
    assert not rep.satisfied
    assert not rep.sharp


def test_report_random_invariants():
    rng = np.random.default_rng(41)
    for _ in range(200):
        bound = float(rng.uniform(0.1, 100.0))
        computed = bound + float(rng.normal(scale=1e-6))
        rep = build_report("X", computed, bound, r=0.5)
        if rep.sharp:
            assert rep.satisfied
        if rep.slack >= 0:
            assert rep.satisfied


# ---- dispatching check ----------------------------------------------------------------------

def test_check_bound_sharp_cases():
    rep = check_bound(build_kp(0.5), ClassSpec(ClassKind.SIGMA_P, p=0.5),
                      BoundQuantity.DIRICHLET_ZF, 1.0)
    assert rep.sharp
    assert rep.computed == pytest.approx(8.25 * math.pi, rel=1e-14)
    rep = check_bound(build_fp(0.5, 0.5), ClassSpec(ClassKind.U_P_LAMBDA, p=0.5, lam=0.5),
                      BoundQuantity.L1, 0.8)
    assert rep.sharp


def test_check_bound_detects_violation():
    # the pole-class extremal function lies outside the residual class, and
    # its Dirichlet integral overshoots that class's bound
    rep = check_bound(build_kp(0.5), ClassSpec(ClassKind.U_P_LAMBDA, p=0.5, lam=1.0),
                      BoundQuantity.DIRICHLET_ZF, 0.9)
    assert not rep.satisfied


def test_check_bound_koebe_analytic_class():
    rep = check_bound(build_koebe_rotation(0.0), ClassSpec(ClassKind.S), BoundQuantity.L1, 0.5)
    assert rep.sharp
    assert rep.bound == pytest.approx(2.0625, rel=1e-15)


def test_check_bound_class_mismatch():
    with pytest.raises(ClassMismatch):
        check_bound(build_kp(0.5), ClassSpec(ClassKind.SIGMA_P, p=0.6),
                    BoundQuantity.DIRICHLET_ZF, 0.5)
    with pytest.raises(ClassMismatch):
        check_bound(build_kp(0.5), ClassSpec(ClassKind.S), BoundQuantity.L1, 0.5)
    with pytest.raises(ClassMismatch):
        check_bound(build_koebe_rotation(0.0), ClassSpec(ClassKind.SIGMA_P, p=0.5),
                    BoundQuantity.L1, 0.5)


def test_check_bound_quantity_dispatch_guard():
    with pytest.raises(BadParameter):
        check_bound(build_kp(0.5), ClassSpec(ClassKind.SIGMA_P, p=0.5),
                    BoundQuantity.DIRICHLET_F, 0.2)
