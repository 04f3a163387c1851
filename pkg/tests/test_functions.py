import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from merobounds.errors import BadParameter, PoleMismatch
from merobounds.functions import (
    NO_POLE,
    ClassKind,
    ClassSpec,
    PoleFunction,
    build_fp,
    build_koebe_rotation,
    build_kp,
    f_over_z_series,
    from_csv_row,
    from_inverse_coefficients,
    mu,
    to_csv_row,
)
from merobounds.series import TruncatedSeries


def jenkins_coefficient(n, p):
    """Closed form for the Taylor coefficients a_n of the extremal pole map."""
    return (1.0 - p ** (2 * n)) / ((1.0 - p * p) * p ** (n - 1))


# ---- mu ---------------------------------------------------------------------

def test_mu_values():
    assert mu(0.5) == pytest.approx(1.0 / 9.0, rel=1e-15)
    assert mu(0.2) == pytest.approx((0.8 / 1.2) ** 2, rel=1e-15)


def test_mu_domain():
    for bad in (0.0, 1.0, -0.3, 2.0):
        with pytest.raises(BadParameter):
            mu(bad)


@settings(max_examples=80, deadline=None)
@given(st.floats(min_value=1e-6, max_value=1 - 1e-6),
       st.floats(min_value=1e-6, max_value=1 - 1e-6))
def test_mu_range_and_monotonicity(p1, p2):
    m1, m2 = mu(p1), mu(p2)
    assert 0.0 < m1 < 1.0
    if p1 < p2:
        assert m1 > m2


# ---- canonical constructions --------------------------------------------------

def test_build_kp_coefficients():
    f = build_kp(0.5, order=6)
    c = f.inv_series.coefficients
    assert c[0] == 1.0
    assert c[1] == -2.5
    assert c[2] == 1.0
    assert np.all(c[3:] == 0.0)
    assert abs(f.inv_series.evaluate(0.5)) < 1e-14


def test_build_fp_coefficients():
    f = build_fp(0.5, 1.0, order=4)
    c = f.inv_series.coefficients
    assert c[1] == pytest.approx(-37.0 / 18.0, rel=1e-15)
    assert c[2] == pytest.approx(1.0 / 9.0, rel=1e-15)
    # lambda scales the z^2 coefficient linearly
    g = build_fp(0.5, 0.5, order=4)
    assert g.inv_series[2] == pytest.approx(1.0 / 18.0, rel=1e-15)


def test_build_fp_lambda_one_does_not_collapse_to_kp():
    f, k = build_fp(0.3, 1.0), build_kp(0.3)
    assert abs(f.inv_series[2]) < 1.0
    assert k.inv_series[2] == 1.0


@pytest.mark.parametrize("theta,b1", [(0.0, -2.0), (math.pi, 2.0)])
def test_build_koebe_rotation(theta, b1):
    f = build_koebe_rotation(theta, order=3)
    assert f.pole is NO_POLE
    assert f.inv_series[1] == pytest.approx(b1, abs=1e-15)
    assert abs(f.inv_series[2]) == pytest.approx(1.0, rel=1e-15)


def test_constructor_validation():
    for bad_p in (0.0, 1.0, -0.1, 1.7):
        with pytest.raises(BadParameter):
            build_kp(bad_p)
    with pytest.raises(BadParameter):
        build_fp(0.5, 0.0)
    with pytest.raises(BadParameter):
        build_fp(0.5, 1.2)
    with pytest.raises(BadParameter):
        build_kp(0.5, order=1)
    with pytest.raises(BadParameter):
        build_koebe_rotation(math.inf)


# ---- PoleFunction validation ---------------------------------------------------

def test_constant_term_must_be_one():
    with pytest.raises(BadParameter):
        PoleFunction(TruncatedSeries([0.99, -2.0, 1.0]), pole=None)


def test_pole_residual_check():
    # 1 - 2 z vanishes at 0.5, so that pole is accepted; 1 - z is not.
    ok = from_inverse_coefficients([-2.0], pole=0.5)
    assert ok.pole == 0.5
    with pytest.raises(PoleMismatch):
        from_inverse_coefficients([-1.0], pole=0.5)


def test_pole_range_check():
    with pytest.raises(BadParameter):
        from_inverse_coefficients([-2.0], pole=1.5)


# ---- f/z reciprocal series ------------------------------------------------------

@pytest.mark.parametrize("p", [0.3, 0.5, 0.7])
def test_f_over_z_matches_coefficient_closed_form(p):
    f = build_kp(p, order=16)
    d = f_over_z_series(f)
    # entry n holds a_{n+1}; compare n = 0..12 against the closed form
    for n in range(13):
        want = jenkins_coefficient(n + 1, p)
        assert complex(d.coefficients[n]) == pytest.approx(want, rel=1e-10)


def test_f_over_z_identity_function():
    f = from_inverse_coefficients([0.0, 0.0, 0.0])
    d = f_over_z_series(f)
    assert np.allclose(d.coefficients, [1.0, 0.0, 0.0, 0.0], atol=0)


def test_f_over_z_order_handling():
    f = build_kp(0.5, order=10)
    assert f_over_z_series(f, order=4).order == 4
    with pytest.raises(BadParameter):
        f_over_z_series(f, order=11)


def test_f_over_z_roundtrip_scale_relative():
    # (z/f) * (f/z) = 1, checked relative to the convolution term size since
    # the reciprocal coefficients grow like p**(-n).
    for p in (0.2, 0.5, 0.8):
        f = build_kp(p)
        d = f_over_z_series(f)
        prod = f.inv_series.multiply(d)
        unit = np.zeros(f.order + 1, dtype=complex)
        unit[0] = 1.0
        scale = np.convolve(
            np.abs(f.inv_series.coefficients), np.abs(d.coefficients)
        )[: f.order + 1]
        rel = np.abs(prod.coefficients - unit) / np.maximum(scale, 1.0)
        assert rel.max() <= 1e-12


def test_f_over_z_roundtrip_absolute_small_order():
    f = build_kp(0.6, order=10)
    prod = f.inv_series.multiply(f_over_z_series(f))
    unit = np.zeros(11, dtype=complex)
    unit[0] = 1.0
    assert np.max(np.abs(prod.coefficients - unit)) <= 1e-12


# ---- ClassSpec -------------------------------------------------------------------

def test_class_spec_happy_paths():
    ClassSpec(ClassKind.SIGMA_P, p=0.5)
    ClassSpec(ClassKind.U_P_LAMBDA, p=0.5, lam=1.0)
    ClassSpec(ClassKind.S)
    ClassSpec(ClassKind.CO_P, p=0.25)
    ClassSpec(ClassKind.SIGMA_STAR_P, p=0.5, w0=-0.5)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(kind=ClassKind.SIGMA_P),                               # missing p
        dict(kind=ClassKind.SIGMA_P, p=1.2),                        # p out of range
        dict(kind=ClassKind.SIGMA_P, p=0.5, lam=0.5),               # stray lambda
        dict(kind=ClassKind.U_P_LAMBDA, p=0.5),                     # missing lambda
        dict(kind=ClassKind.U_P_LAMBDA, p=0.5, lam=0.0),            # lambda out of range
        dict(kind=ClassKind.U_P_LAMBDA, p=0.5, lam=1.5),
        dict(kind=ClassKind.S, p=0.5),                              # S has no pole
        dict(kind=ClassKind.S, w0=-1.0),
        dict(kind=ClassKind.CO_P, p=0.5, w0=-1.0),                  # stray w0
        dict(kind=ClassKind.SIGMA_STAR_P, p=0.5),                   # missing w0
        dict(kind=ClassKind.SIGMA_STAR_P, p=0.5, w0=-3.0),          # w0 below range
        dict(kind=ClassKind.SIGMA_STAR_P, p=0.5, w0=-0.1),          # w0 above range
    ],
)
def test_class_spec_rejects(kwargs):
    with pytest.raises(BadParameter):
        ClassSpec(**kwargs)


def test_sigma_star_w0_interval_endpoints():
    p = 0.5
    ClassSpec(ClassKind.SIGMA_STAR_P, p=p, w0=-p / (1 - p) ** 2)
    ClassSpec(ClassKind.SIGMA_STAR_P, p=p, w0=-p / (1 + p) ** 2)


# ---- CSV row form ------------------------------------------------------------------

def test_csv_roundtrip_with_pole():
    f = build_fp(0.35, 0.75, order=5)
    row = to_csv_row(f)
    assert row[0] == repr(0.35)
    assert row[1] == "5"
    g = from_csv_row(row)
    assert g.pole == f.pole
    assert np.array_equal(g.inv_series.coefficients, f.inv_series.coefficients)


def test_csv_roundtrip_without_pole():
    f = build_koebe_rotation(math.pi / 3, order=4)
    g = from_csv_row(to_csv_row(f))
    assert g.pole is NO_POLE
    assert np.array_equal(g.inv_series.coefficients, f.inv_series.coefficients)


@pytest.mark.parametrize(
    "fields",
    [
        [],
        ["0.5"],
        ["0.5", "2", "1.0"],            # wrong coefficient count
        ["0.5", "x", "1.0", "0.0"],     # unparseable order
        ["oops", "1", "1.0", "0.0"],    # unparseable pole
        ["0.5", "0"],                   # zero order carries no coefficients
    ],
)
def test_csv_rejects_malformed(fields):
    with pytest.raises(BadParameter):
        from_csv_row(fields)
