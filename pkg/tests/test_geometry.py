import math

import numpy as np
import pytest

from numrange import geometry as geo
from numrange.errors import (
    BadParameter,
    DegenerateCone,
    InsufficientSamples,
    PointNotOnBoundary,
)


# ---------------------------------------------------------------- frames

def test_frame_halfplane_boundary():
    # body = upper half plane, boundary point 0, supporting line = real axis
    fr = geo.canonical_frame(0.0, (math.pi / 2, math.pi / 2), interior_point=1j)
    s = fr.to_frame(np.array([1.0, -2.0, 3.0 + 4.0j]))
    assert np.allclose(s[:, 0], [1.0, -2.0, 3.0])   # xi along the real axis
    assert np.allclose(s[:, 1], [0.0, 0.0, 4.0])    # eta = height into the body
    assert np.all(s[:, 1] >= -1e-15)


def test_frame_corner_midangle():
    fr = geo.canonical_frame(0.0, (math.pi / 4, 3 * math.pi / 4), interior_point=1j)
    assert fr.normal_angle == pytest.approx(math.pi / 2)
    # sector {y >= |x|} maps inside eta >= 0
    s = fr.to_frame(np.array([1 + 1j, -1 + 1j, 2j]))
    assert np.all(s[:, 1] >= -1e-15)


def test_frame_disk_rightmost_point():
    # unit disk, boundary point 1, outward normal angle 0
    fr = geo.canonical_frame(1.0, (0.0, 0.0), interior_point=0.0)
    phis = np.linspace(-0.5, 0.5, 21)
    pts = np.exp(1j * phis)
    s = fr.to_frame(pts)
    assert np.all(s[:, 1] >= -1e-15)            # disk inside eta >= 0
    # ccw (increasing phi) means increasing xi
    assert np.all(np.diff(s[:, 0]) > 0)
    # frame roundtrip
    back = fr.from_frame(s)
    assert np.allclose(back, pts)


def test_frame_degenerate_cone():
    with pytest.raises(DegenerateCone):
        geo.canonical_frame(0.0, (0.0, math.pi))


# ----------------------------------------------------- curvature estimates

def _estimate_curve(kind, alpha=None, window=None):
    s = geo.example_curve(kind, n_samples=400, scale=1.0, alpha=alpha)
    if window is None:
        window = (1e-12, 0.3)
    return geo.curvature_estimates(None, s, window=window)


def test_power_two_gives_unit_curvature():
    est = _estimate_curve("power", alpha=2.0)
    assert est.beta_plus == pytest.approx(2.0, abs=1e-9)
    assert est.beta_minus == pytest.approx(2.0, abs=1e-9)
    for g in (est.gamma_u_plus, est.gamma_l_plus, est.gamma_u_minus, est.gamma_l_minus):
        assert g == pytest.approx(1.0, rel=1e-9)
    cls = geo.classify_point(est, cone_width=0.0)
    assert cls.kind == "round"
    assert 0.9 <= cls.gamma <= 1.1


def test_power_three_curvature_vanishes():
    est = _estimate_curve("power", alpha=3.0)
    assert est.beta_plus == pytest.approx(3.0, abs=1e-9)
    assert est.gamma_l_plus <= 0.1
    cls = geo.classify_point(est, cone_width=0.0)
    assert cls.kind == "round"
    assert cls.gamma <= 0.1


def test_power_three_halves_flags_infinite():
    est = _estimate_curve("power", alpha=1.5)
    assert 1.4 <= est.beta_plus <= 1.6
    assert math.isinf(est.gamma_u_plus)
    assert math.isinf(est.gamma_l_plus)
    assert math.isinf(est.gamma_u_minus)
    cls = geo.classify_point(est, cone_width=0.0)
    assert cls.kind == "unilateral_infinite"
    assert cls.side == "both"


def test_mixed_curve_is_left_unilateral():
    est = _estimate_curve("mixed")
    assert math.isinf(est.gamma_l_minus)
    assert not math.isinf(est.gamma_l_plus)
    assert est.gamma_l_plus == pytest.approx(1.0, rel=1e-6)
    cls = geo.classify_point(est, cone_width=0.0)
    assert cls.kind == "unilateral_infinite"
    assert cls.side == "left"


def test_oscillating_curve_upper_infinite_lower_zero():
    sqrt_contacts, square_contacts = geo.oscillating_contact_scales(1.0)
    window = (float(square_contacts.min()), float(sqrt_contacts.max()))
    s = geo.example_curve("polygonal_oscillating", n_samples=600, scale=1.0)
    est = geo.curvature_estimates(None, s, window=window)
    assert math.isinf(est.gamma_u_plus)
    assert math.isinf(est.gamma_u_minus)
    assert not math.isinf(est.gamma_l_plus)
    assert not math.isinf(est.gamma_l_minus)
    assert est.gamma_l_plus <= 0.1
    assert est.gamma_l_minus <= 0.1
    cls = geo.classify_point(est, cone_width=0.0)
    assert cls.kind == "infinite_upper"


def test_oscillating_envelopes_pinch_curve():
    s = geo.example_curve("polygonal_oscillating", n_samples=400, scale=1.0)
    xi = np.abs(s[:, 0])
    eta = s[:, 1]
    # f is the integral of g with x^2 <= g <= sqrt(x), hence
    # xi^3/3 <= f(xi) <= (2/3) xi^{3/2}
    assert np.all(eta >= xi**3 / 3 - 1e-15)
    assert np.all(eta <= (2.0 / 3.0) * xi**1.5 + 1e-15)


def test_circle_bottom_point_round():
    # circle of radius 1/2: eta = r - sqrt(r^2 - xi^2), curvature value 1/(2r) = 1
    r = 0.5
    xi = np.geomspace(0.1, 1e-7, 80)
    xi = np.concatenate([-xi, xi])
    eta = r - np.sqrt(r * r - xi * xi)
    est = geo.curvature_estimates(None, np.column_stack([xi, eta]),
                                  window=(1e-6, 0.1))
    cls = geo.classify_point(est, cone_width=0.0)
    assert cls.kind == "round"
    assert cls.gamma == pytest.approx(1.0, rel=0.05)


def test_corner_short_circuits():
    s = geo.example_curve("power", alpha=2.0, n_samples=64)
    est = geo.curvature_estimates(None, s, window=(1e-10, 0.3))
    cls = geo.classify_point(est, cone_width=math.pi / 2)
    assert cls.kind == "corner"
    assert cls.cone_width == pytest.approx(math.pi / 2)


def test_gamma_order_invariant():
    for kind, alpha in (("power", 2.0), ("power", 3.0), ("mixed", None)):
        est = _estimate_curve(kind, alpha=alpha)
        assert est.gamma_l_plus <= est.gamma_u_plus or math.isinf(est.gamma_u_plus)
        assert est.gamma_l_minus <= est.gamma_u_minus or math.isinf(est.gamma_u_minus)


def test_insufficient_samples():
    s = np.array([[0.1, 0.01], [0.2, 0.04], [-0.1, 0.01]])
    with pytest.raises(InsufficientSamples):
        geo.curvature_estimates(None, s, window=(1e-6, 1.0))


def test_example_curve_validation():
    with pytest.raises(BadParameter):
        geo.example_curve("power", alpha=5.0)
    with pytest.raises(BadParameter):
        geo.example_curve("power", alpha=1.0)
    with pytest.raises(BadParameter):
        geo.example_curve("power", n_samples=8, alpha=2.0)
    with pytest.raises(BadParameter):
        geo.example_curve("nope")


# -------------------------------------------------------- inscribed disks

def _polyline_from_graph(samples, cap=1.0):
    # close an epigraph sample set into a convex-ish ccw polyline
    # (left-to-right along the graph keeps the interior on the left)
    order = np.argsort(samples[:, 0])
    pts = samples[order]
    poly = [complex(x, y) for x, y in pts]
    poly.append(complex(pts[-1, 0], cap))
    poly.append(complex(pts[0, 0], cap))
    return np.array(poly)


def test_inscribed_disk_unit_disk():
    phis = np.linspace(0, 2 * math.pi, 720, endpoint=False)
    hull = np.exp(1j * phis)
    r = geo.inscribed_disk_radius(1.0 + 0j, hull)
    assert r == pytest.approx(1.0, rel=5e-3)


def test_inscribed_disk_square_corner():
    t = np.linspace(0, 1, 2001)
    hull = np.concatenate([
        t, 1 + 1j * t, (1 - t) + 1j, 1j * (1 - t),
    ])
    r = geo.inscribed_disk_radius(0.0 + 0j, hull)
    assert r <= 1e-3


def test_inscribed_disk_power_curves():
    # parabola: osculating disk radius 1/2; exponent 1.5: no disk fits
    s2 = geo.example_curve("power", alpha=2.0, n_samples=400)
    hull2 = _polyline_from_graph(s2, cap=1.5)
    r2 = geo.inscribed_disk_radius(0j, hull2)
    assert r2 == pytest.approx(0.5, rel=1e-3)

    s15 = geo.example_curve("power", alpha=1.5, n_samples=400)
    hull15 = _polyline_from_graph(s15, cap=1.5)
    r15 = geo.inscribed_disk_radius(0j, hull15)
    assert r15 <= 1e-4


def test_inscribed_disk_membership_check():
    phis = np.linspace(0, 2 * math.pi, 360, endpoint=False)
    hull = np.exp(1j * phis)
    with pytest.raises(PointNotOnBoundary):
        geo.inscribed_disk_radius(0.2 + 0.1j, hull)


def test_disk_radius_zero_iff_infinite_upper_curvature():
    # the two sides of the equivalence, at fixture scale
    for alpha, infinite in ((2.0, False), (3.0, False), (1.5, True), (1.2, True)):
        s = geo.example_curve("power", alpha=alpha, n_samples=400)
        hull = _polyline_from_graph(s, cap=1.5)
        r = geo.inscribed_disk_radius(0j, hull)
        est = geo.curvature_estimates(None, s, window=(1e-12, 0.3))
        flagged = math.isinf(est.gamma_u_plus) or math.isinf(est.gamma_u_minus)
        assert flagged == infinite
        if infinite:
            assert r <= 1e-3
        else:
            assert r > 1e-2


# ------------------------------------------------------ support curvature

def test_support_curvature_disk():
    thetas = np.linspace(-0.5, 0.5, 11)
    samples = np.column_stack([thetas, np.full_like(thetas, 2.0)])
    rho, gamma = geo.support_curvature(samples, 0.0)
    assert rho == pytest.approx(2.0, abs=1e-9)
    assert gamma == pytest.approx(0.25, abs=1e-9)


def test_support_curvature_point_set():
    thetas = np.linspace(-0.5, 0.5, 11)
    samples = np.column_stack([thetas, np.zeros_like(thetas)])
    rho, gamma = geo.support_curvature(samples, 0.0)
    assert rho == pytest.approx(0.0, abs=1e-12)
    assert math.isinf(gamma)


def test_support_curvature_segment():
    # support function of the segment [-1, 1] is |cos theta|; away from the
    # kinks h + h'' = 0, so the curvature radius vanishes at theta = 0
    thetas = np.linspace(-0.2, 0.2, 21)
    samples = np.column_stack([thetas, np.abs(np.cos(thetas))])
    rho, gamma = geo.support_curvature(samples, 0.0)
    assert abs(rho) < 1e-3
    assert math.isinf(gamma)


def test_support_curvature_agrees_with_frame_estimates():
    # smooth fixtures: circle of radius r; agreement within 10%
    for r in (0.5, 2.0):
        thetas = np.linspace(-0.3, 0.3, 13) - math.pi / 2
        samples = np.column_stack([thetas, np.full_like(thetas, r)])
        rho, gamma_sup = geo.support_curvature(samples, -math.pi / 2)
        xi = np.geomspace(r * 0.2, r * 1e-7, 60)
        xi = np.concatenate([-xi, xi])
        eta = r - np.sqrt(r * r - xi * xi)
        est = geo.curvature_estimates(None, np.column_stack([xi, eta]),
                                      window=(r * 1e-6, r * 0.2))
        cls = geo.classify_point(est, 0.0)
        assert abs(cls.gamma - gamma_sup) <= 0.1 * gamma_sup


def test_support_curvature_needs_grid():
    with pytest.raises(InsufficientSamples):
        geo.support_curvature([(0.0, 1.0), (0.1, 1.0)], 0.0)
