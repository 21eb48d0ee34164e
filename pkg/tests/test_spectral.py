import math

import numpy as np
import pytest

from numrange import spectral as spc
from numrange.boundary import classify_boundary, compute_boundary
from numrange.errors import EmptyFamily, NotAnEigenpair, NotNormalized, PointNotOnBoundary
from numrange.gallery import jordan_block, normal_from_eigs, random_normal_matrix

TRI01I = np.diag([0.0, 1.0, 1j])
TRIANGLE = np.diag([0.0, 1.0 + 1j, -1.0 + 1j])   # corner at 0, edges at slopes +-1
TANGENT_DISK = np.array([[1j, 2.0], [0.0, 1j]])  # disk of radius 1 around 1j
DISK = np.array([[0, 1], [0, 0]], dtype=complex)


# ------------------------------------------------------------ normalization

def test_normalize_triangle_corner_rotates_by_quarter_turn():
    atlas = compute_boundary(TRI01I, angle_budget=512, refine_tol=1e-6)
    b, rec = spc.normalize_at(TRI01I, 0.0, atlas)
    # outward normals at 0 span [pi, 3pi/2]; the sector axis lands on the
    # imaginary axis after rotating by pi/4
    assert rec.a == pytest.approx(np.exp(1j * math.pi / 4), abs=1e-6)
    assert rec.b == pytest.approx(0.0, abs=1e-12)
    moved = rec.a * atlas.vertices + rec.b
    assert moved.imag.min() >= -1e-9 * atlas.scale


def test_normalize_identity_when_already_normalized():
    atlas = compute_boundary(TRIANGLE, angle_budget=512, refine_tol=1e-6)
    b, rec = spc.normalize_at(TRIANGLE, 0.0, atlas)
    assert rec.a == pytest.approx(1.0, abs=1e-6)
    assert rec.b == pytest.approx(0.0, abs=1e-12)


def test_normalize_disk_rightmost():
    atlas = compute_boundary(DISK, angle_budget=512, refine_tol=1e-6)
    b, rec = spc.normalize_at(DISK, 0.5, atlas)
    # outward normal 0 -> rotation by -pi/2
    assert abs(rec.a - np.exp(-1j * math.pi / 2)) < 1e-4
    moved = rec.a * atlas.vertices + rec.b
    assert moved.imag.min() >= -1e-9 * atlas.scale
    assert abs(moved).min() <= 1e-9 * atlas.scale


def test_normalize_rejects_interior_point():
    atlas = compute_boundary(TRI01I, angle_budget=256, refine_tol=1e-6)
    with pytest.raises(PointNotOnBoundary):
        spc.normalize_at(TRI01I, 0.3 + 0.2j, atlas)


# ------------------------------------------------------ eigenvalue checks

def test_corner_eigenvalue_check_triangle():
    atlas = compute_boundary(TRI01I, angle_budget=512, refine_tol=1e-6)
    classified = classify_boundary(TRI01I, atlas)
    reports = spc.corner_eigenvalue_check(TRI01I, classified)
    corners = [r for r in reports if r.verdict == "pass"]
    assert len(corners) >= 3
    assert all(r.margin <= 1e-8 * np.linalg.norm(TRI01I) for r in reports)


def test_corner_eigenvalue_check_second_fixture():
    a = np.diag([0.0, 1.0 + 1j, -1.0 + 1j])
    atlas = compute_boundary(a, angle_budget=512, refine_tol=1e-6)
    classified = classify_boundary(a, atlas, targets=[0.0])
    reports = spc.corner_eigenvalue_check(a, classified)
    assert len(reports) == 1
    assert reports[0].verdict == "pass"
    assert reports[0].margin <= 1e-10


def test_corner_eigenvalue_check_disk_empty():
    atlas = compute_boundary(DISK, angle_budget=512, refine_tol=1e-6)
    classified = classify_boundary(DISK, atlas, n_spread=8)
    reports = spc.corner_eigenvalue_check(DISK, classified)
    assert reports == []


def test_spectrum_membership_checks():
    r0 = spc.spectrum_membership_check(TRI01I, 0.0)
    assert r0.verdict == "pass"
    assert r0.margin <= 1e-14
    assert np.linalg.norm((TRI01I - 0.0 * np.eye(3)) @ r0.witness) <= 1e-13

    r1 = spc.spectrum_membership_check(TRI01I, 0.5)
    assert r1.margin == pytest.approx(0.5, abs=1e-12)
    assert r1.verdict == "fail"  # 0.5 is not in the spectrum; informational


# -------------------------------------------------------- normality checks

def test_normality_diagonal():
    atlas = compute_boundary(TRI01I, angle_budget=256, refine_tol=1e-6)
    rep = spc.boundary_eigen_normality_check(
        TRI01I, 1.0, np.array([0, 1, 0]), atlas)
    assert rep.verdict == "pass"
    assert rep.margin <= 1e-14


def test_normality_block_diagonal():
    a = np.zeros((5, 5), dtype=complex)
    a[0, 0], a[1, 1], a[2, 2] = 0.0, 1.0, 1j
    a[3:, 3:] = np.array([[2.0, 1.0], [0.0, 2.0]])
    atlas = compute_boundary(a, angle_budget=512, refine_tol=1e-6)
    v = np.zeros(5, dtype=complex)
    v[2] = 1.0
    rep = spc.boundary_eigen_normality_check(a, 1j, v, atlas)
    assert rep.verdict == "pass"
    assert rep.margin <= 1e-13


def test_normality_random_normal_extreme():
    a = random_normal_matrix(5, 6)
    w, vecs = np.linalg.eig(a)
    k = int(np.argmax(w.real))
    atlas = compute_boundary(a, angle_budget=512, refine_tol=1e-6)
    rep = spc.boundary_eigen_normality_check(a, w[k], vecs[:, k], atlas)
    assert rep.verdict == "pass"


def test_normality_rejects_bad_pair():
    atlas = compute_boundary(TRI01I, angle_budget=256, refine_tol=1e-6)
    with pytest.raises(NotAnEigenpair):
        spc.boundary_eigen_normality_check(TRI01I, 1.0, np.array([1, 1, 0]), atlas)


# ------------------------------------------------------------ K functional

def test_k_functional_triangle_analytic():
    # on the lower-right edge z = t(1+i): Im/Re^2 = 1/t, minimized at the
    # cutoff t = a/sqrt(2), so K(a) = sqrt(2)/a
    atlas = compute_boundary(TRIANGLE, angle_budget=512, refine_tol=1e-6)
    for a in (0.2, 0.1, 0.05, 0.025):
        k = spc.k_functional(TRIANGLE, a, atlas)
        assert k == pytest.approx(math.sqrt(2) / a, rel=1e-6)
    k01 = spc.k_functional(TRIANGLE, 0.1, atlas)
    assert k01 == pytest.approx(14.1421, abs=1e-3)


def test_k_functional_corner_divergence_product():
    atlas = compute_boundary(TRIANGLE, angle_budget=512, refine_tol=1e-6)
    for a in (0.2, 0.1, 0.05, 0.025):
        k = spc.k_functional(TRIANGLE, a, atlas)
        assert math.sqrt(2) * 0.9 <= k * a <= math.sqrt(2) * 1.1


def test_k_functional_round_limit():
    atlas = compute_boundary(TANGENT_DISK, angle_budget=1024, refine_tol=1e-6)
    k = spc.k_functional(TANGENT_DISK, 0.05, atlas)
    assert 0.45 <= k <= 0.55
    for a in (0.2, 0.1, 0.05, 0.025):
        k = spc.k_functional(TANGENT_DISK, a, atlas)
        assert 0.45 <= k <= 0.55


def test_k_functional_monotone():
    for mat in (TRIANGLE, TANGENT_DISK):
        atlas = compute_boundary(mat, angle_budget=512, refine_tol=1e-6)
        grid = [0.4, 0.2, 0.1, 0.05, 0.025, 0.0125]
        vals = [spc.k_functional(mat, a, atlas) for a in grid]
        for k1, k2 in zip(vals, vals[1:]):
            assert k2 >= k1 - 1e-12   # smaller radius, no smaller infimum


def test_k_functional_interior_sampling_cross_check():
    # dense interior sampling can only see values >= the boundary infimum
    atlas = compute_boundary(TRIANGLE, angle_budget=512, refine_tol=1e-6)
    a = 0.1
    k = spc.k_functional(TRIANGLE, a, atlas)
    rng = np.random.default_rng(0)
    x = rng.uniform(-a, a, size=200_000)
    y = rng.uniform(0, a, size=200_000)
    feas = (y >= np.abs(x)) & (x > 0) & (np.hypot(x, y) < a)
    vals = y[feas] / x[feas] ** 2
    assert vals.min() >= k - 1e-9
    assert vals.min() <= k * 1.1   # sampling approaches the infimum


def test_k_functional_empty_feasible_set():
    # radius so small that no sampled range point qualifies
    atlas = compute_boundary(TRIANGLE, angle_budget=256, refine_tol=1e-6)
    k = spc.k_functional(TRIANGLE, 1e-30, atlas)
    assert math.isinf(k)


def test_k_functional_requires_normalization():
    # range = triangle {-1j, 1, 1j}: 0 lies on its boundary, but the range
    # dips below the real axis
    a = np.diag([-1j, 1.0, 1j])
    atlas = compute_boundary(a, angle_budget=256, refine_tol=1e-6)
    with pytest.raises(NotNormalized):
        spc.k_functional(a, 0.1, atlas)


# ----------------------------------------------------- discretization probe

def test_probe_lshape_diagonals():
    def member(n):
        pts = np.concatenate([np.linspace(0, 1, n), 1j * np.linspace(0, 1, n)[1:]])
        return normal_from_eigs(pts)

    fam = [member(n) for n in (6, 10, 16)]
    reports = spc.discretization_sequence_probe(fam, 0.0, disk_radius=0.35)
    trend = [r for r in reports if r.theorem_id == "spectral_probe_trend"]
    assert len(trend) == 1
    assert trend[0].verdict == "pass"
    members = [r for r in reports if r.theorem_id == "spectral_probe_member"]
    assert len(members) == 3
    for r in members:
        assert abs(r.point) <= 0.05   # corner at 0 persists
    counts = [int(r.diagnostics.split(",")[-1].split()[0]) for r in members]
    assert counts == sorted(counts)


def test_probe_jordan_disks_empty():
    fam = [jordan_block(n, 0.0) for n in (4, 8, 16)]
    reports = spc.discretization_sequence_probe(fam, 0.0)
    assert reports == []


def test_probe_validates_family():
    with pytest.raises(EmptyFamily):
        spc.discretization_sequence_probe([], 0.0)
    with pytest.raises(EmptyFamily):
        spc.discretization_sequence_probe([np.eye(4), np.eye(2)], 0.0)


def test_probe_bump_discretization_sweep():
    # widening boxes push the non-smooth point toward 0 at the rate of the
    # box ground energy (pi/2L)^2, while eigenvalues accumulate near it
    from numrange.gallery import GridSpec, bump_schrodinger

    fam = [bump_schrodinger(1 + 1j, GridSpec(L, n))
           for (L, n) in ((10.0, 200), (20.0, 400), (40.0, 800))]
    reps = spc.discretization_sequence_probe(fam, 0.0)
    trend = [r for r in reps if r.theorem_id == "spectral_probe_trend"]
    members = [r for r in reps if r.theorem_id == "spectral_probe_member"]
    assert len(trend) == 1 and len(members) == 3
    assert trend[0].verdict == "pass"
    dists = [abs(r.point) for r in members]
    assert dists[0] > dists[1] > dists[2]
    assert dists[2] <= 0.01
