"""Planar convex-boundary geometry: canonical frames, one-sided curvature.

A boundary point of a convex body is studied in a local frame whose first
axis lies on a supporting line. In that frame the boundary is a graph
eta = f(xi) with f >= 0, and the one-sided upper/lower curvatures are the
limsup/liminf of eta/xi^2 as xi -> 0 from either side. (This curvature
convention is half the classical one; a circle of radius r gets 1/(2r).)

At finite resolution the limits are replaced by scaling diagnostics over a
window [eps_min, eps_max]: divergence of the ratio eta/xi^2 is detected
through log-log slopes of its dyadic-band envelopes, and the reported
values come from the finest scales the window reaches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    AmbiguousClassification,
    BadParameter,
    DegenerateCone,
    InsufficientSamples,
    PointNotOnBoundary,
)

# Classification thresholds and geometric tolerances (relative unless noted).
DELTA_EXP = 0.15      # exponent margin: slope < -DELTA_EXP flags divergence
ANGLE_TOL = 1e-3      # radians; normal cones wider than this mean "corner"
TOL_GEOM_REL = 1e-9   # x diameter
RHO_TOL_REL = 1e-6    # x scale; curvature radius below this flags infinity
N_MIN = 8             # minimum samples per side for curvature estimation
BETA_CAP = 20.0       # reported exponent for sides with no positive eta data
EPS_MAX_REL = 0.1     # default window ceiling, x diameter
EPS_MIN_REL = 1e-6    # default window floor, x diameter


@dataclass(frozen=True)
class CanonicalFrame:
    """Local coordinates at a boundary point.

    origin: the boundary point. normal_angle: angle of the chosen supporting
    line's normal. body_sign +1 means the body lies toward
    e^{i normal_angle}; -1 means away (the support-sweep convention, where
    the angle is the outward normal). Either way the transform puts the body
    in {eta >= 0} with xi increasing counterclockwise along the boundary.
    """

    origin: complex
    normal_angle: float
    body_sign: float = 1.0

    def to_frame(self, points) -> np.ndarray:
        """Map complex points to an (n, 2) array of (xi, eta)."""
        z = np.atleast_1d(np.asarray(points, dtype=complex))
        w = (z - self.origin) * np.exp(-1j * self.normal_angle)
        eta = self.body_sign * w.real
        xi = -self.body_sign * w.imag
        return np.column_stack([xi, eta])

    def from_frame(self, samples) -> np.ndarray:
        s = np.atleast_2d(np.asarray(samples, dtype=float))
        w = self.body_sign * (s[:, 1] - 1j * s[:, 0])
        return self.origin + w * np.exp(1j * self.normal_angle)


def canonical_frame(lam: complex, normal_cone, interior_point=None) -> CanonicalFrame:
    """Frame at lam whose supporting-line normal is the cone's mid-angle.

    normal_cone is (theta1, theta2) with theta1 <= theta2 and width < pi;
    a single supporting line is the degenerate cone (theta, theta). The
    body side is fixed from interior_point when given, else the body is
    assumed to lie toward e^{i theta*}.
    """
    th1, th2 = float(normal_cone[0]), float(normal_cone[1])
    if th2 < th1:
        raise BadParameter("normal cone must have theta1 <= theta2")
    if th2 - th1 >= math.pi:
        raise DegenerateCone(f"normal cone width {th2 - th1:.3f} >= pi")
    mid = 0.5 * (th1 + th2)
    sign = 1.0
    if interior_point is not None:
        proj = (np.exp(-1j * mid) * (complex(interior_point) - complex(lam))).real
        sign = 1.0 if proj >= 0 else -1.0
    return CanonicalFrame(origin=complex(lam), normal_angle=mid, body_sign=sign)


@dataclass
class CurvatureEstimate:
    """One-sided curvature diagnostics at a boundary point.

    gamma_* are the upper/lower curvature estimates per side (math.inf when
    the scaling analysis flags divergence); beta_* are least-squares
    exponents of log eta vs log |xi| over the window.
    """

    gamma_u_plus: float
    gamma_l_plus: float
    gamma_u_minus: float
    gamma_l_minus: float
    beta_plus: float
    beta_minus: float
    scale_window: tuple[float, float]
    n_plus: int = 0
    n_minus: int = 0
    flat_plus: bool = False
    flat_minus: bool = False
    ambiguous: bool = False
    median_ratio: float = 0.0
    diagnostics: str = ""


@dataclass(frozen=True)
class BoundaryClass:
    """Verdict for one boundary point.

    kind is one of 'round', 'infinite_upper', 'unilateral_infinite',
    'corner', 'flat_interior'. gamma is set for 'round', side
    ('left'|'right'|'both') for 'unilateral_infinite', cone_width for
    'corner'.
    """

    kind: str
    gamma: float | None = None
    side: str | None = None
    cone_width: float | None = None

    @staticmethod
    def round_point(gamma: float) -> "BoundaryClass":
        return BoundaryClass(kind="round", gamma=float(gamma))

    @staticmethod
    def infinite_upper() -> "BoundaryClass":
        return BoundaryClass(kind="infinite_upper")

    @staticmethod
    def unilateral(side: str) -> "BoundaryClass":
        return BoundaryClass(kind="unilateral_infinite", side=side)

    @staticmethod
    def corner(width: float) -> "BoundaryClass":
        return BoundaryClass(kind="corner", cone_width=float(width))

    @staticmethod
    def flat_interior() -> "BoundaryClass":
        return BoundaryClass(kind="flat_interior")


def _ls_slope(logx: np.ndarray, logy: np.ndarray) -> float:
    if len(logx) < 2:
        return 0.0
    x = logx - logx.mean()
    den = float(np.dot(x, x))
    if den == 0.0:
        return 0.0
    return float(np.dot(x, logy - logy.mean()) / den)


def _side_analysis(xi: np.ndarray, eta: np.ndarray, eps_min: float,
                   eps_max: float, delta_exp: float, eta_floor: float):
    """Scaling diagnostics for one side; xi is positive here."""
    ratio = np.maximum(eta, 0.0) / xi**2
    pos = eta > max(eta_floor, 0.0)

    out = {
        "flat": False, "gamma_u": 0.0, "gamma_l": 0.0,
        "beta": BETA_CAP, "flag_u": False, "flag_l": False,
        "slope_up": 0.0, "slope_lo": 0.0, "ambiguous": False, "note": "",
    }
    if int(pos.sum()) < 4:
        out["flat"] = True
        return out

    out["beta"] = _ls_slope(np.log(xi[pos]), np.log(eta[pos]))

    # Dyadic bands by |xi|; envelope of ratio maxima detects upper-curvature
    # divergence even when the profile oscillates.
    k = np.floor(np.log2(eps_max / xi)).astype(int)
    k = np.clip(k, 0, None)
    nbands = int(k.max()) + 1
    band_x, band_max = [], []
    for kk in range(nbands):
        mask = k == kk
        if not np.any(mask):
            continue
        band_x.append(float(np.exp(np.mean(np.log(xi[mask])))))
        band_max.append(float(ratio[mask].max()))
    band_x = np.asarray(band_x)
    band_max = np.asarray(band_max)
    ok = band_max > 0
    if ok.sum() >= 2:
        out["slope_up"] = _ls_slope(np.log(band_x[ok]), np.log(band_max[ok]))
    out["flag_u"] = out["slope_up"] < -delta_exp

    # Lower-curvature proxy from minima over log-quarters of the window:
    # wide cells keep isolated flat contacts from masquerading as growth.
    edges = np.exp(np.linspace(math.log(eps_min), math.log(eps_max), 5))
    q_x, q_min = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        mask = (xi >= a) & (xi <= b)
        if not np.any(mask):
            continue
        q_x.append(math.sqrt(a * b))
        q_min.append(float(ratio[mask].min()))
    q_x = np.asarray(q_x)
    q_min = np.asarray(q_min)
    okq = q_min > 0
    if okq.sum() >= 2:
        out["slope_lo"] = _ls_slope(np.log(q_x[okq]), np.log(q_min[okq]))
    elif len(q_min) and np.any(q_min == 0.0):
        out["slope_lo"] = 0.0  # exact-zero ratios: certainly not diverging
    else:
        out["slope_lo"] = out["slope_up"]
    out["flag_l"] = out["slope_lo"] < -delta_exp
    if out["flag_l"] and not out["flag_u"]:
        out["flag_u"] = True  # min envelope cannot outgrow the max envelope

    # Values at the finest reachable scales.
    finest_band = int(k.max())
    in_finest_band = k == finest_band
    out["gamma_u"] = math.inf if out["flag_u"] else float(ratio[in_finest_band].max())
    fine_quarter = xi <= edges[1]
    if not np.any(fine_quarter):
        fine_quarter = in_finest_band
    out["gamma_l"] = math.inf if out["flag_l"] else float(ratio[fine_quarter].min())
    if not math.isinf(out["gamma_u"]):
        out["gamma_l"] = min(out["gamma_l"], out["gamma_u"])

    # Cross-window consistency of the decisive upper-envelope fit. Slope
    # disagreement alone is not ambiguity: oscillating profiles legitimately
    # mix local slopes. Only flag when the fine/coarse magnitude ordering
    # contradicts the whole-window verdict as well.
    if ok.sum() >= 6:
        mid = math.sqrt(eps_min * eps_max)
        fine = band_x[ok] <= mid
        coarse = ~fine
        if fine.sum() >= 3 and coarse.sum() >= 3:
            sf = _ls_slope(np.log(band_x[ok][fine]), np.log(band_max[ok][fine]))
            sc = _ls_slope(np.log(band_x[ok][coarse]), np.log(band_max[ok][coarse]))
            verdict_differs = (sf < -delta_exp) != (sc < -delta_exp)
            mf = float(band_max[ok][fine].max())
            mc = float(band_max[ok][coarse].max())
            magnitudes_agree = (mf >= mc) == out["flag_u"] or math.isclose(
                mf, mc, rel_tol=0.5)
            if verdict_differs and abs(sf - sc) > 2 * delta_exp and not magnitudes_agree:
                out["ambiguous"] = True
                out["note"] = (
                    f"half-window envelope evidence disagrees: slopes fine "
                    f"{sf:.3f} vs coarse {sc:.3f}, maxima fine {mf:.3e} vs "
                    f"coarse {mc:.3e}"
                )
    return out


def curvature_estimates(frame, samples, window=None, delta_exp=DELTA_EXP,
                        n_min=N_MIN, eta_floor=0.0) -> CurvatureEstimate:
    """Estimate one-sided curvatures from frame samples (xi, eta).

    samples is an (n, 2) array in the canonical frame (frame itself is only
    used for validation and may be None). window = (eps_min, eps_max)
    restricts the analysis to eps_min <= sqrt(xi^2+eta^2) <= eps_max;
    defaults span the sample extent. Requires n_min samples per side in the
    window, else raises InsufficientSamples.
    """
    s = np.atleast_2d(np.asarray(samples, dtype=float))
    if s.shape[1] != 2:
        raise BadParameter("samples must be (n, 2) pairs (xi, eta)")
    xi, eta = s[:, 0], s[:, 1]
    r = np.hypot(xi, eta)
    if window is None:
        rmax = float(r.max()) if len(r) else 0.0
        window = (max(float(r[r > 0].min()) if np.any(r > 0) else 0.0, 1e-300), rmax)
    eps_min, eps_max = float(window[0]), float(window[1])
    if not (0 < eps_min < eps_max):
        raise BadParameter(f"bad scale window {window}")

    keep = (r >= eps_min) & (r <= eps_max) & (xi != 0.0)
    sides = {}
    for name, mask in (("plus", keep & (xi > 0)), ("minus", keep & (xi < 0))):
        n = int(mask.sum())
        if n < n_min:
            raise InsufficientSamples(
                f"{n} samples on {name} side in window [{eps_min:.3e}, {eps_max:.3e}]"
                f" (need {n_min})", side=name)
        sides[name] = _side_analysis(np.abs(xi[mask]), eta[mask], eps_min,
                                     eps_max, delta_exp, eta_floor)
        sides[name]["n"] = n

    p, m = sides["plus"], sides["minus"]
    ratios = np.maximum(eta[keep], 0.0) / xi[keep]**2
    notes = "; ".join(t for t in (p["note"], m["note"]) if t)
    return CurvatureEstimate(
        gamma_u_plus=p["gamma_u"], gamma_l_plus=p["gamma_l"],
        gamma_u_minus=m["gamma_u"], gamma_l_minus=m["gamma_l"],
        beta_plus=p["beta"], beta_minus=m["beta"],
        scale_window=(eps_min, eps_max),
        n_plus=p["n"], n_minus=m["n"],
        flat_plus=p["flat"], flat_minus=m["flat"],
        ambiguous=p["ambiguous"] or m["ambiguous"],
        median_ratio=float(np.median(ratios)) if len(ratios) else 0.0,
        diagnostics=notes,
    )


def classify_point(est: CurvatureEstimate, cone_width: float,
                   angle_tol: float = ANGLE_TOL) -> BoundaryClass:
    """Boundary taxonomy from a curvature estimate and the normal-cone width.

    Corner detection takes precedence over curvature fitting; among
    curvature verdicts, divergence of a one-sided lower curvature decides
    'unilateral_infinite', divergence of an upper envelope alone decides
    'infinite_upper', and the remaining graded cases are 'round' with the
    median eta/xi^2 as the curvature value. Raises AmbiguousClassification
    when the scaling fits disagree across half-windows.
    """
    if cone_width > angle_tol:
        return BoundaryClass.corner(cone_width)
    if est.flat_plus and est.flat_minus:
        return BoundaryClass.flat_interior()
    if est.ambiguous:
        raise AmbiguousClassification(
            "curvature exponent fits disagree across scale windows",
            diagnostics=est.diagnostics)
    left_inf = math.isinf(est.gamma_l_minus) and not est.flat_minus
    right_inf = math.isinf(est.gamma_l_plus) and not est.flat_plus
    if left_inf or right_inf:
        side = "both" if (left_inf and right_inf) else ("left" if left_inf else "right")
        return BoundaryClass.unilateral(side)
    if math.isinf(est.gamma_u_plus) or math.isinf(est.gamma_u_minus):
        return BoundaryClass.infinite_upper()
    return BoundaryClass.round_point(est.median_ratio)


def inscribed_disk_radius(lam: complex, hull, tol_geom: float | None = None) -> float:
    """Largest radius of a disk tangent at lam lying inside the sampled hull.

    hull is a closed convex polyline (complex array, counterclockwise).
    The disk center moves inward along the local normal at lam; containment
    is tested against the hull samples, so the result is exact for the
    sampled set. Zero signals that no nondegenerate disk fits, the
    equivalent of infinite upper curvature at the point.
    """
    pts = np.asarray(hull, dtype=complex).ravel()
    if len(pts) < 3:
        raise BadParameter("hull needs at least 3 vertices")
    lam = complex(lam)
    diam = float(np.abs(pts[:, None] - pts[None, :]).max()) if len(pts) < 600 else \
        float(2 * np.abs(pts - pts.mean()).max())
    if tol_geom is None:
        tol_geom = TOL_GEOM_REL * max(diam, 1e-300)

    d = np.abs(pts - lam)
    i0 = int(np.argmin(d))
    if d[i0] > 100 * tol_geom:
        # allow lam on an edge interior, not only at a vertex
        if _dist_to_polyline(lam, pts) > 100 * tol_geom:
            raise PointNotOnBoundary(
                f"point {lam} is {d[i0]:.3e} from the sampled boundary")

    nu = _inward_normal(pts, i0)
    w = pts - lam
    proj = (w * np.conj(nu)).real
    # near-duplicates of lam carry only noise; other samples with positive
    # inward projection each bound the tangent-disk radius
    active = (np.abs(w) > 10 * tol_geom) & (proj > 0.0)
    if not np.any(active):
        return diam
    bounds = np.abs(w[active]) ** 2 / (2 * proj[active])
    return float(min(bounds.min(), diam))


def _dist_to_polyline(z: complex, pts: np.ndarray) -> float:
    a = pts
    b = np.roll(pts, -1)
    ab = b - a
    denom = np.abs(ab) ** 2
    t = np.clip(((z - a) * np.conj(ab)).real / np.where(denom == 0, 1, denom), 0, 1)
    return float(np.abs(z - (a + t * ab)).min())


def _inward_normal(pts: np.ndarray, i0: int) -> complex:
    n = len(pts)
    prev = pts[(i0 - 1) % n]
    cur = pts[i0]
    nxt = pts[(i0 + 1) % n]
    d_in = cur - prev
    d_out = nxt - cur
    # counterclockwise polygon: interior lies to the left of the traversal
    cands = []
    for dd in (d_in, d_out):
        if abs(dd) > 0:
            cands.append(1j * dd / abs(dd))
    if not cands:
        raise BadParameter("degenerate hull at the tangency point")
    nu = sum(cands)
    if abs(nu) == 0:
        nu = cands[0]
    return nu / abs(nu)


def example_curve(kind: str, n_samples: int = 256, scale: float = 1.0,
                  alpha: float | None = None) -> np.ndarray:
    """Sampled convex graphs used as curvature fixtures.

    kind 'power': eta = |xi|^alpha (alpha in (1, 4]); 'mixed': eta =
    (-xi)^{3/2} on the left and xi^2 on the right; 'polygonal_oscillating':
    the integral of a monotone polygonal function pinched between x^2 and
    sqrt(x), alternating contact with both envelopes on rapidly shrinking
    scales so the ratio eta/xi^2 oscillates between divergence and decay.
    Returns an (n, 2) array of (xi, eta), log-spaced toward 0 on both sides.
    """
    if n_samples < 16:
        raise BadParameter("n_samples must be >= 16")
    if scale <= 0:
        raise BadParameter("scale must be positive")
    half = n_samples // 2

    if kind == "power":
        if alpha is None or not (1.0 < alpha <= 4.0):
            raise BadParameter("power curve needs alpha in (1, 4]")
        xi = np.geomspace(scale, scale * 1e-13, half)
        xi = np.concatenate([-xi, xi])
        eta = np.abs(xi) ** alpha
        return np.column_stack([xi, eta])

    if kind == "mixed":
        xr = np.geomspace(scale, scale * 1e-13, half)
        xl = -xr
        return np.vstack([
            np.column_stack([xl, (-xl) ** 1.5]),
            np.column_stack([xr, xr ** 2.0]),
        ])

    if kind == "polygonal_oscillating":
        knots_x, knots_g = _oscillating_polygon(scale)
        xi = np.geomspace(scale * 0.999, knots_x[1] * 0.5, max(half, 64))
        xi = np.unique(np.concatenate([xi, knots_x[1:],
                                       np.sqrt(knots_x[1:-1] * knots_x[2:])]))
        eta = _integral_of_polygon(knots_x, knots_g, xi)
        return np.vstack([
            np.column_stack([-xi[::-1], eta[::-1]]),
            np.column_stack([xi, eta]),
        ])

    raise BadParameter(f"unknown curve kind {kind!r}")


def oscillating_contact_scales(scale: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """Contact abscissae of the oscillating fixture: (sqrt-contacts, square-contacts).

    The closing cap knot at x = scale (where the envelopes meet) is excluded.
    """
    knots_x, knots_g = _oscillating_polygon(scale)
    xs = np.asarray(knots_x[1:-1])
    gs = np.asarray(knots_g[1:-1])
    on_sqrt = np.isclose(gs, np.sqrt(xs / scale) * scale, rtol=1e-9)
    return xs[on_sqrt], xs[~on_sqrt]


def _oscillating_polygon(scale: float):
    """Monotone polygonal g with x^2 <= g <= sqrt(x), alternating contacts.

    Monotonicity of g forces each sqrt-contact to sit below the fourth power
    of the previous square-contact, so the contact scales shrink
    super-geometrically; the recursion stops at float resolution.
    """
    # work in unit scale, rescale at the end; cap the graph at x = 1 where
    # the two envelopes meet, so samples beyond the last contact stay valid
    cs = 0.3
    xs, gs = [1.0, cs], [1.0, math.sqrt(cs)]
    while True:
        d = xs[-1] / 2.0
        xs.append(d)
        gs.append(d * d)
        c_next = d ** 4 / 2.0
        if c_next < 1e-15 or math.sqrt(c_next) >= d * d:
            break
        xs.append(c_next)
        gs.append(math.sqrt(c_next))
    xs.append(0.0)
    gs.append(0.0)
    xs = np.array(xs[::-1]) * scale
    gs = np.array(gs[::-1]) * scale
    return xs, gs


def _integral_of_polygon(kx: np.ndarray, kg: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Exact integral from 0 of the piecewise-linear graph (kx, kg) at x."""
    seg_int = np.concatenate([[0.0], np.cumsum(np.diff(kx) * (kg[:-1] + kg[1:]) / 2)])
    idx = np.clip(np.searchsorted(kx, x, side="right") - 1, 0, len(kx) - 2)
    x0, x1 = kx[idx], kx[idx + 1]
    g0, g1 = kg[idx], kg[idx + 1]
    t = np.where(x1 > x0, (x - x0) / np.where(x1 > x0, x1 - x0, 1.0), 0.0)
    gx = g0 + t * (g1 - g0)
    return seg_int[idx] + (x - x0) * (g0 + gx) / 2.0


def support_curvature(h_samples, theta0: float, rho_tol: float | None = None):
    """Curvature radius and curvature from support-function samples.

    h_samples is a sequence of (theta, h(theta)) on a uniform grid spanning
    at least five points around theta0. The curvature radius is
    h + h'' (central second difference); the returned curvature is
    1/(2 rho), with math.inf when rho <= rho_tol.
    """
    arr = np.asarray(h_samples, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] < 5:
        raise InsufficientSamples("need >= 5 (theta, h) samples")
    theta = arr[:, 0]
    h = arr[:, 1]
    order = np.argsort(theta)
    theta, h = theta[order], h[order]
    dt = np.diff(theta)
    if dt.min() <= 0 or (dt.max() - dt.min()) > 1e-9 * dt.mean():
        raise BadParameter("theta grid must be uniform and increasing")
    i = int(np.argmin(np.abs(theta - theta0)))
    if i == 0 or i == len(theta) - 1:
        raise InsufficientSamples("theta0 must be interior to the sampled grid")
    step = dt.mean()
    h2 = (h[i + 1] - 2 * h[i] + h[i - 1]) / step**2
    rho = float(h[i] + h2)
    if rho_tol is None:
        hmax = float(np.abs(h).max())
        # second-difference truncation floor ~ h * step^2 / 12
        rho_tol = max(RHO_TOL_REL * max(hmax, 1.0), hmax * step**2 / 6.0)
    gamma = math.inf if rho <= rho_tol else 1.0 / (2.0 * rho)
    return rho, gamma
