"""Inverse numerical-range solves and probe-sequence inequality replay.

The inverse solver produces a unit vector whose Rayleigh value equals a
prescribed target inside the range. Targets are reduced to two chained
two-dimensional problems: a triangle of sampled boundary points containing
the target is split by a chord, and each chord point is realized inside
the elliptical range of a 2x2 compression, where a Newton iteration on the
two real parameters of a unit vector converges quickly (a coarse grid
seeds it when needed).

On top of that sit the probe sequences u_n with <A u_n, u_n> = eps_n alpha
marching toward a boundary point at 0, and the replay of the norm and
sign inequalities that such sequences must satisfy when the range lies in
the upper half plane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .boundary import (
    BoundaryAtlas,
    SupportEngine,
    compute_boundary,
    degeneracy_check,
    extend_atlas,
)
from .errors import (
    AnchorInfeasible,
    BadParameter,
    DependentVectors,
    NoConvergence,
    NotNormalized,
    OutsideRange,
    ScalingViolated,
)
from .linalg import as_matrix, eig_hermitian, fix_phase, rayleigh

TOL_INV_REL = 1e-10     # inverse-solve residual, x scale


def two_dim_compression(a, v1, v2, return_basis: bool = False):
    """Compression of A to the orthonormalized span of v1, v2.

    The numerical range of the result is an ellipse (possibly degenerate)
    contained in Num(A). Raises DependentVectors when the span is not
    two-dimensional.
    """
    a = as_matrix(a)
    v1 = np.asarray(v1, dtype=complex).ravel()
    v2 = np.asarray(v2, dtype=complex).ravel()
    n1 = np.linalg.norm(v1)
    if n1 == 0:
        raise DependentVectors("first vector is zero")
    q1 = v1 / n1
    w = v2 - np.vdot(q1, v2) * q1
    nw = np.linalg.norm(w)
    if nw <= 1e-12 * max(np.linalg.norm(v2), 1.0):
        raise DependentVectors("vectors are (numerically) linearly dependent")
    q2 = w / nw
    basis = np.column_stack([q1, q2])
    comp = basis.conj().T @ a @ basis
    if return_basis:
        return comp, basis
    return comp


def _u_of(psi: float, phi: float) -> np.ndarray:
    return np.array([math.cos(psi / 2),
                     math.sin(psi / 2) * complex(math.cos(phi), math.sin(phi))])


def _solve_2x2(b: np.ndarray, z: complex, tol: float):
    """Unit vector u in C^2 with <B u, u> = z.

    In the traceless form B = c I + C the Rayleigh value of
    u = (cos(psi/2), e^{i phi} sin(psi/2)) is
    c + gamma cos(psi) + w(phi) sin(psi) with gamma = C[0,0] and
    w(phi) = (C[0,1] e^{i phi} + C[1,0] e^{-i phi}) / 2. For fixed phi
    that is a linear system in (cos psi, sin psi); the unit-circle
    constraint becomes a scalar root-find in phi. Degenerate ellipses
    (diagonal or off-diagonal C) have closed forms.
    """
    c = complex(b[0, 0] + b[1, 1]) / 2
    gam = complex(b[0, 0]) - c
    aa = complex(b[0, 1])
    bb = complex(b[1, 0])
    zeta = complex(z) - c
    size = max(abs(gam), abs(aa), abs(bb), 1e-300)

    best = None

    def consider(psi, phi):
        nonlocal best
        psi = min(max(psi, 0.0), math.pi)
        u = _u_of(psi, phi)
        r = abs(complex(u.conj() @ b @ u) - z)
        if best is None or r < best[1]:
            best = ((psi, phi), r)
        return r

    if abs(zeta) <= 1e-16 * size:
        # target at the ellipse center
        if abs(gam) >= max(abs(aa), abs(bb)):
            consider(math.pi / 2, 0.0 if abs(aa) + abs(bb) == 0
                     else -np.angle(aa + np.conj(bb)) + math.pi / 2)
            for phi in np.linspace(0, 2 * math.pi, 32, endpoint=False):
                if best[1] <= tol:
                    break
                consider(math.pi / 2, phi)
        else:
            consider(math.pi / 2, 0.0)
            for phi in np.linspace(0, 2 * math.pi, 64, endpoint=False):
                if best[1] <= tol:
                    break
                consider(math.pi / 2, phi)
        if best[1] <= tol:
            return _u_of(*best[0]), best[1]

    if abs(aa) <= 1e-14 * size and abs(bb) <= 1e-14 * size:
        # diagonal compression: the range is the segment between the
        # diagonal entries; project onto it
        if abs(gam) > 0:
            x = (zeta * np.conj(gam)).real / abs(gam) ** 2
            x = min(max(x, -1.0), 1.0)
            consider(math.acos(x), 0.0)
        return _u_of(*best[0]), best[1]

    if abs(gam) <= 1e-14 * size:
        # off-diagonal compression: values w(phi) sin(psi) fill the ellipse
        # traced by w; align the phase of w with the target direction
        zh = zeta / abs(zeta) if abs(zeta) > 0 else 1.0
        a1 = aa * np.conj(zh)
        b1 = bb * np.conj(zh)
        den = (a1 - b1).real
        num = (a1 + b1).imag
        for phi0 in (math.atan2(-num, den), math.atan2(-num, den) + math.pi):
            w = (aa * np.exp(1j * phi0) + bb * np.exp(-1j * phi0)) / 2
            proj = (w * np.conj(zh)).real
            if proj <= 0:
                continue
            s = min(abs(zeta) / proj, 1.0)
            psi = math.asin(s)
            consider(psi, phi0)
            consider(math.pi - psi, phi0)
        if best is not None and best[1] <= tol:
            return _u_of(*best[0]), best[1]

    # general case. With w(phi) = w_c cos(phi) + w_s sin(phi) and
    # cross(p, q) = Re(p) Im(q) - Im(p) Re(q), Cramer gives
    # cos(psi) = cross(zeta, w)/cross(gamma, w),
    # sin(psi) = cross(gamma, zeta)/cross(gamma, w),
    # and the unit-circle constraint becomes
    # cross(zeta, w)^2 + cross(gamma, zeta)^2 = cross(gamma, w)^2,
    # a trigonometric polynomial P + Q cos(2 phi) + R sin(2 phi) = 0
    # solved in closed form.
    def cross(p: complex, q: complex) -> float:
        return p.real * q.imag - p.imag * q.real

    w_c = (aa + bb) / 2
    w_s = 1j * (aa - bb) / 2
    av = cross(zeta, w_c)
    bv = cross(zeta, w_s)
    c1 = cross(gam, w_c)
    dv = cross(gam, w_s)
    kv = cross(gam, zeta) ** 2
    pq = (av * av - c1 * c1 + bv * bv - dv * dv) / 2 + kv
    qq = (av * av - c1 * c1 - bv * bv + dv * dv) / 2
    rq = av * bv - c1 * dv
    amp = math.hypot(qq, rq)
    chi = math.atan2(rq, qq)

    def candidates_from(two_phi: float):
        phi = two_phi / 2
        for p in (phi, phi + math.pi):
            w = (aa * np.exp(1j * p) + bb * np.exp(-1j * p)) / 2
            det = cross(gam, w)
            if abs(det) < 1e-300:
                continue
            x1 = cross(zeta, w) / det
            x2 = cross(gam, zeta) / det
            nrm = math.hypot(x1, x2)
            if nrm == 0.0:
                continue
            if x2 < -1e-9:
                continue
            consider(math.atan2(max(x2, 0.0) / nrm, x1 / nrm), p)

    if amp > 0:
        ratio = max(-1.0, min(1.0, -pq / amp))
        delta = math.acos(ratio)
        for two_phi in (chi + delta, chi - delta, chi + delta + 2 * math.pi,
                        chi - delta + 2 * math.pi):
            candidates_from(two_phi)
            if best is not None and best[1] <= tol:
                return _u_of(*best[0]), best[1]

    # last resort: coarse sweep over both parameters, then accept the best
    if best is None or best[1] > tol:
        psis = np.linspace(0, math.pi, 48)
        phis = np.linspace(0, 2 * math.pi, 48, endpoint=False)
        for psi0 in psis:
            for phi0 in phis:
                consider(float(psi0), float(phi0))
    return _u_of(*best[0]), best[1]


def _segment_vector(a, z, endpoints, vectors, tol):
    """Realize z on the segment between two Rayleigh points (2x2 solve)."""
    p0, p1 = endpoints
    if abs(p1 - p0) <= tol:
        return vectors[0]
    try:
        comp, basis = two_dim_compression(a, vectors[0], vectors[1],
                                          return_basis=True)
    except DependentVectors:
        return vectors[0]
    u, res = _solve_2x2(comp, z, tol)
    if res > tol:
        raise NoConvergence(
            f"2x2 solve residual {res:.3e} exceeds {tol:.3e}",
            diagnostics=f"target {z}, segment [{p0}, {p1}]")
    return basis @ u


class _FanPoint:
    """A sampled boundary point with a lazily computed realizing vector."""

    def __init__(self, engine, point, theta, which):
        self.engine = engine
        self.point = complex(point)
        self.theta = theta
        self.which = which          # which vector of the sample realizes it
        self._vec = None

    def vector(self) -> np.ndarray:
        if self._vec is None:
            s, vecs, edge_vecs = self.engine.sample(self.theta,
                                                    want_vectors=True)
            if self.which == "lo":
                v = edge_vecs[0] if edge_vecs is not None else vecs[:, -1]
            elif self.which == "hi":
                v = edge_vecs[1] if edge_vecs is not None else vecs[:, -1]
            else:
                v = vecs[:, -1]
            self._vec = v / np.linalg.norm(v)
        return self._vec


def _fan_points(engine, atlas: BoundaryAtlas) -> list[_FanPoint]:
    out = []
    for s in atlas.samples:
        if s.multiplicity == 1:
            out.append(_FanPoint(engine, s.points[0], s.theta, "top"))
        else:
            out.append(_FanPoint(engine, s.points[0], s.theta, "lo"))
            out.append(_FanPoint(engine, s.points[-1], s.theta, "hi"))
    return out


def _inside_polygon(z: complex, pts: np.ndarray, tol: float) -> bool:
    w = pts - z
    cross = (np.conj(w) * np.roll(w, -1)).imag
    return bool(np.all(cross >= -tol))


def inverse_numrange(a, z: complex, atlas: BoundaryAtlas | None = None,
                     tol_rel: float = TOL_INV_REL) -> np.ndarray:
    """Unit vector v with <A v, v> = z, for z in the numerical range.

    Degenerate ranges (points, segments) are handled directly from the
    Hermitian eigendecomposition; otherwise the target is located inside
    the inner hull of sampled boundary points (refining the atlas toward
    the nearest support direction when z sits within tolerance of the
    boundary) and realized through two chained 2x2 compressions.
    Raises OutsideRange for targets outside the range.
    """
    a = as_matrix(a)
    z = complex(z)
    deg = degeneracy_check(a)
    if deg.kind == "point":
        scale = max(abs(deg.point), 1.0)
        if abs(z - deg.point) > 1e-10 * scale:
            raise OutsideRange(f"{z} is not the range point {deg.point}")
        v = np.zeros(a.shape[0], dtype=complex)
        v[0] = 1.0
        return v
    if deg.kind == "segment":
        return _segment_degenerate_solve(a, z, deg, tol_rel)

    if atlas is None:
        atlas = compute_boundary(a, angle_budget=512, refine_tol=1e-6)
    eng = SupportEngine(a)
    scale = atlas.scale
    tol = tol_rel * scale
    viol = atlas.max_violation(z)
    if viol > 1e-8 * scale:
        raise OutsideRange(
            f"{z} violates a supporting half-plane by {viol:.3e}")

    fan = _fan_points(eng, atlas)
    pts = np.array([fp.point for fp in fan])

    # near-boundary shortcut: a sampled touching point already realizes z
    k = int(np.argmin(np.abs(pts - z)))
    if abs(pts[k] - z) <= tol:
        return fix_phase(fan[k].vector())

    # make sure z is strictly inside the inner hull; refine the atlas
    # toward the support direction where z is most exposed
    for _ in range(40):
        if _inside_polygon(z, pts, 1e-13 * scale * scale):
            break
        th = np.array([s.theta for s in atlas.samples])
        h = np.array([s.h for s in atlas.samples])
        g = (np.exp(-1j * th) * z).real - h
        jmax = int(np.argmax(g))
        t1 = th[jmax]
        t2 = th[(jmax + 1) % len(th)]
        t0 = th[jmax - 1]
        mids = [(t1 + ((t2 - t1) % (2 * math.pi)) / 2) % (2 * math.pi),
                (t0 + ((t1 - t0) % (2 * math.pi)) / 2) % (2 * math.pi)]
        extend_atlas(atlas, [eng.sample(tm) for tm in mids])
        fan = _fan_points(eng, atlas)
        pts = np.array([fp.point for fp in fan])
        k = int(np.argmin(np.abs(pts - z)))
        if abs(pts[k] - z) <= tol:
            return fix_phase(fan[k].vector())
    else:
        raise NoConvergence(
            "atlas refinement did not enclose the target in the inner hull",
            diagnostics=f"target {z}, violation {atlas.max_violation(z):.3e}")

    # anchor at a sampled point far from the target; the ray from it
    # through z crosses exactly one chord of the inner hull. The chord
    # solve between adjacent touching points may sit in a sliver-thin
    # compression ellipse where Newton stalls at sqrt(machine) residuals,
    # so it runs at loose tolerance; the final solve against the far
    # anchor is well conditioned and its Rayleigh lift is exact, so only
    # its residual matters.
    loose_tol = max(tol, 1e-7 * scale)
    n = len(fan)
    ia0 = int(np.argmax(np.abs(pts - z)))
    failures = []
    for ia in (ia0, (ia0 + n // 3) % n, (ia0 + (2 * n) // 3) % n):
        anchor = fan[ia]
        hit = None
        for i in range(n):
            if i == ia or (i + 1) % n == ia:
                continue
            t_hit = _ray_segment(anchor.point, z, pts[i], pts[(i + 1) % n])
            if t_hit is not None:
                hit = (i, (i + 1) % n, t_hit)
                break
        if hit is None:
            failures.append(f"anchor {ia}: no chord crossing")
            continue
        i1, i2, t_hit = hit
        y = pts[i1] + t_hit * (pts[i2] - pts[i1])
        try:
            w = _segment_vector(a, y, (pts[i1], pts[i2]),
                                (fan[i1].vector(), fan[i2].vector()), loose_tol)
            ry = rayleigh(a, w)
            v = _segment_vector(a, z, (anchor.point, ry),
                                (anchor.vector(), w), tol)
        except NoConvergence as exc:
            failures.append(f"anchor {ia}: {exc}")
            continue
        v = v / np.linalg.norm(v)
        res = abs(rayleigh(a, v) - z)
        if res <= tol:
            return fix_phase(v)
        failures.append(f"anchor {ia}: residual {res:.3e}")
    raise NoConvergence(f"inverse solve failed for target {z}",
                        diagnostics="; ".join(failures))


def _ray_segment(p0: complex, z: complex, q1: complex, q2: complex):
    """Parameter t in [0,1] where the ray p0 -> z (beyond z) meets [q1, q2]."""
    d = z - p0
    e = q2 - q1
    denom = (np.conj(d) * e).imag
    if abs(denom) < 1e-300:
        return None
    # solve p0 + s d = q1 + t e  (s >= 1 so the chord lies past the target)
    rhs = q1 - p0
    t = -(np.conj(d) * rhs).imag / denom
    s = (np.conj(rhs) * e).imag / denom
    if t < -1e-12 or t > 1 + 1e-12:
        return None
    if s < 1.0 - 1e-9:
        return None
    return min(max(t, 0.0), 1.0)


def _segment_degenerate_solve(a, z, deg, tol_rel):
    e0, e1 = deg.endpoints
    seg = e1 - e0
    L = abs(seg)
    tol = tol_rel * max(L, 1.0)
    # project z onto the segment
    t = ((z - e0) * np.conj(seg)).real / (L * L)
    off = abs(z - (e0 + t * seg))
    if off > tol or t < -1e-12 or t > 1 + 1e-12:
        raise OutsideRange(f"{z} is not on the segment range [{e0}, {e1}]")
    t = min(max(t, 0.0), 1.0)
    # range = lam + e^{i phase} * spec(H): use the extreme eigenvectors
    lam = complex(np.trace(a)) / a.shape[0]
    b = a - lam * np.eye(a.shape[0])
    hb = (b + b.conj().T) / 2
    sb = (b - b.conj().T) / 2j
    ea = float(np.vdot(sb, sb).real)
    eb = float(np.vdot(hb, hb).real)
    ec = float(np.vdot(sb, hb).real)
    phase = (math.pi - math.atan2(ec, (ea - eb) / 2)) / 2
    hrot = math.cos(phase) * hb + math.sin(phase) * sb
    dec = eig_hermitian(hrot)
    vlo, vhi = dec.vectors[:, 0], dec.vectors[:, -1]
    plo = rayleigh(a, vlo)
    # associate the low eigenvector with the endpoint it produces
    if abs(plo - e0) > abs(plo - e1):
        vlo, vhi = vhi, vlo
    mix = math.sqrt(t)
    v = math.sqrt(1 - t) * vlo + mix * vhi
    v = v / np.linalg.norm(v)
    res = abs(rayleigh(a, v) - z)
    if res > 10 * tol:
        raise NoConvergence(f"segment solve residual {res:.3e}",
                            diagnostics=f"target {z}")
    return fix_phase(v)


# ------------------------------------------------------------- sequences

@dataclass
class WitnessSequence:
    """Unit vectors u_n with <A u_n, u_n> = eps_n * alpha."""

    alpha: complex
    eps: np.ndarray
    vectors: np.ndarray          # row n is u_n
    residuals: np.ndarray
    scale: float


def build_witness_sequence(a_norm, alpha: complex, eps,
                           atlas: BoundaryAtlas | None = None,
                           tol_rel: float = TOL_INV_REL) -> WitnessSequence:
    """Construct u_n with <A u_n, u_n> = eps_n alpha for a normalized A.

    alpha must satisfy 0 < Re < 1, 0 < Im < 1, |alpha| < 1 and lie in the
    range together with the whole ray (0, alpha]; infeasible anchors raise
    AnchorInfeasible.
    """
    a_norm = as_matrix(a_norm)
    alpha = complex(alpha)
    if not (0 < alpha.real < 1 and 0 < alpha.imag < 1 and abs(alpha) < 1):
        raise BadParameter(
            "anchor must satisfy 0 < Re < 1, 0 < Im < 1, |alpha| < 1")
    eps = np.asarray(eps, dtype=float)
    if eps.ndim != 1 or len(eps) < 1 or np.any(eps <= 0) or np.any(eps >= 1):
        raise BadParameter("eps must be a list of values in (0, 1)")
    if atlas is None:
        atlas = compute_boundary(a_norm, angle_budget=512, refine_tol=1e-6)
    scale = atlas.scale
    if abs(atlas.max_violation(0.0)) > 1e-6 * scale:
        raise NotNormalized("0 is not on the boundary of the sampled range")
    if float(atlas.vertices.imag.min()) < -1e-6 * scale:
        raise NotNormalized("range is not contained in the upper half plane")
    if atlas.max_violation(alpha) > 1e-9 * scale:
        raise AnchorInfeasible(
            f"anchor {alpha} lies outside the range "
            f"(violation {atlas.max_violation(alpha):.3e}); the ray (0, alpha] "
            "must stay inside")

    vectors = []
    residuals = []
    for e in eps:
        target = e * alpha
        v = inverse_numrange(a_norm, target, atlas=atlas, tol_rel=tol_rel)
        vectors.append(v)
        residuals.append(abs(rayleigh(a_norm, v) - target))
    return WitnessSequence(alpha=alpha, eps=eps,
                           vectors=np.array(vectors),
                           residuals=np.array(residuals), scale=scale)


@dataclass
class WitnessRow:
    """Inequality margins at one step of the probe sequence.

    Margins are nonnegative exactly when the corresponding statement holds:
    norm_lo/norm_hi for the sandwich 1 -+ sqrt(eps); size_margin for
    |<A w, w>| <= 4 sqrt(eps); imag_margin for Im <A w, w> <= 4 eps;
    mixed_imag_margin for the cross term bound 2 sqrt(eps); re_value is
    Re <A w, w> itself (required positive). mixed_re is the real cross
    term whose decay is the trend of interest.
    """

    n: int
    eps: float
    residual: float
    c_n: int
    norm_lo: float
    norm_hi: float
    size_margin: float
    imag_margin: float
    mixed_imag_margin: float
    re_value: float
    mixed_re: float


@dataclass
class WitnessReport:
    rows: list
    r_scale: float
    mixed_re_slope: float
    alpha: complex
    seed: int | None = None


def replay_inequalities(a_norm, ws: WitnessSequence, v_family,
                        r_rule="standard", seed: int | None = None) -> WitnessReport:
    """Replay the probe-sequence inequalities for a bounded vector family.

    v_family is a list of vectors f_n (a single vector is broadcast across
    n). They are rescaled to v_n = R e^{i theta_n} f_n where theta_n aligns
    the phases of <A f_n, u_n> and <A u_n, f_n> and R follows r_rule:
    "standard" takes Re(alpha) / (2 max(sup||f||, sup||Af||, sup||A*f||)),
    while a number is used verbatim. The rescaled family must satisfy
    max(||v||, ||Av||, ||A*v||) <= 1 and |Re <A v, v>| <= Re(alpha)/2;
    violations raise ScalingViolated naming the failed bound.
    """
    a = as_matrix(a_norm)
    fs = [np.asarray(f, dtype=complex).ravel() for f in v_family]
    if not fs:
        raise BadParameter("empty probe family")
    nsteps = len(ws.eps)
    if len(fs) == 1:
        fs = fs * nsteps
    if len(fs) != nsteps:
        raise BadParameter(
            f"family has {len(fs)} vectors for {nsteps} sequence steps")

    s1 = max(np.linalg.norm(f) for f in fs)
    s2 = max(max(np.linalg.norm(a @ f), np.linalg.norm(a.conj().T @ f))
             for f in fs)
    if r_rule == "standard":
        denom = 2 * max(s1, s2)
        r_scale = ws.alpha.real / denom if denom > 0 else 0.0
    else:
        r_scale = float(r_rule)

    re_alpha = ws.alpha.real
    rows = []
    for n in range(nsteps):
        u = ws.vectors[n]
        f = fs[n]
        afu = complex(np.vdot(u, a @ f))        # <A f, u>
        auf = complex(np.vdot(f, a @ u))        # <A u, f>
        theta = 0.0
        if abs(afu) > 0 and abs(auf) > 0:
            theta = (np.angle(auf) - np.angle(afu)) / 2
        v = r_scale * np.exp(1j * theta) * f

        slack = 1e-12 * max(1.0, ws.scale)
        bounds = {
            "norm(v)": np.linalg.norm(v),
            "norm(Av)": np.linalg.norm(a @ v),
            "norm(A*v)": np.linalg.norm(a.conj().T @ v),
        }
        for name, val in bounds.items():
            if val > 1.0 + slack:
                raise ScalingViolated(
                    f"{name} = {val:.6f} exceeds 1", bound=name)
        re_avv = complex(np.vdot(v, a @ v)).real
        if abs(re_avv) > re_alpha / 2 + slack:
            raise ScalingViolated(
                f"|Re <A v, v>| = {abs(re_avv):.6f} exceeds Re(alpha)/2",
                bound="re_quadratic")

        eps_n = float(ws.eps[n])
        rt = math.sqrt(eps_n)
        mixed = complex(np.vdot(u, a @ v)) + complex(np.vdot(v, a @ u))
        c_n = 1 if mixed.real >= 0 else -1
        w = u + rt * c_n * v
        aww = complex(np.vdot(w, a @ w))
        rows.append(WitnessRow(
            n=n + 1,
            eps=eps_n,
            residual=float(ws.residuals[n]),
            c_n=c_n,
            norm_lo=float(np.linalg.norm(w) - (1 - rt)),
            norm_hi=float((1 + rt) - np.linalg.norm(w)),
            size_margin=float(4 * rt - abs(aww)),
            imag_margin=float(4 * eps_n - aww.imag),
            mixed_imag_margin=float(2 * rt - abs(mixed.imag)),
            re_value=float(aww.real),
            mixed_re=float(mixed.real),
        ))

    rts = np.sqrt(ws.eps)
    mixed_abs = np.array([abs(r.mixed_re) for r in rows])
    slope = 0.0
    if len(rows) >= 2:
        x = rts - rts.mean()
        den = float(np.dot(x, x))
        if den > 0:
            slope = float(np.dot(x, mixed_abs - mixed_abs.mean()) / den)
    return WitnessReport(rows=rows, r_scale=r_scale, mixed_re_slope=slope,
                         alpha=ws.alpha, seed=seed)


@dataclass
class DecayProbe:
    """Observed ||A u_n|| decay; reported without any verdict."""

    norms: np.ndarray
    exponent: float


def au_n_decay_probe(a_norm, ws: WitnessSequence) -> DecayProbe:
    """Report ||A u_n|| along the sequence and its log-log decay exponent."""
    a = as_matrix(a_norm)
    norms = np.array([np.linalg.norm(a @ u) for u in ws.vectors])
    pos = norms > 0
    exponent = 0.0
    if pos.sum() >= 2:
        x = np.log(ws.eps[pos])
        y = np.log(norms[pos])
        x = x - x.mean()
        den = float(np.dot(x, x))
        if den > 0:
            exponent = float(np.dot(x, y - y.mean()) / den)
    return DecayProbe(norms=norms, exponent=exponent)
