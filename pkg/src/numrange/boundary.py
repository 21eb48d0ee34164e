"""Numerical range boundary computation and classification.

The boundary of the numerical range of a matrix A is reconstructed from its
support function: for each direction angle theta the largest eigenvalue of
the rotated Hermitian part gives the supporting line, and the Rayleigh
value of the top eigenvector gives the touching point. Adaptive bisection
of the angles squeezes the gap between the inner hull of touching points
and the outer envelope of supporting lines below a tolerance. Flat edges
are recognized through top-eigenvalue multiplicity, corners through
stationarity of the touching point across an angular interval.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadParameter,
    DegenerateRange,
    InsufficientSamples,
    AmbiguousClassification,
    PointNotOnBoundary,
    ZeroScale,
)
from .geometry import (
    ANGLE_TOL,
    EPS_MAX_REL,
    EPS_MIN_REL,
    BoundaryClass,
    CurvatureEstimate,
    canonical_frame,
    classify_point,
    curvature_estimates,
)
from .linalg import (
    as_matrix,
    eig_hermitian,
    rotated_hermitian_part,
    skew_part_rotated,
    top_eigenpairs,
    tridiag_apply,
    tridiag_profile,
)

GAP_TOL_REL = 1e-8        # top-eigenvalue cluster width for multiplicity, x ||A||_F
CORNER_STAT_REL = 1e-9    # touching-point stationarity for corner candidates, x scale
SUP_TOL_REL = 1e-9        # supporting-halfplane membership tolerance, x scale
DEFAULT_ANGLE_BUDGET = 4096
DEFAULT_REFINE_TOL = 1e-6
INITIAL_ANGLES = 64
DEGEN_TOL_REL = 1e-10     # degeneracy screen, x ||A||_F


@dataclass
class SupportSample:
    """One support-function evaluation.

    points holds the touching points ordered by tangential coordinate; for
    multiplicity m > 1 it contains m Rayleigh values of an orthonormal top
    eigenbasis plus the two extreme points of the flat edge, so points[0]
    and points[-1] are the edge endpoints.
    """

    theta: float
    h: float
    points: np.ndarray
    multiplicity: int


@dataclass(frozen=True)
class CornerCandidate:
    point: complex
    cone: tuple[float, float]

    @property
    def width(self) -> float:
        return self.cone[1] - self.cone[0]


@dataclass(frozen=True)
class Degeneracy:
    """Shape class of Num(A): a point, a segment, or full-dimensional."""

    kind: str                      # 'point' | 'segment' | 'full'
    point: complex | None = None
    endpoints: tuple[complex, complex] | None = None


@dataclass
class BoundaryAtlas:
    samples: list           # SupportSample, sorted by theta in [0, 2pi)
    vertices: np.ndarray    # counterclockwise boundary polyline (complex)
    edges: list             # (endpoint_a, endpoint_b) pairs
    corner_candidates: list  # CornerCandidate
    scale: float
    achieved_gap: float
    budget_exhausted: bool
    refine_tol: float

    def interior_point(self) -> complex:
        return complex(self.vertices.mean())

    def max_violation(self, z: complex) -> float:
        """max_theta Re(e^{-i theta} z) - h(theta); <= 0 inside, ~0 on boundary."""
        th = np.array([s.theta for s in self.samples])
        h = np.array([s.h for s in self.samples])
        return float(((np.exp(-1j * th) * complex(z)).real - h).max())

    def contains(self, z: complex, tol: float | None = None) -> bool:
        if tol is None:
            tol = SUP_TOL_REL * self.scale
        return self.max_violation(z) <= tol


def degeneracy_check(a) -> Degeneracy:
    """Classify Num(A) as a point, a segment, or a set with interior.

    A segment occurs exactly when some rotation of the centered matrix is
    Hermitian; the optimal rotation angle is found in closed form from the
    Frobenius inner products of the Hermitian and skew parts.
    """
    a = as_matrix(a)
    n = a.shape[0]
    lam = complex(np.trace(a)) / n
    anorm = float(np.linalg.norm(a))
    tol = DEGEN_TOL_REL * max(anorm, 1.0)
    b = a - lam * np.eye(n)
    if np.linalg.norm(b) <= tol:
        return Degeneracy(kind="point", point=lam)
    hb = (b + b.conj().T) / 2
    sb = (b - b.conj().T) / 2j
    ea = float(np.vdot(sb, sb).real)
    eb = float(np.vdot(hb, hb).real)
    ec = float(np.vdot(sb, hb).real)
    # ||cos t * S - sin t * H||_F^2 = (ea+eb)/2 + R cos(2t + phi); minimize.
    phi = math.atan2(ec, (ea - eb) / 2)
    tstar = (math.pi - phi) / 2
    smin = math.cos(tstar) * sb - math.sin(tstar) * hb
    if np.linalg.norm(smin) <= tol:
        hrot = math.cos(tstar) * hb + math.sin(tstar) * sb
        w = eig_hermitian(hrot).values
        e0 = lam + np.exp(1j * tstar) * w[0]
        e1 = lam + np.exp(1j * tstar) * w[-1]
        return Degeneracy(kind="segment", endpoints=(complex(e0), complex(e1)))
    return Degeneracy(kind="full", point=None)


_FAST_MIN_DIM = 64


class SupportEngine:
    """Support-function evaluations against one matrix.

    Validates and fingerprints the matrix once. Tridiagonal matrices with
    real off-diagonals (discretized 1-D operators) get an O(n) fast path:
    their rotated Hermitian and skew parts are real symmetric tridiagonal,
    handled by the dedicated LAPACK solver without dense intermediates.
    """

    def __init__(self, a):
        self.a = as_matrix(a)
        self.n = self.a.shape[0]
        self.profile = (tridiag_profile(self.a)
                        if self.n >= _FAST_MIN_DIM else None)
        if self.profile is not None:
            d, e = self.profile
            self.anorm = math.sqrt(float(np.sum(np.abs(d) ** 2)
                                         + 2 * np.sum(e ** 2)))
        else:
            self.anorm = float(np.linalg.norm(self.a))

    def apply(self, v: np.ndarray) -> np.ndarray:
        if self.profile is not None:
            d, e = self.profile
            return tridiag_apply(d, e, v)
        return self.a @ v

    def rayleigh(self, v: np.ndarray) -> complex:
        return complex(np.vdot(v, self.apply(v)) / np.vdot(v, v).real)

    def top_eigen(self, theta: float, k: int):
        if self.profile is not None:
            import scipy.linalg
            d, e = self.profile
            hd = (np.exp(-1j * theta) * d).real
            he = math.cos(theta) * e
            w, v = scipy.linalg.eigh_tridiagonal(
                hd, he, select="i", select_range=(self.n - k, self.n - 1))
            return w, v.astype(complex)
        h = rotated_hermitian_part(self.a, theta)
        return top_eigenpairs(h, k)

    def support_value(self, theta: float) -> float:
        w, _ = self.top_eigen(theta, 1)
        return float(w[-1])

    def skew_compression(self, theta: float, vecs: np.ndarray) -> np.ndarray:
        if self.profile is not None:
            d, e = self.profile
            sd = (np.exp(-1j * theta) * d).imag
            se = -math.sin(theta) * e
            sv = np.column_stack([tridiag_apply(sd, se, vecs[:, j])
                                  for j in range(vecs.shape[1])])
        else:
            sv = skew_part_rotated(self.a, theta) @ vecs
        comp = vecs.conj().T @ sv
        return (comp + comp.conj().T) / 2

    def sample(self, theta: float, gap_tol: float | None = None,
               want_vectors: bool = False):
        theta = float(theta) % (2 * math.pi)
        if gap_tol is None:
            gap_tol = GAP_TOL_REL * max(self.anorm, 1e-300)
        k = min(8, self.n)
        while True:
            w, v = self.top_eigen(theta, k)
            top = w[-1]
            m = int(np.sum(w >= top - gap_tol))
            if m < k or k == self.n:
                break
            k = min(2 * k, self.n)
        h = float(top)
        vecs = v[:, -m:]
        points = [self.rayleigh(vecs[:, j]) for j in range(m)]
        edge_vecs = None
        if m > 1:
            comp = self.skew_compression(theta, vecs)
            cw, cv = np.linalg.eigh(comp)
            lo = vecs @ cv[:, 0]
            hi = vecs @ cv[:, -1]
            points.extend([self.rayleigh(lo), self.rayleigh(hi)])
            edge_vecs = (lo, hi)
        pts = np.array(points, dtype=complex)
        tang = (np.exp(-1j * theta) * pts).imag
        order = np.argsort(tang)
        out = SupportSample(theta=theta, h=h, points=pts[order],
                            multiplicity=m)
        if want_vectors:
            return out, vecs, edge_vecs
        return out


def support_sample(a, theta: float, gap_tol: float | None = None,
                   want_vectors: bool = False, engine: SupportEngine | None = None):
    """Support value, touching point(s), and multiplicity in direction theta."""
    if engine is None:
        engine = SupportEngine(a)
    return engine.sample(theta, gap_tol=gap_tol, want_vectors=want_vectors)


def _wedge_gap(s1: SupportSample, s2: SupportSample, scale: float) -> float:
    """Inner-hull/outer-envelope gap on the wedge between adjacent samples."""
    dth = (s2.theta - s1.theta) % (2 * math.pi)
    if dth <= 0 or dth >= math.pi:
        return scale
    sd = math.sin(dth)
    if sd < 1e-14:
        return 0.0
    t = (s2.h - s1.h * math.cos(dth)) / sd
    outer = np.exp(1j * s1.theta) * (s1.h + 1j * t)
    p1 = s1.points[-1]
    p2 = s2.points[0]
    return _point_segment_dist(outer, p1, p2)


def _point_segment_dist(z: complex, a: complex, b: complex) -> float:
    ab = b - a
    d2 = abs(ab) ** 2
    if d2 == 0.0:
        return abs(z - a)
    t = ((z - a) * np.conj(ab)).real / d2
    t = min(1.0, max(0.0, t))
    return abs(z - (a + t * ab))


def compute_boundary(a, angle_budget: int = DEFAULT_ANGLE_BUDGET,
                     refine_tol: float = DEFAULT_REFINE_TOL,
                     initial_angles: int = INITIAL_ANGLES,
                     angle_tol: float = ANGLE_TOL) -> BoundaryAtlas:
    """Adaptively sampled boundary atlas of Num(A).

    Requires a full-dimensional numerical range (raises DegenerateRange
    otherwise). Refinement bisects the angular wedge with the largest
    inner/outer gap until the gap drops below refine_tol * scale or the
    budget of support evaluations runs out; in the latter case the partial
    atlas is returned with budget_exhausted set and the achieved gap
    recorded.
    """
    a = as_matrix(a)
    if angle_budget < 16:
        raise BadParameter("angle_budget must be >= 16")
    deg = degeneracy_check(a)
    if deg.kind != "full":
        raise DegenerateRange(f"numerical range is degenerate ({deg.kind})", deg)

    eng = SupportEngine(a)
    cardinal = [eng.sample(t) for t in
                (0.0, math.pi / 2, math.pi, 3 * math.pi / 2)]
    wx = cardinal[0].h + cardinal[2].h
    wy = cardinal[1].h + cardinal[3].h
    scale = math.hypot(wx, wy)
    used = 4

    n0 = max(16, min(initial_angles, angle_budget // 2))
    thetas = [2 * math.pi * k / n0 for k in range(n0)]
    samples = {s.theta: s for s in cardinal}
    for t in thetas:
        if t not in samples:
            samples[t] = eng.sample(t)
            used += 1

    ordered = sorted(samples.values(), key=lambda s: s.theta)
    heap = []
    for i, s1 in enumerate(ordered):
        s2 = ordered[(i + 1) % len(ordered)]
        gap = _wedge_gap(s1, s2, scale)
        heapq.heappush(heap, (-gap, s1.theta, s2.theta))

    target = refine_tol * scale
    by_theta = dict(samples)
    while heap and used < angle_budget:
        neg_gap, t1, t2 = heapq.heappop(heap)
        if -neg_gap <= target:
            heapq.heappush(heap, (neg_gap, t1, t2))
            break
        dth = (t2 - t1) % (2 * math.pi)
        tm = (t1 + dth / 2) % (2 * math.pi)
        if tm in by_theta or dth < 1e-12:
            continue
        sm = eng.sample(tm)
        by_theta[tm] = sm
        used += 1
        s1, s2 = by_theta[t1], by_theta[t2]
        heapq.heappush(heap, (-_wedge_gap(s1, sm, scale), t1, tm))
        heapq.heappush(heap, (-_wedge_gap(sm, s2, scale), tm, t2))

    achieved = -heap[0][0] if heap else 0.0
    sample_list = sorted(by_theta.values(), key=lambda s: s.theta)
    atlas = BoundaryAtlas(
        samples=sample_list,
        vertices=np.array([]),
        edges=[],
        corner_candidates=[],
        scale=scale,
        achieved_gap=max(achieved, 0.0),
        budget_exhausted=achieved > target,
        refine_tol=refine_tol,
    )
    _assemble(atlas, angle_tol)
    return atlas


def _assemble(atlas: BoundaryAtlas, angle_tol: float = ANGLE_TOL) -> None:
    """Rebuild vertices, edges and corner candidates from the sample list."""
    scale = atlas.scale
    dedupe = 1e-13 * scale
    verts: list[complex] = []
    for s in atlas.samples:
        for p in s.points:
            if not verts or abs(p - verts[-1]) > dedupe:
                verts.append(complex(p))
    if len(verts) > 1 and abs(verts[0] - verts[-1]) <= dedupe:
        verts.pop()
    atlas.vertices = np.array(verts, dtype=complex)

    # flat edges from multiplicity; dedupe on a quantized-endpoint key
    edges: list[tuple[complex, complex]] = []
    seen: set = set()
    quant = 1e-8 * scale if scale > 0 else 1.0
    for s in atlas.samples:
        if s.multiplicity > 1:
            e0, e1 = complex(s.points[0]), complex(s.points[-1])
            if abs(e0 - e1) <= 1e-9 * scale:
                continue
            key = (round(e0.real / quant), round(e0.imag / quant),
                   round(e1.real / quant), round(e1.imag / quant))
            if key not in seen:
                seen.add(key)
                edges.append((e0, e1))
    atlas.edges = edges

    # corner candidates: runs of stationary touching points while theta advances
    stat = CORNER_STAT_REL * scale
    singles = [s for s in atlas.samples if s.multiplicity == 1]
    cands: list[CornerCandidate] = []
    if len(singles) >= 2:
        n = len(singles)
        # find a starting index where a run boundary certainly occurs
        start = 0
        for i in range(n):
            j = (i - 1) % n
            if abs(singles[i].points[0] - singles[j].points[0]) > stat:
                start = i
                break
        run: list[SupportSample] = []
        for k in range(n + 1):
            s = singles[(start + k) % n]
            if run and (abs(s.points[0] - run[0].points[0]) > stat or k == n):
                if len(run) >= 2:
                    th0 = run[0].theta
                    span = (run[-1].theta - th0) % (2 * math.pi)
                    if span > angle_tol:
                        pt = complex(np.mean([r.points[0] for r in run]))
                        cands.append(CornerCandidate(point=pt,
                                                     cone=(th0, th0 + span)))
                run = []
            if k < n:
                run.append(s)
    atlas.corner_candidates = cands


def extend_atlas(atlas: BoundaryAtlas, new_samples,
                 angle_tol: float = ANGLE_TOL) -> None:
    """Insert extra support samples and rebuild the derived structures."""
    have = {s.theta for s in atlas.samples}
    added = False
    for s in new_samples:
        if s.theta not in have:
            atlas.samples.append(s)
            have.add(s.theta)
            added = True
    if added:
        atlas.samples.sort(key=lambda s: s.theta)
        _assemble(atlas, angle_tol)


def affine_transform(a, alpha: complex, beta: complex) -> np.ndarray:
    """alpha * A + beta * I; the numerical range transforms the same way."""
    a = as_matrix(a)
    if alpha == 0:
        raise ZeroScale("affine scale must be nonzero")
    return alpha * a + beta * np.eye(a.shape[0])


class _SupportCache:
    """Memoized h(theta) evaluations against a support engine."""

    def __init__(self, engine: SupportEngine):
        self.engine = engine
        self.cache: dict[float, float] = {}

    def __call__(self, theta: float) -> float:
        t = float(theta) % (2 * math.pi)
        if t not in self.cache:
            self.cache[t] = self.engine.support_value(t)
        return self.cache[t]


def normal_cone_at(a, lam: complex, atlas: BoundaryAtlas,
                   point_tol_rel: float = CORNER_STAT_REL,
                   boundary_tol_rel: float = 1e-6,
                   engine: SupportEngine | None = None,
                   with_quality: bool = False):
    """Normal cone (theta_lo, theta_hi) of the boundary point lam.

    Works on the support gap g(theta) = Re(e^{-i theta} lam) - h(theta),
    which is <= 0 everywhere and vanishes exactly on the normal directions
    of lam. The maximizer is polished by golden-section search and the
    plateau {g >= -tol} is bracketed by bisection; its width is the cone
    width (zero for smooth points, the sector width at corners).

    A genuine corner has a tolerance-independent plateau; on a smooth arc
    of curvature radius rho the plateau width reflects only the tolerance
    (~ sqrt(tol/rho)) and shrinks when the tolerance tightens. The cone is
    therefore measured twice, at point_tol and 64x finer; the fine
    measurement is returned, and with_quality=True also returns the
    fine/coarse width ratio (near 1 for true corners, near 1/8 for
    tolerance-limited sharp arcs).

    Raises PointNotOnBoundary when max g is significantly nonzero.
    """
    if engine is None:
        engine = SupportEngine(a)
    lam = complex(lam)
    scale = atlas.scale
    sup = _SupportCache(engine)
    for s in atlas.samples:
        sup.cache[s.theta] = s.h

    def g(theta: float) -> float:
        return (np.exp(-1j * theta) * lam).real - sup(theta)

    thetas = sorted(sup.cache)
    vals = [(np.exp(-1j * t) * lam).real - sup.cache[t] for t in thetas]
    i0 = int(np.argmax(vals))
    n = len(thetas)
    lo = thetas[(i0 - 1) % n]
    hi = thetas[(i0 + 1) % n]
    if (hi - lo) % (2 * math.pi) <= 0:
        hi = lo + 2 * math.pi / n
    lo, hi = _enclose(lo, hi)

    tstar, gstar = _golden_max(g, lo, hi)
    btol = boundary_tol_rel * scale
    if gstar < -btol or gstar > btol:
        raise PointNotOnBoundary(
            f"support gap at best normal is {gstar:.3e} "
            f"(tolerance {btol:.3e}); point {lam} is not on the boundary")

    def plateau(tol_rel: float):
        thresh = gstar - max(tol_rel * scale, 1e-15 * scale)
        return (_plateau_edge(g, tstar, -1.0, thresh),
                _plateau_edge(g, tstar, +1.0, thresh))

    coarse = plateau(point_tol_rel)
    fine = plateau(max(point_tol_rel / 64.0, 5e-13))
    w_coarse = coarse[1] - coarse[0]
    w_fine = fine[1] - fine[0]
    shrink = w_fine / w_coarse if w_coarse > 0 else 1.0
    if with_quality:
        return fine, shrink
    return fine


def _enclose(lo: float, hi: float) -> tuple[float, float]:
    while hi <= lo:
        hi += 2 * math.pi
    return lo, hi


def _golden_max(f, lo: float, hi: float, iters: int = 80):
    invphi = (math.sqrt(5.0) - 1) / 2
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if b - a < 1e-14:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    if fc >= fd:
        return c, fc
    return d, fd


def _plateau_edge(g, tstar: float, direction: float, thresh: float) -> float:
    """Outermost angle (going one way from tstar) where g stays >= thresh."""
    # the search point may sit at one end of the plateau, and a normal cone
    # of a body with interior is narrower than pi, so cap the sweep just
    # below a half-turn
    span = math.pi * 0.999
    step = 1e-6
    inside = tstar
    while step < span:
        t = tstar + direction * step
        if g(t) < thresh:
            break
        inside = t
        step *= 2.0
    else:
        return tstar + direction * span
    outside = tstar + direction * step
    for _ in range(60):
        mid = 0.5 * (inside + outside)
        if g(mid) >= thresh:
            inside = mid
        else:
            outside = mid
        if abs(outside - inside) < 1e-13:
            break
    return inside


@dataclass
class ClassifiedPoint:
    point: complex
    verdict: BoundaryClass | None
    ambiguous: bool = False
    estimate: CurvatureEstimate | None = None
    cone: tuple[float, float] | None = None
    cone_shrink: float | None = None   # fine/coarse plateau ratio; ~1 = stable
    diagnostics: str = ""

    @property
    def scale_limited(self) -> bool:
        """True when the cone measurement was tolerance-limited."""
        return self.cone_shrink is not None and self.cone_shrink < 0.5


def classify_boundary(a, atlas: BoundaryAtlas, targets=None,
                      n_spread: int = 16, window=None,
                      angle_tol: float = ANGLE_TOL,
                      refine_levels: int = 30) -> list[ClassifiedPoint]:
    """Classify boundary points of Num(A).

    Default targets are the corner candidates, the flat-edge endpoints, and
    a spread of touching points across the sampled boundary. Near each
    non-corner target the atlas is refined locally (support samples at
    geometrically shrinking angular offsets) so the curvature window has
    enough resolution; refined samples are folded back into the atlas.
    """
    eng = SupportEngine(a)
    scale = atlas.scale
    if targets is None:
        targets = [c.point for c in atlas.corner_candidates]
        for e in atlas.edges:
            targets.extend(e)
        sam = atlas.samples
        stride = max(1, len(sam) // max(n_spread, 1))
        targets.extend(complex(s.points[0]) for s in sam[::stride])
        targets = _dedupe_points(targets, 1e-9 * scale)

    if window is None:
        window = (EPS_MIN_REL * scale, EPS_MAX_REL * scale)
    interior = atlas.interior_point()

    results: list[ClassifiedPoint] = []
    for z in targets:
        z = complex(z)
        if _edge_interior(z, atlas.edges, scale):
            results.append(ClassifiedPoint(
                point=z, verdict=BoundaryClass.flat_interior()))
            continue
        cone, shrink = normal_cone_at(a, z, atlas, engine=eng,
                                      with_quality=True)
        width = cone[1] - cone[0]
        if width > angle_tol and shrink >= 0.5:
            # wide AND tolerance-stable: a genuine corner
            results.append(ClassifiedPoint(
                point=z, verdict=BoundaryClass.corner(width), cone=cone,
                cone_shrink=shrink))
            continue
        tstar = 0.5 * (cone[0] + cone[1])
        frame = canonical_frame(z, cone, interior_point=interior)
        new_samples = []
        span = math.pi / 3
        offs = span * 2.0 ** -np.arange(refine_levels, dtype=float)
        for d in offs:
            for sgn in (+1.0, -1.0):
                new_samples.append(eng.sample(tstar + sgn * d))
        extend_atlas(atlas, new_samples, angle_tol)
        pts = atlas.vertices
        fs = frame.to_frame(pts)
        try:
            est = curvature_estimates(frame, fs, window=window,
                                      eta_floor=1e-11 * scale)
            verdict = classify_point(est, 0.0, angle_tol=angle_tol)
            results.append(ClassifiedPoint(point=z, verdict=verdict,
                                           estimate=est, cone=cone,
                                           cone_shrink=shrink))
        except AmbiguousClassification as exc:
            results.append(ClassifiedPoint(
                point=z, verdict=None, ambiguous=True, cone=cone,
                cone_shrink=shrink,
                diagnostics=str(exc) + "; " + exc.diagnostics))
        except InsufficientSamples as exc:
            # a flat edge off the sampled normal grid: all nearby support
            # samples collapse onto the two edge endpoints
            clusters = _dedupe_points(
                [p for s in new_samples for p in s.points], 1e-8 * scale)
            if len(clusters) == 2 and _edge_interior(
                    z, [(clusters[0], clusters[1])], scale):
                results.append(ClassifiedPoint(
                    point=z, verdict=BoundaryClass.flat_interior(), cone=cone,
                    cone_shrink=shrink))
            else:
                results.append(ClassifiedPoint(
                    point=z, verdict=None, ambiguous=True, cone=cone,
                    cone_shrink=shrink,
                    diagnostics=f"insufficient samples ({exc.side}): {exc}"))
    return results


def _edge_interior(z: complex, edges, scale: float) -> bool:
    for e0, e1 in edges:
        if min(abs(z - e0), abs(z - e1)) <= 1e-6 * scale:
            continue
        if _point_segment_dist(z, e0, e1) <= 1e-8 * scale:
            return True
    return False


def _dedupe_points(points, tol: float) -> list[complex]:
    out: list[complex] = []
    for p in points:
        p = complex(p)
        if all(abs(p - q) > tol for q in out):
            out.append(p)
    return out
