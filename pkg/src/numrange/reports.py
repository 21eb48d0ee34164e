"""Artifact writers: delimited boundary data and JSON reports.

All writers are deterministic for fixed inputs (no timestamps, fixed key
order, shortest-roundtrip float formatting), so repeated runs with the
same seed produce byte-identical files.
"""

from __future__ import annotations

import json
import math
from pathlib import Path


def _cnum(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _fin(x: float):
    if x is None:
        return None
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    return x


def write_json(obj, path) -> None:
    Path(path).write_text(json.dumps(obj, indent=1) + "\n")


def atlas_csv(atlas, path) -> None:
    """One row per touching point: theta,h,re,im,multiplicity."""
    lines = ["theta,h,re,im,multiplicity"]
    for s in atlas.samples:
        for p in s.points:
            lines.append(f"{s.theta:.17g},{s.h:.17g},{p.real:.17g},"
                         f"{p.imag:.17g},{s.multiplicity}")
    Path(path).write_text("\n".join(lines) + "\n")


def frame_samples_csv(samples, path) -> None:
    """Frame samples as xi,eta rows with 17 significant digits."""
    lines = ["xi,eta"]
    for xi, eta in samples:
        lines.append(f"{xi:.17g},{eta:.17g}")
    Path(path).write_text("\n".join(lines) + "\n")


def atlas_json(atlas, path, seed=None, classified=None) -> None:
    obj = {
        "seed": seed,
        "scale": atlas.scale,
        "refine_tol": atlas.refine_tol,
        "achieved_gap": atlas.achieved_gap,
        "budget_exhausted": bool(atlas.budget_exhausted),
        "n_samples": len(atlas.samples),
        "vertices": [_cnum(z) for z in atlas.vertices],
        "edges": [[_cnum(a), _cnum(b)] for a, b in atlas.edges],
        "corner_candidates": [
            {"point": _cnum(c.point), "cone": [c.cone[0], c.cone[1]]}
            for c in atlas.corner_candidates
        ],
    }
    if classified is not None:
        obj["classification"] = _classified_list(classified)
    write_json(obj, path)


def _classified_list(classified) -> list:
    out = []
    for cp in classified:
        row = {
            "point": _cnum(cp.point),
            "kind": cp.verdict.kind if cp.verdict is not None else "ambiguous",
            "ambiguous": bool(cp.ambiguous),
            "diagnostics": cp.diagnostics,
        }
        if cp.verdict is not None:
            if cp.verdict.gamma is not None:
                row["gamma"] = _fin(cp.verdict.gamma)
            if cp.verdict.side is not None:
                row["side"] = cp.verdict.side
            if cp.verdict.cone_width is not None:
                row["cone_width"] = cp.verdict.cone_width
        if cp.estimate is not None:
            est = cp.estimate
            row["curvature"] = {
                "gamma_u_plus": _fin(est.gamma_u_plus),
                "gamma_l_plus": _fin(est.gamma_l_plus),
                "gamma_u_minus": _fin(est.gamma_u_minus),
                "gamma_l_minus": _fin(est.gamma_l_minus),
                "beta_plus": _fin(est.beta_plus),
                "beta_minus": _fin(est.beta_minus),
                "scale_window": [est.scale_window[0], est.scale_window[1]],
            }
        out.append(row)
    return out


def classes_json(classified, path, seed=None) -> None:
    write_json({"seed": seed, "points": _classified_list(classified)}, path)


def theorems_json(reports, path, seed=None) -> None:
    rows = []
    for r in reports:
        rows.append({
            "theorem_id": r.theorem_id,
            "point": _cnum(r.point) if r.point is not None else None,
            "verdict": r.verdict,
            "margin": _fin(r.margin),
            "diagnostics": r.diagnostics,
            "seed": r.seed if r.seed is not None else seed,
        })
    write_json({"seed": seed, "reports": rows}, path)


def witness_json(report, path, seed=None, decay=None) -> None:
    rows = []
    for r in report.rows:
        rows.append({
            "n": r.n,
            "eps": r.eps,
            "residual": r.residual,
            "c_n": r.c_n,
            "lemma42_lo": r.norm_lo,
            "lemma42_hi": r.norm_hi,
            "lemma43_margin": r.size_margin,
            "lemma44_margin": r.imag_margin,
            "re_pos": r.re_value,
            "mixed_re": r.mixed_re,
        })
    obj = {
        "seed": seed if seed is not None else report.seed,
        "alpha": _cnum(report.alpha),
        "r_scale": report.r_scale,
        "mixed_re_slope": report.mixed_re_slope,
        "rows": rows,
    }
    if decay is not None:
        obj["au_norms"] = [float(x) for x in decay.norms]
        obj["au_decay_exponent"] = decay.exponent
    write_json(obj, path)
