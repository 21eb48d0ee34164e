"""Command-line front end.

Subcommands: range, classify, verify, witness, probe, gallery. Operators
come from a JSON matrix file (--matrix), a gallery spec (--gallery), or a
config file (--config, flat JSON; explicit flags win over config values).
Artifacts are written into --out: atlas.csv, atlas.json, classes.json,
theorems.json, witness.json, plot.svg; every artifact records the seed.
Exit status: 0 when no checker failed, 1 when some checker reported fail,
2 for configuration errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import boundary as bnd
from . import gallery as gal
from . import plots, reports
from . import spectral as spc
from . import witness as wit
from .errors import NumRangeError
from .linalg import eig_general
from .matio import load_matrix


def _parse_complex_pair(txt: str) -> complex:
    parts = txt.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected RE,IM")
    return complex(float(parts[0]), float(parts[1]))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="numrange",
        description="numerical ranges of complex matrices: boundaries, "
                    "curvature classification, spectral checks")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, needs_operator=True):
        if needs_operator:
            sp.add_argument("--matrix", help="path to a matrix JSON file")
            sp.add_argument("--gallery", help="gallery spec, e.g. jordan:4")
        sp.add_argument("--config", help="JSON config file (flags win)")
        sp.add_argument("--out", help="output directory (default: .)")
        sp.add_argument("--seed", type=int, help="seed recorded in artifacts")
        sp.add_argument("--refine-tol", type=float, dest="refine_tol",
                        help="relative boundary resolution (default 1e-6)")
        sp.add_argument("--angle-budget", type=int, dest="angle_budget",
                        help="support evaluation budget (default 4096)")

    sp = sub.add_parser("range", help="compute the boundary atlas")
    add_common(sp)

    sp = sub.add_parser("classify", help="atlas plus boundary classification")
    add_common(sp)
    sp.add_argument("--targets", help="semicolon-separated RE,IM boundary points")

    sp = sub.add_parser("verify", help="classification plus spectral checks")
    add_common(sp)
    sp.add_argument("--thm-tol", type=float, dest="thm_tol",
                    help="absolute pass tolerance for checkers")

    sp = sub.add_parser("witness", help="probe sequences toward a boundary point")
    add_common(sp)
    sp.add_argument("--alpha", type=_parse_complex_pair,
                    help="interior anchor RE,IM (default 0.2,0.4)")
    sp.add_argument("--depth", type=int, help="number of eps levels (default 20)")
    sp.add_argument("--at", type=_parse_complex_pair,
                    help="boundary point to normalize at (default: detected)")

    sp = sub.add_parser("probe", help="discretization sweeps toward a target")
    add_common(sp)
    sp.add_argument("--sweep", help="comma-separated interior sizes, e.g. 200,400,800")
    sp.add_argument("--boxes", help="comma-separated box half-widths matching --sweep")
    sp.add_argument("--target", type=_parse_complex_pair,
                    help="target point RE,IM (default 0,0)")
    sp.add_argument("--disk-radius", type=float, dest="disk_radius",
                    help="eigenvalue-count disk radius")

    sp = sub.add_parser("gallery", help="list gallery operators or export "
                                        "curvature fixture curves")
    sp.add_argument("--curve", help="fixture curve to export as xi,eta CSV: "
                                    "power:ALPHA, mixed, or "
                                    "polygonal_oscillating")
    sp.add_argument("--samples", type=int, default=400,
                    help="number of curve samples (default 400)")
    sp.add_argument("--scale", type=float, default=1.0,
                    help="curve scale (default 1.0)")
    sp.add_argument("--out", help="output directory (default: .)")

    return p


_DEFAULTS = {
    "seed": 0,
    "out": ".",
    "refine_tol": bnd.DEFAULT_REFINE_TOL,
    "angle_budget": bnd.DEFAULT_ANGLE_BUDGET,
    "alpha": 0.2 + 0.4j,
    "depth": 20,
    "target": 0.0 + 0.0j,
}


def _merge_config(args) -> dict:
    cfg = {}
    if getattr(args, "config", None):
        with open(args.config) as fh:
            cfg = json.load(fh)
        if not isinstance(cfg, dict):
            raise NumRangeError("config file must hold a JSON object")
    merged = dict(cfg)
    for key, val in vars(args).items():
        if key in ("command", "config"):
            continue
        if val is not None:
            merged[key] = val
    for key, val in _DEFAULTS.items():
        merged.setdefault(key, val)
    if isinstance(merged.get("alpha"), (list, tuple)):
        merged["alpha"] = complex(*merged["alpha"])
    if isinstance(merged.get("target"), (list, tuple)):
        merged["target"] = complex(*merged["target"])
    return merged


def _load_operator(cfg) -> np.ndarray:
    sources = [k for k in ("matrix", "gallery", "operator") if cfg.get(k)]
    if len(sources) != 1:
        raise NumRangeError(
            "exactly one operator source required (--matrix, --gallery, or "
            "an 'operator' object in the config)")
    if cfg.get("matrix"):
        return load_matrix(cfg["matrix"])
    if cfg.get("gallery"):
        return gal.build_gallery(cfg["gallery"])
    return gal.build_from_config(cfg["operator"])


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _atlas_stage(a, cfg, outdir: Path):
    _log(f"[atlas] dim={a.shape[0]} budget={cfg['angle_budget']} "
         f"refine_tol={cfg['refine_tol']}")
    atlas = bnd.compute_boundary(a, angle_budget=cfg["angle_budget"],
                                 refine_tol=cfg["refine_tol"])
    reports.atlas_csv(atlas, outdir / "atlas.csv")
    return atlas


def _classify_stage(a, atlas, cfg):
    targets = None
    if cfg.get("targets"):
        targets = [complex(float(x.split(",")[0]), float(x.split(",")[1]))
                   for x in str(cfg["targets"]).split(";") if x.strip()]
    _log("[classify] running boundary classification")
    return bnd.classify_boundary(a, atlas, targets=targets)


def _gallery_checks(cfg, a, atlas, seed):
    """Structure checks attached to specific gallery operators."""
    spec = str(cfg.get("gallery") or "")
    name, _, arg = spec.partition(":")
    out = []
    if name == "harmonic":
        c = gal._parse_complex(arg.split(",")[0]) if arg else 1.0
        if complex(c).imag != 0:
            out.append(spc.oscillator_product_check(c, atlas, seed=seed))
    if name == "bump":
        out.append(spc.sector_containment_check(atlas, seed=seed))
    return out


def run(cfg: dict, command: str) -> int:
    outdir = Path(cfg["out"])
    outdir.mkdir(parents=True, exist_ok=True)
    seed = int(cfg["seed"])

    if command == "gallery":
        if cfg.get("curve"):
            from .geometry import example_curve
            kind, _, arg = str(cfg["curve"]).partition(":")
            alpha = float(arg) if arg else None
            samples = example_curve(kind, n_samples=int(cfg.get("samples", 400)),
                                    scale=float(cfg.get("scale", 1.0)),
                                    alpha=alpha)
            reports.frame_samples_csv(samples, outdir / "curve.csv")
            _log(f"[gallery] wrote {len(samples)} samples to curve.csv")
            return 0
        for line in gal.gallery_listing():
            print(line)
        return 0

    a = _load_operator(cfg)
    failed = False

    if command == "probe":
        fam, boxes = _build_family(cfg)
        _log(f"[probe] family dims {[m.shape[0] for m in fam]}")
        reps = spc.discretization_sequence_probe(
            fam, cfg["target"], disk_radius=cfg.get("disk_radius"), seed=seed)
        reports.theorems_json(reps, outdir / "theorems.json", seed=seed)
        failed = any(r.verdict == "fail" for r in reps)
        _log(f"[probe] {len(reps)} reports")
        return 1 if failed else 0

    atlas = _atlas_stage(a, cfg, outdir)

    if command == "range":
        reports.atlas_json(atlas, outdir / "atlas.json", seed=seed)
        plots.plot_boundary(atlas, outdir / "plot.svg", seed=seed)
        return 0

    classified = _classify_stage(a, atlas, cfg)
    reports.atlas_json(atlas, outdir / "atlas.json", seed=seed,
                       classified=classified)
    reports.classes_json(classified, outdir / "classes.json", seed=seed)

    if command == "classify":
        plots.plot_boundary(atlas, outdir / "plot.svg", classified=classified,
                            seed=seed)
        return 0

    if command == "verify":
        _log("[verify] eigenvalues and spectral checks")
        eigs, vecs = eig_general(a)
        tol = cfg.get("thm_tol")
        reps = spc.corner_eigenvalue_check(a, classified, eigs=eigs, tol=tol,
                                           seed=seed)
        for cp in classified:
            if cp.verdict is None or cp.verdict.kind not in spc.NONSMOOTH_KINDS:
                continue
            rep = spc.spectrum_membership_check(a, cp.point, tol=tol, seed=seed)
            if rep.verdict == "fail" and cp.verdict.kind == "infinite_upper":
                # the membership statement is open for points whose lower
                # curvature stays finite; log the candidate instead of failing
                rep.verdict = "inconclusive"
                rep.diagnostics += ("; upper-curvature-only point with a "
                                    "large resolvent margin (logged as an "
                                    "open-question counterexample candidate)")
            elif rep.verdict == "fail" and cp.scale_limited:
                rep.verdict = "inconclusive"
                rep.diagnostics += ("; classification tolerance-limited "
                                    f"(cone shrink {cp.cone_shrink:.3f}), "
                                    "treated as a finite-scale probe")
            reps.append(rep)
        btol = 1e-8 * atlas.scale
        for k in range(len(eigs)):
            if abs(atlas.max_violation(eigs[k])) <= btol:
                reps.append(spc.boundary_eigen_normality_check(
                    a, eigs[k], vecs[:, k], atlas, tol=tol, seed=seed))
        reps.extend(_gallery_checks(cfg, a, atlas, seed))
        reports.theorems_json(reps, outdir / "theorems.json", seed=seed)
        plots.plot_boundary(atlas, outdir / "plot.svg", classified=classified,
                            eigs=eigs, seed=seed)
        failed = any(r.verdict == "fail" for r in reps)
        _log(f"[verify] {len(reps)} reports, "
             f"{sum(r.verdict == 'pass' for r in reps)} pass, "
             f"{sum(r.verdict == 'fail' for r in reps)} fail")
        return 1 if failed else 0

    if command == "witness":
        at = cfg.get("at")
        if at is None:
            if atlas.corner_candidates:
                at = min((c.point for c in atlas.corner_candidates), key=abs)
            else:
                at = complex(bnd.support_sample(a, 3 * math.pi / 2).points[0])
        _log(f"[witness] normalizing at {at}")
        b, rec = spc.normalize_at(a, at, atlas)
        batlas = bnd.compute_boundary(b, angle_budget=cfg["angle_budget"],
                                      refine_tol=cfg["refine_tol"])
        eps = 2.0 ** -np.arange(1, int(cfg["depth"]) + 1)
        ws = wit.build_witness_sequence(b, cfg["alpha"], eps, atlas=batlas)
        s0, vecs0, _ = bnd.support_sample(b, 3 * math.pi / 2, want_vectors=True)
        fam = [vecs0[:, -1]]
        rep = wit.replay_inequalities(b, ws, fam, seed=seed)
        decay = wit.au_n_decay_probe(b, ws)
        reports.witness_json(rep, outdir / "witness.json", seed=seed,
                             decay=decay)
        plots.plot_boundary(batlas, outdir / "plot.svg", seed=seed)
        worst = min(min(r.norm_lo, r.norm_hi, r.size_margin, r.imag_margin,
                        r.mixed_imag_margin, r.re_value) for r in rep.rows)
        _log(f"[witness] depth {len(rep.rows)}, worst margin {worst:.3e}")
        return 1 if worst < 0 else 0

    raise NumRangeError(f"unknown command {command!r}")


def _build_family(cfg):
    spec = str(cfg.get("gallery") or "")
    name, _, arg = spec.partition(":")
    sweep = [int(x) for x in str(cfg.get("sweep", "")).split(",") if x.strip()]
    if not sweep:
        raise NumRangeError("probe needs --sweep N1,N2,...")
    boxes = None
    if cfg.get("boxes"):
        boxes = [float(x) for x in str(cfg["boxes"]).split(",") if x.strip()]
        if len(boxes) != len(sweep):
            raise NumRangeError("--boxes must match --sweep in length")
    fam = []
    for i, n in enumerate(sweep):
        if name == "jordan":
            lam = gal._parse_complex(arg.split(",")[1]) if "," in arg else 0.0
            fam.append(gal.jordan_block(n, lam))
        elif name in ("bump", "harmonic"):
            base = arg.split(",")[0] if arg else ("1+1j" if name == "bump" else "1")
            box = boxes[i] if boxes else max(8.0, n / 20.0)
            fam.append(gal.build_gallery(f"{name}:{base},{box},{n}"))
        else:
            raise NumRangeError(
                f"probe sweeps support jordan, bump and harmonic (got {name!r})")
    return fam, boxes


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _merge_config(args)
        return run(cfg, args.command)
    except NumRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
