"""Scenario runner: configuration, verification reports, convergence studies.

A scenario is described by a JSON-friendly dict: a spectrum source (analytic
box/disk, or a grid operator to solve), a list of checks with parameters, and
optional eigenfunction analyses.  Reports are deterministic: re-running a
scenario reproduces every field except the ``timing`` block.
"""

from __future__ import annotations

import dataclasses
import json
import math
import time
from pathlib import Path

import numpy as np

from . import analytic, bounds, eigfn
from .domain import Annulus, Disk, GaugeSpec, GridDomain, LShape, MaskFile, PotentialSpec, \
    Rectangle, build_domain
from .eigensolve import EigenPair, Spectrum, lowest_eigenpairs
from .errors import InputDataError, NumericalError, TruncationError
from .operator import assemble
from .specfun import constants_table

__all__ = [
    "parse_shape",
    "parse_gauge",
    "parse_potential",
    "validate_config",
    "run_scenario",
    "convergence_study",
    "write_report",
    "write_spectrum_csv",
    "strip_timing",
]

_COMPACT_RESOLVENT_NOTE = (
    "discrete spectra are finite by construction; the compact-resolvent "
    "assumption of the continuum problem needs no separate check"
)


# ---------------------------------------------------------------------------
# config parsing

def parse_shape(d: dict):
    kind = d.get("shape")
    if kind == "rectangle":
        return Rectangle(float(d["a"]), float(d["b"]))
    if kind == "disk":
        return Disk(float(d["radius"]))
    if kind == "lshape":
        return LShape(float(d["a"]), float(d["b"]), float(d["cut"]))
    if kind == "annulus":
        return Annulus(float(d["r_inner"]), float(d["r_outer"]))
    if kind == "mask_file":
        return MaskFile(str(d["path"]))
    raise InputDataError(f"unknown shape kind {kind!r}")


def parse_gauge(d: dict | None) -> GaugeSpec:
    if not d or d.get("kind", "none") == "none":
        return GaugeSpec.none()
    kind = d["kind"]
    if kind == "uniform":
        return GaugeSpec.uniform(float(d["B"]))
    if kind == "linear_gauge_shift":
        c = d.get("chi_coeffs", (0.0, 0.0, 0.0))
        return GaugeSpec.linear_gauge_shift(*[float(x) for x in c], B=float(d.get("B", 0.0)))
    raise InputDataError(f"unknown gauge kind {kind!r}")


def parse_potential(d: dict | None) -> PotentialSpec:
    if not d or d.get("kind", "zero") == "zero":
        return PotentialSpec.zero()
    kind = d["kind"]
    if kind == "constant":
        return PotentialSpec.constant(float(d["c"]))
    if kind == "radial_quadratic":
        return PotentialSpec.radial_quadratic(float(d["a"]), d.get("center", (0.0, 0.0)))
    if kind == "grid_file":
        return PotentialSpec.grid_file(str(d["path"]))
    raise InputDataError(f"unknown potential kind {kind!r}")


_CHECK_NAMES = {
    "berezin-li-yau",
    "li-yau",
    "riesz-mean-lower",
    "shifted-sum-upper",
    "ratio-bounds",
    "yang",
    "yang-corollaries",
    "ground-state-riesz-lower",
}


def validate_config(config: dict) -> None:
    spec_src = config.get("spectrum")
    if not isinstance(spec_src, dict) or spec_src.get("type") not in ("box", "disk", "grid"):
        raise InputDataError("config needs a 'spectrum' block of type box, disk or grid")
    for chk in config.get("checks", []):
        if chk.get("name") not in _CHECK_NAMES:
            raise InputDataError(f"unknown check {chk.get('name')!r}")
        for k in chk.get("ks", []):
            if int(k) < 1:
                raise InputDataError(f"check index k must be >= 1, got {k}")
        for lam in chk.get("lambdas", []):
            if float(lam) < 0:
                raise InputDataError(f"spectral parameter must be >= 0, got {lam}")
    if spec_src["type"] == "grid":
        solver = spec_src.get("solver", {})
        if int(solver.get("k", 1)) < 1:
            raise InputDataError("solver k must be >= 1")


# ---------------------------------------------------------------------------
# spectrum construction

def _build_spectrum(config: dict) -> tuple[Spectrum, list[EigenPair], GridDomain | None, float]:
    src = config["spectrum"]
    t0 = time.perf_counter()
    if src["type"] == "box":
        spec = analytic.box_spectrum(src["lengths"], int(src["count"]))
        return spec, [], None, time.perf_counter() - t0
    if src["type"] == "disk":
        spec = analytic.disk_spectrum(float(src["radius"]), int(src["count"]))
        return spec, [], None, time.perf_counter() - t0
    dom = build_domain(parse_shape(src["domain"]), float(src["domain"]["h"]))
    gauge = parse_gauge(src.get("gauge"))
    pot = parse_potential(src.get("potential"))
    op = assemble(dom, gauge, pot)
    solver = src.get("solver", {})
    spec, pairs = lowest_eigenpairs(op, int(solver.get("k", 10)),
                                    float(solver.get("tol", 1e-10)))
    return spec, pairs, dom, time.perf_counter() - t0


def _slack_for(config: dict, spec: Spectrum, scale: float) -> float:
    if spec.source == "analytic":
        return bounds.ANALYTIC_SLACK_RTOL * abs(scale)
    h = float(config["spectrum"]["domain"]["h"])
    c_tol = float(config.get("slack", {}).get("c_tol", 10.0))
    return bounds.discrete_slack(h, scale, c_tol)


def _resolve_lambdas(chk: dict, spec: Spectrum) -> list[float]:
    lams = [float(x) for x in chk.get("lambdas", [])]
    for j in chk.get("lambda_indices", []):
        j = int(j)
        if not 1 <= j <= len(spec):
            raise TruncationError(f"lambda index {j} exceeds computed spectrum length {len(spec)}")
        lams.append(float(spec.values[j - 1]))
    return lams


def _run_checks(config: dict, spec: Spectrum, pairs: list[EigenPair]) -> tuple[list, list]:
    results = []
    errors = []
    table = constants_table(spec.d, p_list=(2.0,))
    measure = spec.measure

    def run(fn, label, **ctx):
        try:
            out = fn()
        except (TruncationError, ValueError, NumericalError) as exc:
            errors.append({"check": label, "error": type(exc).__name__, "message": str(exc),
                           **ctx})
            return
        results.extend(out if isinstance(out, list) else [out])

    for chk in config.get("checks", []):
        name = chk["name"]
        if name == "berezin-li-yau":
            for lam in _resolve_lambdas(chk, spec):
                scale = 2 / (spec.d + 2) * table.ball_volume * measure * lam ** (1 + spec.d / 2)
                slack = _slack_for(config, spec, scale)
                run(lambda lam=lam, s=slack: bounds.check_berezin_li_yau(spec, measure, lam, s),
                    name, **{"lambda": lam})
        elif name == "li-yau":
            for k in chk.get("ks", []):
                scale = float(spec.values[: int(k)].sum()) if int(k) <= len(spec) else spec.values[-1]
                slack = _slack_for(config, spec, scale)
                run(lambda k=k, s=slack: bounds.check_li_yau(spec, measure, int(k), s), name, k=k)
        elif name == "riesz-mean-lower":
            for lam in _resolve_lambdas(chk, spec):
                slack = _slack_for(config, spec, lam ** (1 + spec.d / 2) / spec.values[0] ** (spec.d / 2))
                run(lambda lam=lam, s=slack: bounds.check_riesz_lower(spec, lam, s, table),
                    name, **{"lambda": lam})
        elif name == "shifted-sum-upper":
            for k in chk.get("ks", []):
                slack = _slack_for(config, spec, spec.values[0] * int(k) ** (1 + 2 / spec.d))
                run(lambda k=k, s=slack: bounds.check_shifted_sum_upper(spec, int(k), s, table),
                    name, k=k)
        elif name == "ratio-bounds":
            for k in chk.get("ks", []):
                slack = _slack_for(config, spec, spec.values[min(int(k), len(spec) - 1)])
                run(lambda k=k, s=slack: bounds.check_ratio_bounds(spec, int(k), s, table),
                    name, k=k)
        elif name == "yang":
            for k in chk.get("ks", []):
                scale = float(spec.values[min(int(k), len(spec) - 1)]) ** 2 * int(k)
                slack = _slack_for(config, spec, scale)
                run(lambda k=k, s=slack: bounds.check_yang(spec, int(k), s), name, k=k)
        elif name == "yang-corollaries":
            for k in chk.get("ks", []):
                slack = _slack_for(config, spec, spec.values[min(int(k), len(spec) - 1)])
                run(lambda k=k, s=slack: bounds.check_yang_corollaries(spec, int(k), s), name, k=k)
        elif name == "ground-state-riesz-lower":
            if not pairs:
                errors.append({"check": name, "error": "InputDataError",
                               "message": "needs a grid scenario with computed eigenfunctions"})
                continue
            h = float(config["spectrum"]["domain"]["h"])
            sup = float(np.abs(pairs[0].vector).max())
            for lam in _resolve_lambdas(chk, spec):
                slack = _slack_for(config, spec, lam ** (1 + spec.d / 2) / sup**2)
                run(lambda lam=lam, s=slack: bounds.check_sup_norm_riesz_lower(spec, sup, lam, s),
                    name, **{"lambda": lam})
    return results, errors


def _run_eigenfunction(config: dict, spec: Spectrum, pairs: list[EigenPair]) -> tuple[dict, list]:
    cfg = config.get("eigenfunction")
    out: dict = {}
    checks = []
    if not cfg or not pairs:
        return out, checks
    h = float(config["spectrum"]["domain"]["h"])
    ground = pairs[0]
    omega = ground.vector
    lam = ground.value
    rep = eigfn.norms(omega, h, p_list=(1.0, 2.0))
    out["norms"] = {"sup_norm": rep.sup_norm, "lp": {str(p): v for p, v in rep.lp.items()},
                    "l2_normalized": rep.l2_normalized}
    out["ground_state_degenerate"] = bool(spec.degeneracy_flags[0]) if len(spec) else False
    if cfg.get("chiti", True):
        checks.extend(eigfn.chiti_check(omega, h, lam, spec.d, p=float(cfg.get("p", 2.0))))
    if cfg.get("comparison", True):
        verdict = eigfn.comparison_check(omega, h, lam, spec.d, spec.measure,
                                         tol=float(cfg.get("tol", 0.02)))
        checks.extend([verdict.inclusion, verdict.domination])
        out["ball_measure"] = verdict.ball_measure
    if cfg.get("ode", False):
        profile = eigfn.decreasing_rearrangement(omega, h)
        checks.append(eigfn.rearrangement_ode_check(profile, lam, spec.d))
    return out, checks


# ---------------------------------------------------------------------------
# report plumbing

def _jsonable(obj):
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return [_jsonable(x) for x in obj.tolist()]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {k: _jsonable(v) for k, v in dataclasses.asdict(obj).items()}
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if obj is None or isinstance(obj, str):
        return obj
    return str(obj)


def run_scenario(config: dict) -> dict:
    """Execute one scenario: build the spectrum, run every configured check,
    and return a JSON-ready report."""
    validate_config(config)
    t_start = time.perf_counter()
    spec, pairs, dom, t_solve = _build_spectrum(config)
    check_results, errors = _run_checks(config, spec, pairs)
    eig_out, eig_checks = _run_eigenfunction(config, spec, pairs)
    check_results = check_results + eig_checks

    hard = [c for c in check_results if c.applicable and not c.diagnostic]
    overall = all(c.passed for c in hard)
    table = constants_table(spec.d, p_list=(1.0, 2.0))
    report = {
        "config": _jsonable(config),
        "constants": _jsonable(table),
        "notes": [_COMPACT_RESOLVENT_NOTE] if spec.source != "analytic" else [],
        "spectrum": {
            "d": spec.d,
            "source": spec.source,
            "measure": _jsonable(spec.measure),
            "values": _jsonable(spec.values),
            "degeneracy_flags": _jsonable(spec.degeneracy_flags),
            "residuals": [_jsonable(p.residual) for p in pairs],
        },
        "checks": [_jsonable(c) for c in check_results],
        "check_errors": _jsonable(errors),
        "eigenfunction": _jsonable(eig_out),
        "overall_pass": bool(overall),
        "timing": {
            "solve_seconds": t_solve,
            "total_seconds": time.perf_counter() - t_start,
        },
    }
    return report


def convergence_study(config: dict, levels: int) -> dict:
    """Re-run a grid scenario at h, h/2, h/4, ... and report observed
    convergence orders of the lowest eigenvalues."""
    validate_config(config)
    levels = int(levels)
    if levels < 2:
        raise InputDataError(f"need at least 2 refinement levels, got {levels}")
    src = config["spectrum"]
    if src["type"] != "grid":
        raise InputDataError("convergence studies need a grid scenario; analytic spectra are exact")

    h0 = float(src["domain"]["h"])
    k = int(src.get("solver", {}).get("k", 10))
    level_values = []
    failures = []
    t0 = time.perf_counter()
    for level in range(levels):
        cfg = json.loads(json.dumps(config))
        cfg["spectrum"]["domain"]["h"] = h0 / 2**level
        cfg["checks"] = []
        cfg.pop("eigenfunction", None)
        try:
            spec, _, _, _ = _build_spectrum(cfg)
            level_values.append(spec.values[:k])
        except (NumericalError, ValueError) as exc:
            failures.append({"level": level, "h": h0 / 2**level,
                             "error": type(exc).__name__, "message": str(exc)})
            break

    report: dict = {
        "config": _jsonable(config),
        "levels": [{"h": h0 / 2**i, "values": _jsonable(v)} for i, v in enumerate(level_values)],
        "failures": failures,
        "timing": {"total_seconds": time.perf_counter() - t0},
    }

    ref = config.get("reference")
    orders = []
    if ref and len(level_values) >= 2:
        if ref.get("type") == "box":
            exact = analytic.box_spectrum(ref["lengths"], max(4 * k, 50)).values[:k]
        elif ref.get("type") == "disk":
            exact = analytic.disk_spectrum(float(ref["radius"]), max(4 * k, 50)).values[:k]
        else:
            raise InputDataError(f"unknown reference type {ref.get('type')!r}")
        report["reference_values"] = _jsonable(exact)
        for i in range(len(level_values) - 1):
            e0 = np.abs(level_values[i] - exact)
            e1 = np.abs(level_values[i + 1] - exact)
            with np.errstate(divide="ignore", invalid="ignore"):
                orders.append(np.log2(e0 / e1))
    elif len(level_values) >= 3:
        for i in range(len(level_values) - 2):
            d0 = np.abs(level_values[i] - level_values[i + 1])
            d1 = np.abs(level_values[i + 1] - level_values[i + 2])
            with np.errstate(divide="ignore", invalid="ignore"):
                orders.append(np.log2(d0 / d1))
    report["observed_orders"] = [_jsonable(o) for o in orders]

    if len(level_values) >= 2:
        fine, coarse = level_values[-1], level_values[-2]
        report["richardson_extrapolated"] = _jsonable(fine + (fine - coarse) / 3.0)
    return report


def strip_timing(report: dict) -> dict:
    """Copy of a report with all timing fields removed (for determinism tests)."""
    out = json.loads(json.dumps(report, sort_keys=True))
    out.pop("timing", None)
    return out


def write_report(report: dict, path: str | Path) -> None:
    Path(path).write_text(json.dumps(report, sort_keys=True, indent=2) + "\n")


def write_spectrum_csv(values, path: str | Path) -> None:
    """One eigenvalue per line."""
    lines = "".join(f"{float(v):.17g}\n" for v in values)
    Path(path).write_text(lines)
