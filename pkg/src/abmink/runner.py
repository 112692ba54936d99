"""Config parsing, scenario dispatch and report emission.

Config files are flat UTF-8 ``key = value`` documents, one scenario per
file.  Every physical key carries its unit in the name (``E0_V_per_m``,
``a_m``, ...) so there is no unit inference anywhere.  Example::

    scenario = wgm
    a_m = 100e-6
    P0_W = 100
    omega0_rad_per_s = 1000
    # n defaults to 1.45 (fused silica)

Optional keys: ``tag = abraham|minkowski|both`` and a linear parameter sweep
``sweep = <param>:[<lo>,<hi>,<count>]``.

Running a request is deterministic: the same request produces byte-identical
reports.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field

import numpy as np

from . import covariant, scenarios
from .core import (
    SI,
    FieldPoint,
    Medium,
    MomentumTag,
    RegimeError,
    mechanical_momentum_density,
    momentum_density,
)

__all__ = [
    "SCENARIO_NAMES",
    "DEFAULT_TOL",
    "ConfigError",
    "SweepSpec",
    "ScenarioRequest",
    "ScenarioReport",
    "CheckResult",
    "parse_config",
    "run",
    "emit",
    "check_suite",
]

DEFAULT_TOL = 1e-6

SCENARIO_NAMES = (
    "mirror",
    "drag",
    "wgm",
    "sphere-kick",
    "fiber",
    "bec",
    "interface",
    "covariant-checks",
)


class ConfigError(ValueError):
    """A config document is malformed or inconsistent with its scenario."""


_REQUIRED = object()

# key -> default (_REQUIRED marks mandatory keys); unit lives in the key name
_SCHEMAS: dict[str, dict[str, object]] = {
    "mirror": {
        "n": _REQUIRED,
        "E0_V_per_m": _REQUIRED,
        "omega_rad_per_s": _REQUIRED,
        "sigma_S_per_m": _REQUIRED,
        "guard_k_over_alpha": 0.2,
        "quadrature_tol": 1e-8,
    },
    "drag": {
        "intensity_W_per_m2": _REQUIRED,
        "sigma_a_m2": _REQUIRED,
        "omega_rad_per_s": _REQUIRED,
        "n": _REQUIRED,
    },
    "wgm": {
        "a_m": _REQUIRED,
        "P0_W": _REQUIRED,
        "omega0_rad_per_s": _REQUIRED,
        "n": 1.45,
        "t_s": 0.0,
    },
    "sphere-kick": {
        "M_kg": _REQUIRED,
        "a_m": _REQUIRED,
        "deltaG_kg_m_per_s": _REQUIRED,
        "pulse_energy_J": _REQUIRED,
        "n": _REQUIRED,
        "viscosity_Pa_s": _REQUIRED,
        "L0_m": _REQUIRED,
        "n0": 1.0,
        "viscosity0_Pa_s": 1.8e-5,
    },
    "fiber": {
        "pulse_energy_J": _REQUIRED,
        "n": _REQUIRED,
    },
    "bec": {
        "n": _REQUIRED,
        "omega_rad_per_s": _REQUIRED,
    },
    "interface": {
        "E_t_V_per_m": _REQUIRED,
        "n_from": _REQUIRED,
        "n_to": _REQUIRED,
    },
    "covariant-checks": {
        "n": 1.5,
        "mu_r": 1.0,
        "grid_step": 1e-3,
    },
}

_PROVENANCE = {
    "mirror": ("sigma_x = (n/c)(1+R) S_i with R = 1 - 2 k/alpha; "
               "Lorentz route (mu0 sigma/2) Re int E_y H_z* dx; "
               "transport route c g_x / n plus n R S_i / c"),
    "drag": ("I sigma_a p / (hbar omega) = e E with p = hbar n omega / c "
             "(minkowski) or hbar omega / (n c) (abraham)"),
    "wgm": ("N_z = -((n^2-1)/c^2) 2 pi a^2 omega0 P0 sin(omega0 t); "
            "identically zero under minkowski"),
    "sphere-kick": ("M v_max = deltaG + p_pulse with p_pulse = n H / c "
                    "(minkowski) or H / (n c) (abraham); "
                    "v(t) = v_max exp(-6 pi mu a t / M); "
                    "L/L0 correction scale H / (6 pi a c L0 mu0)"),
    "fiber": "J = (n - 1) H / c along propagation",
    "bec": "p = hbar n omega / c",
    "interface": "P = (eps0/2) E_t^2 (n_from^2 - n_to^2), positive toward n_to",
    "covariant-checks": ("rest-frame constitutive reduction; second-order "
                         "convergence of the four-divergence residual; "
                         "four-momentum classification"),
}


@dataclass(frozen=True)
class SweepSpec:
    param: str
    lo: float
    hi: float
    count: int


@dataclass(frozen=True)
class ScenarioRequest:
    scenario: str
    params: dict[str, float]
    tag: MomentumTag | None = None
    sweep: SweepSpec | None = None


@dataclass
class ScenarioReport:
    scenario: str
    params: dict[str, float]
    tag: str
    sweep: dict | None
    provenance: str
    columns: list[str]
    rows: list[list]
    residuals: dict[str, float] = field(default_factory=dict)
    errors: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    bound: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.bound


_SWEEP_RE = re.compile(
    r"^\s*([A-Za-z0-9_]+)\s*:\s*\[\s*([^,\]]+)\s*,\s*([^,\]]+)\s*,\s*([^,\]]+)\s*\]\s*$"
)


def _parse_float(key: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"value for '{key}' is not a number: {raw!r}") from None


def parse_config(text: str) -> ScenarioRequest:
    """Parse and validate a config document into a ScenarioRequest.

    Applies scenario defaults, rejects unknown scenarios and keys (a wrong
    unit suffix shows up as an unknown key), and reports every problem with
    the offending key name.
    """
    pairs: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {stripped!r}")
        key, _, raw = stripped.partition("=")
        key = key.strip()
        raw = raw.split("#", 1)[0].strip()
        if key in pairs:
            raise ConfigError(f"line {lineno}: duplicate key '{key}'")
        pairs[key] = raw

    if "scenario" not in pairs:
        raise ConfigError("missing required key 'scenario'")
    scenario = pairs.pop("scenario")
    if scenario not in _SCHEMAS:
        raise ConfigError(
            f"unknown scenario '{scenario}'; expected one of: "
            + ", ".join(SCENARIO_NAMES)
        )
    schema = _SCHEMAS[scenario]

    tag: MomentumTag | None = None
    if "tag" in pairs:
        raw = pairs.pop("tag").lower()
        if raw == "both":
            tag = None
        else:
            try:
                tag = MomentumTag(raw)
            except ValueError:
                raise ConfigError(
                    f"tag must be abraham, minkowski or both, got '{raw}'"
                ) from None

    sweep: SweepSpec | None = None
    if "sweep" in pairs:
        raw = pairs.pop("sweep")
        m = _SWEEP_RE.match(raw)
        if m is None:
            raise ConfigError(
                f"sweep must look like 'param:[lo,hi,count]', got '{raw}'"
            )
        param = m.group(1)
        if param not in schema:
            raise ConfigError(
                f"sweep parameter '{param}' is not a parameter of scenario "
                f"'{scenario}'"
            )
        lo = _parse_float("sweep lo", m.group(2))
        hi = _parse_float("sweep hi", m.group(3))
        count = int(_parse_float("sweep count", m.group(4)))
        if count < 2:
            raise ConfigError(f"sweep count must be >= 2, got {count}")
        if scenario == "covariant-checks":
            raise ConfigError("scenario 'covariant-checks' does not support sweeps")
        sweep = SweepSpec(param=param, lo=lo, hi=hi, count=count)

    params: dict[str, float] = {}
    for key, raw in pairs.items():
        if key not in schema:
            raise ConfigError(
                f"unknown key '{key}' for scenario '{scenario}'; allowed keys: "
                + ", ".join(schema)
            )
        params[key] = _parse_float(key, raw)

    for key, default in schema.items():
        if key in params:
            continue
        if sweep is not None and key == sweep.param:
            continue  # supplied per sweep point
        if default is _REQUIRED:
            raise ConfigError(
                f"missing required parameter '{key}' for scenario '{scenario}'"
            )
        params[key] = float(default)  # type: ignore[arg-type]

    return ScenarioRequest(scenario=scenario, params=params, tag=tag, sweep=sweep)


# ---------------------------------------------------------------------------
# Per-scenario evaluation
# ---------------------------------------------------------------------------

def _tags(tag: MomentumTag | None):
    if tag is None:
        return (MomentumTag.MINKOWSKI, MomentumTag.ABRAHAM)
    return (tag,)


def _point_mirror(p, tag):
    cfg = scenarios.MirrorConfig(
        medium=Medium.from_index(p["n"]),
        E0=p["E0_V_per_m"], omega=p["omega_rad_per_s"],
        conductivity=p["sigma_S_per_m"], guard=p["guard_k_over_alpha"])
    flux = scenarios.mirror_pressure_flux(cfg)
    p2 = scenarios.mirror_pressure_lorentz(cfg, p["quadrature_tol"])
    p3 = scenarios.mirror_pressure_divergence(cfg)
    vals = (flux.pressure, p2, p3)
    spread = (max(vals) - min(vals)) / max(abs(v) for v in vals)
    return {
        "n": p["n"],
        "sigma_S_per_m": p["sigma_S_per_m"],
        "omega_rad_per_s": p["omega_rad_per_s"],
        "reflectance": flux.reflectance,
        "phase_rad": flux.phase,
        "incident_flux_W_per_m2": scenarios.incident_flux(cfg),
        "pressure_flux_Pa": flux.pressure,
        "pressure_lorentz_Pa": p2,
        "pressure_divergence_Pa": p3,
        "max_rel_diff": spread,
    }


def _point_drag(p, tag):
    cfg = scenarios.DragConfig(intensity=p["intensity_W_per_m2"],
                               sigma_a=p["sigma_a_m2"],
                               omega=p["omega_rad_per_s"], n=p["n"])
    row = {
        "n": p["n"],
        "intensity_W_per_m2": p["intensity_W_per_m2"],
        "sigma_a_m2": p["sigma_a_m2"],
        "omega_rad_per_s": p["omega_rad_per_s"],
    }
    for t in _tags(tag):
        row[f"field_{t.value}_V_per_m"] = scenarios.photon_drag_field(cfg, t)
    if tag is None:
        row["minkowski_to_abraham_ratio"] = (
            row["field_minkowski_V_per_m"] / row["field_abraham_V_per_m"])
    return row


def _point_wgm(p, tag):
    cfg = scenarios.TorqueConfig(n=p["n"], a=p["a_m"], P0=p["P0_W"],
                                 omega0=p["omega0_rad_per_s"])
    row = {"n": p["n"], "a_m": p["a_m"], "P0_W": p["P0_W"],
           "omega0_rad_per_s": p["omega0_rad_per_s"], "t_s": p["t_s"]}
    for t in _tags(tag):
        res = scenarios.wgm_torque(cfg, p["t_s"], t)
        row[f"torque_{t.value}_N_m"] = res.torque
        row[f"amplitude_{t.value}_N_m"] = res.amplitude
    return row


def _point_sphere(p, tag):
    cfg = scenarios.SphereKickConfig(
        M=p["M_kg"], a=p["a_m"], deltaG=p["deltaG_kg_m_per_s"],
        pulse_energy=p["pulse_energy_J"],
        fluid=Medium.from_index(p["n"], viscosity=p["viscosity_Pa_s"]),
        L0=p["L0_m"],
        reference_fluid=Medium.from_index(p["n0"],
                                          viscosity=p["viscosity0_Pa_s"]))
    row = {"M_kg": p["M_kg"], "a_m": p["a_m"],
           "deltaG_kg_m_per_s": p["deltaG_kg_m_per_s"],
           "pulse_energy_J": p["pulse_energy_J"], "n": p["n"],
           "viscosity_Pa_s": p["viscosity_Pa_s"], "L0_m": p["L0_m"]}
    for t in _tags(tag):
        row[f"vmax_{t.value}_m_per_s"] = scenarios.sphere_kick_vmax(cfg, t)
        row[f"L_{t.value}_m"] = scenarios.sphere_total_displacement(cfg, t)
        row[f"ratio_{t.value}"] = scenarios.displacement_ratio(cfg, t)
    row["correction_magnitude"] = scenarios.displacement_correction(
        p["pulse_energy_J"], p["a_m"], p["L0_m"], p["viscosity0_Pa_s"])
    return row


def _point_fiber(p, tag):
    return {"pulse_energy_J": p["pulse_energy_J"], "n": p["n"],
            "impulse_N_s": scenarios.fiber_exit_impulse(p["pulse_energy_J"],
                                                        p["n"])}


def _point_bec(p, tag):
    return {"n": p["n"], "omega_rad_per_s": p["omega_rad_per_s"],
            "recoil_kg_m_per_s": scenarios.bec_recoil(p["n"],
                                                      p["omega_rad_per_s"])}


def _point_interface(p, tag):
    from .core import interface_pressure
    return {"E_t_V_per_m": p["E_t_V_per_m"], "n_from": p["n_from"],
            "n_to": p["n_to"],
            "pressure_Pa": interface_pressure(p["E_t_V_per_m"], p["n_from"],
                                              p["n_to"])}


def _covariant_check_rows(n: float, mu_r: float, grid_step: float):
    """Deterministic covariant self-checks (reduced units, c = 1)."""
    rng = np.random.default_rng(20240811)
    eps_r = n * n / mu_r
    rest = covariant.FourVelocity.rest()
    const_err = 0.0
    for _ in range(16):
        E = rng.normal(size=3)
        B = rng.normal(size=3)
        F = covariant.field_tensor_from_EB(E, B)
        H = covariant.excitation_from_constitutive(F, rest, n, mu_r)
        scale = max(np.max(np.abs(E)), np.max(np.abs(B)), 1e-300)
        const_err = max(
            const_err,
            float(np.max(np.abs(H.D - eps_r * E))) / scale,
            float(np.max(np.abs(H.H - B / mu_r))) / scale,
        )

    sampler = covariant.plane_wave_sampler(n=n, mu_r=mu_r,
                                           omega=2.0 * math.pi, E0=1.0)
    x = np.array([0.123, 0.0, 0.0])
    t = 0.077
    res = [np.linalg.norm(covariant.divergence_residual(sampler, x, t, h))
           for h in (grid_step, grid_step / 2.0, grid_step / 4.0)]
    ratios = (res[0] / res[1], res[1] / res[2])

    F, Hx = sampler(x, 0.0)
    S = covariant.minkowski_tensor4(F, Hx)
    cls_m = covariant.classify_four_momentum(
        covariant.pulse_four_momentum(S, 1.0, MomentumTag.MINKOWSKI))
    cls_a = covariant.classify_four_momentum(
        covariant.pulse_four_momentum(S, 1.0, MomentumTag.ABRAHAM))
    vac = covariant.plane_wave_sampler(n=1.0, mu_r=1.0, omega=2.0 * math.pi,
                                       E0=1.0)(x, 0.0)
    S_vac = covariant.minkowski_tensor4(*vac)
    cls_vac = covariant.classify_four_momentum(
        covariant.pulse_four_momentum(S_vac, 1.0, MomentumTag.MINKOWSKI))

    rows = [
        {"check": "constitutive_rest_frame_max_rel_err", "value": const_err},
        {"check": "divergence_ratio_coarse", "value": ratios[0]},
        {"check": "divergence_ratio_fine", "value": ratios[1]},
        {"check": "four_momentum_class_minkowski", "value": cls_m},
        {"check": "four_momentum_class_abraham", "value": cls_a},
        {"check": "four_momentum_class_vacuum", "value": cls_vac},
    ]
    residuals = {
        "constitutive_max_rel_err": const_err,
        "divergence_ratio_err": max(abs(r / 4.0 - 1.0) for r in ratios),
    }
    return rows, residuals


_RUNNERS = {
    "mirror": _point_mirror,
    "drag": _point_drag,
    "wgm": _point_wgm,
    "sphere-kick": _point_sphere,
    "fiber": _point_fiber,
    "bec": _point_bec,
    "interface": _point_interface,
}


def run(request: ScenarioRequest) -> ScenarioReport:
    """Evaluate a request into a report; pure and deterministic.

    Scenario preconditions violated at a sweep point (for example the
    good-conductor bound) become entries in ``report.errors`` carrying the
    violated bound and the supplied value; in-regime points still produce
    rows.
    """
    report = ScenarioReport(
        scenario=request.scenario,
        params=dict(request.params),
        tag="both" if request.tag is None else request.tag.value,
        sweep=None if request.sweep is None else {
            "param": request.sweep.param, "lo": request.sweep.lo,
            "hi": request.sweep.hi, "count": request.sweep.count},
        provenance=_PROVENANCE[request.scenario],
        columns=[], rows=[])

    if request.scenario == "covariant-checks":
        p = request.params
        rows, residuals = _covariant_check_rows(p["n"], p["mu_r"],
                                                p["grid_step"])
        report.columns = list(rows[0])
        report.rows = [list(r.values()) for r in rows]
        report.residuals = residuals
        return report

    runner = _RUNNERS[request.scenario]
    if request.sweep is None:
        points = [None]
    else:
        points = np.linspace(request.sweep.lo, request.sweep.hi,
                             request.sweep.count)

    for value in points:
        params = dict(request.params)
        if value is not None:
            params[request.sweep.param] = float(value)
        try:
            row = runner(params, request.tag)
        except (RegimeError, ValueError) as exc:
            where = "" if value is None else f"{request.sweep.param}={value:g}: "
            report.errors.append(f"{where}{exc}")
            continue
        if not report.columns:
            report.columns = list(row)
        report.rows.append(list(row.values()))

    if request.scenario == "mirror" and report.rows:
        idx = report.columns.index("max_rel_diff")
        report.residuals["three_way_max_rel_diff"] = max(
            r[idx] for r in report.rows)
    return report


# ---------------------------------------------------------------------------
# Emission
# ---------------------------------------------------------------------------

def _full(v) -> str:
    # 17 significant digits: parses back to the identical double
    return format(v, ".16e")


def emit(report: ScenarioReport, fmt: str = "table") -> bytes:
    """Render a report as 'table', 'csv' or 'json' bytes."""
    if fmt == "json":
        payload = {
            "scenario": report.scenario,
            "params": report.params,
            "tag": report.tag,
            "sweep": report.sweep,
            "provenance": report.provenance,
            "columns": report.columns,
            "rows": report.rows,
            "residuals": report.residuals,
            "errors": report.errors,
        }
        return (json.dumps(payload, indent=2) + "\n").encode()

    if fmt == "csv":
        lines = [",".join(report.columns)]
        for row in report.rows:
            lines.append(",".join(
                _full(v) if isinstance(v, float) else str(v) for v in row))
        return ("\n".join(lines) + "\n").encode()

    if fmt == "table":
        cells = [[f"{v:.6e}" if isinstance(v, float) else str(v) for v in row]
                 for row in report.rows]
        widths = [max(len(name), *(len(r[i]) for r in cells), 1)
                  if cells else len(name)
                  for i, name in enumerate(report.columns)]
        lines = [f"# scenario: {report.scenario}  (tag: {report.tag})",
                 f"# {report.provenance}"]
        lines.append("  ".join(name.ljust(w)
                               for name, w in zip(report.columns, widths)))
        for r in cells:
            lines.append("  ".join(c.rjust(w) for c, w in zip(r, widths)))
        for key, val in report.residuals.items():
            lines.append(f"# residual {key} = {val:.6e}")
        for err in report.errors:
            lines.append(f"# error: {err}")
        return ("\n".join(lines) + "\n").encode()

    raise ValueError(f"unknown format '{fmt}'; expected table, csv or json")


# ---------------------------------------------------------------------------
# Built-in cross-check suite
# ---------------------------------------------------------------------------

def check_suite(tol: float = DEFAULT_TOL) -> list[CheckResult]:
    """Three structural cross-checks on the whole stack.

    1. The three independent mirror-pressure routes agree over a small
       in-regime parameter grid.
    2. The four-divergence residual of the plane-wave energy-momentum tensor
       shrinks by 4x per halving of the grid step.
    3. Over seeded random nonmagnetic field points, the Abraham momentum plus
       the accompanying mechanical momentum equals the Minkowski momentum,
       which is n^2 times the Abraham momentum.
    """
    results = []

    sweep = scenarios.mirror_three_way_sweep(
        n_values=(1.0, 1.3, 1.6), sigma_values=(1e7, 1e8),
        omega_values=(2.6e15, 4.0e15), quadrature_tol=1e-8)
    results.append(CheckResult(
        name="three-way-mirror",
        residual=max(pt["max_rel_diff"] for pt in sweep),
        bound=tol))

    sampler = covariant.plane_wave_sampler(n=1.5, mu_r=1.0,
                                           omega=2.0 * math.pi, E0=1.0)
    x = np.array([0.123, 0.0, 0.0])
    res = [np.linalg.norm(covariant.divergence_residual(sampler, x, 0.077, h))
           for h in (1e-3, 5e-4, 2.5e-4)]
    ratio_err = max(abs(res[0] / res[1] / 4.0 - 1.0),
                    abs(res[1] / res[2] / 4.0 - 1.0))
    results.append(CheckResult(name="divergence-convergence",
                               residual=ratio_err, bound=0.2))

    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(1000):
        n = rng.uniform(1.0, 2.0)
        medium = Medium.from_index(n)
        fp = FieldPoint.from_EH(medium, rng.normal(size=3),
                                rng.normal(size=3) / SI.mu0 / SI.c)
        g_a = momentum_density(fp, MomentumTag.ABRAHAM)
        g_m = momentum_density(fp, MomentumTag.MINKOWSKI)
        g_mech = mechanical_momentum_density(medium, fp)
        scale = float(np.max(np.abs(g_m)))
        if scale == 0.0:
            continue
        worst = max(worst,
                    float(np.max(np.abs(g_a + g_mech - g_m))) / scale,
                    float(np.max(np.abs(n * n * g_a - g_m))) / scale)
    results.append(CheckResult(name="momentum-ledger", residual=worst,
                               bound=tol))
    return results
