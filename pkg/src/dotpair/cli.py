"""Command-line front end: steady, evolve, sweep, limits, convert, validate.

Configuration comes from a flat ``key = value`` text file plus flag
overrides; every command writes CSV or JSON with fixed numeric formatting
(17 significant digits, '\\n' line endings) so repeated runs are
byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .dynamics import steady_state, steady_state_by_evolution
from .model import (DICKE_LABELS, PRODUCT_FROM_DICKE, SystemParams,
                    basis_density, dicke_to_product)
from .observables import (concurrence, observe, pure_state_concurrence,
                          x_state_concurrence)
from .oracle import (PhysicalParams, analytic_populations, dipole_dipole_shift,
                     matexp_populations, mean_phonon_number, phonon_rate,
                     spontaneous_rate, strong_phonon_limits)
from .sweep import GridSpec, sweep_steady, sweep_transient, worker_count

COMMANDS = ("steady", "evolve", "sweep", "limits", "convert", "validate")

_FLOAT_KEYS = {
    # key: (accept, printable range)
    "gamma": (lambda v: v > 0, "(0, inf)"),
    "chi_r": (lambda v: 0.0 <= v <= 1.0, "[0, 1]"),
    "omega_dd": (lambda v: True, "(-inf, inf)"),
    "gamma_pn": (lambda v: v >= 0, "[0, inf)"),
    "n_bar": (lambda v: v >= 0, "[0, inf)"),
    "rabi": (lambda v: v >= 0, "[0, inf)"),
    "detuning": (lambda v: True, "(-inf, inf)"),
    "delta_min": (lambda v: True, "(-inf, inf)"),
    "delta_max": (lambda v: True, "(-inf, inf)"),
    "rabi_min": (lambda v: v >= 0, "[0, inf)"),
    "rabi_max": (lambda v: v >= 0, "[0, inf)"),
    "t_end": (lambda v: v > 0, "(0, inf)"),
    "tol": (lambda v: 1e-12 <= v <= 1e-3, "[1e-12, 1e-3]"),
    "n_bar_min": (lambda v: v >= 0, "[0, inf)"),
    "n_bar_max": (lambda v: v >= 0, "[0, inf)"),
    "A": (lambda v: v > 0, "(0, inf)"),
    "omega_c": (lambda v: v > 0, "(0, inf)"),
    "temperature": (lambda v: v > 0, "(0, inf)"),
    "zeta": (lambda v: True, "(-inf, inf)"),
    "kr": (lambda v: v > 0, "(0, inf)"),
    "k": (lambda v: v > 0, "(0, inf)"),
    "d": (lambda v: v > 0, "(0, inf)"),
    "epsilon": (lambda v: v > 0, "(0, inf)"),
}
_INT_KEYS = {
    "delta_count": (lambda v: v >= 1, ">= 1"),
    "rabi_count": (lambda v: v >= 1, ">= 1"),
    "t_count": (lambda v: v >= 2, ">= 2"),
    "n_bar_count": (lambda v: v >= 2, ">= 2"),
}
_CHOICE_KEYS = {
    "initial": ("e", "s", "a", "g"),
    "format": ("csv", "json"),
}
PARAM_KEYS = ("gamma", "chi_r", "omega_dd", "gamma_pn", "n_bar", "rabi", "detuning")
KNOWN_KEYS = (tuple(_FLOAT_KEYS) + tuple(_INT_KEYS) + tuple(_CHOICE_KEYS)
              + ("output",))

_DEFAULTS = {
    "gamma": 1.0, "chi_r": 0.0, "omega_dd": 0.0, "gamma_pn": 0.0,
    "n_bar": 0.0, "rabi": 0.0, "detuning": 0.0,
    "delta_min": -40.0, "delta_max": 40.0, "delta_count": 161,
    "rabi_min": 0.25, "rabi_max": 10.0, "rabi_count": 41,
    "t_end": 10.0, "t_count": 501, "tol": 1e-8, "initial": "g",
    "n_bar_min": 0.0, "n_bar_max": 1.0, "n_bar_count": 201,
    "A": 11e-15, "omega_c": 3e12, "temperature": 4.0,
    "zeta": float(np.pi / 2), "kr": 0.1, "k": 1.2e7, "d": 9.0e-29,
    "epsilon": 12.9,
    "format": "csv", "output": None,
}

_OBS_COLUMNS = ("concurrence", "R_ee", "R_ss", "R_aa", "R_gg",
                "intensity", "purity")


def _coerce(key: str, raw):
    if key in _FLOAT_KEYS:
        try:
            value = float(raw)
        except (TypeError, ValueError):
            raise ValueError(f"{key} must be a number, got {raw!r}") from None
        accept, rng = _FLOAT_KEYS[key]
        if not accept(value):
            raise ValueError(f"{key} must be in {rng}, got {value}")
        return value
    if key in _INT_KEYS:
        try:
            value = int(raw)
        except (TypeError, ValueError):
            raise ValueError(f"{key} must be an integer, got {raw!r}") from None
        accept, rng = _INT_KEYS[key]
        if not accept(value):
            raise ValueError(f"{key} must be {rng}, got {value}")
        return value
    if key in _CHOICE_KEYS:
        value = str(raw)
        if value not in _CHOICE_KEYS[key]:
            raise ValueError(
                f"{key} must be one of {list(_CHOICE_KEYS[key])}, got {value!r}")
        return value
    if key == "output":
        return str(raw)
    raise ValueError(f"unknown config key {key!r}")


@dataclass
class RunConfig:
    command: str
    params: SystemParams
    grid: GridSpec | None
    times: np.ndarray | None
    output_path: str
    format: str
    tol: float
    initial: str
    n_bar_grid: np.ndarray | None
    physical: PhysicalParams | None
    workers: int
    resolved: dict


def parse_config(text: str | None, overrides=None, command: str = "steady",
                 workers=None) -> RunConfig:
    """Merge config-file text with flag overrides into a validated RunConfig.

    Unknown keys, malformed lines and out-of-range values all raise
    ValueError naming the offending key.
    """
    if command not in COMMANDS:
        raise ValueError(f"command must be one of {list(COMMANDS)}, got {command!r}")
    values = dict(_DEFAULTS)
    if text is not None:
        for lineno, rawline in enumerate(text.splitlines(), 1):
            line = rawline.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(
                    f"config line {lineno}: expected 'key = value', got {rawline!r}")
            key, _, raw = line.partition("=")
            values[key.strip()] = _coerce(key.strip(), raw.strip())
    for key, raw in (overrides or {}).items():
        if raw is not None:
            values[key] = _coerce(key, raw)

    for lo, hi in (("delta_min", "delta_max"), ("rabi_min", "rabi_max"),
                   ("n_bar_min", "n_bar_max")):
        if values[lo] > values[hi]:
            raise ValueError(f"{lo} ({values[lo]}) must be <= {hi} ({values[hi]})")

    params = SystemParams(**{key: values[key] for key in PARAM_KEYS})
    grid = times = n_bar_grid = physical = None
    if command == "sweep":
        grid = GridSpec(
            detuning_range=(values["delta_min"], values["delta_max"], values["delta_count"]),
            rabi_range=(values["rabi_min"], values["rabi_max"], values["rabi_count"]),
            base=params)
    elif command == "evolve":
        times = np.linspace(0.0, values["t_end"], values["t_count"])
    elif command == "limits":
        n_bar_grid = np.linspace(values["n_bar_min"], values["n_bar_max"],
                                 values["n_bar_count"])
    elif command == "convert":
        physical = PhysicalParams(
            A=values["A"], omega_c=values["omega_c"], T=values["temperature"],
            zeta=values["zeta"], kr=values["kr"], k=values["k"], d=values["d"],
            epsilon=values["epsilon"])

    fmt = values["format"]
    output = values["output"]
    if output is None:
        if command == "convert":
            output = ""  # stdout only unless asked to write
        elif command == "validate":
            output = "dotpair_validate.json"
        else:
            output = f"dotpair_{command}.{'json' if fmt == 'json' else 'csv'}"
    resolved = {k: values[k] for k in KNOWN_KEYS if values[k] is not None}
    resolved["output"] = output
    return RunConfig(command=command, params=params, grid=grid, times=times,
                     output_path=output, format=fmt, tol=values["tol"],
                     initial=values["initial"], n_bar_grid=n_bar_grid,
                     physical=physical, workers=worker_count(workers),
                     resolved=resolved)


def _fmt(value) -> str:
    return format(float(value), ".17g")


def _write_csv(path: str, header, rows) -> None:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def _write_json(path: str, payload) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def _rho_columns():
    pairs = [f"{a}{b}" for a in DICKE_LABELS for b in DICKE_LABELS]
    return [f"re_{p}" for p in pairs] + [f"im_{p}" for p in pairs]


def _run_steady(cfg: RunConfig) -> int:
    st = steady_state(cfg.params)
    obs = observe(st.rho, cfg.params)
    if cfg.format == "json":
        payload = {
            "concurrence": obs.concurrence,
            "populations": dict(zip(("R_ee", "R_ss", "R_aa", "R_gg"),
                                    obs.populations)),
            "intensity": obs.intensity,
            "purity": obs.purity,
            "rho_re": st.rho.real.tolist(),
            "rho_im": st.rho.imag.tolist(),
            "residual": st.residual,
            "unique": st.unique,
        }
        _write_json(cfg.output_path, payload)
    else:
        header = list(_OBS_COLUMNS) + _rho_columns() + ["residual", "unique"]
        row = ([obs.concurrence, *obs.populations, obs.intensity, obs.purity]
               + [st.rho[i, j].real for i in range(4) for j in range(4)]
               + [st.rho[i, j].imag for i in range(4) for j in range(4)]
               + [st.residual, 1.0 if st.unique else 0.0])
        _write_csv(cfg.output_path, header, [row])
    print(f"wrote {cfg.output_path}")
    return 0


def _run_evolve(cfg: RunConfig) -> int:
    rho0 = basis_density(cfg.initial)
    obs_list = sweep_transient(cfg.params, rho0, cfg.times, tol=cfg.tol)
    header = ["t", "R_ee", "R_ss", "R_aa", "R_gg",
              "concurrence", "intensity", "purity"]
    rows = [[t, *obs.populations, obs.concurrence, obs.intensity, obs.purity]
            for t, obs in zip(cfg.times, obs_list)]
    if cfg.format == "json":
        payload = {name: [float(r[i]) for r in rows]
                   for i, name in enumerate(header)}
        _write_json(cfg.output_path, payload)
    else:
        _write_csv(cfg.output_path, header, rows)
    print(f"wrote {cfg.output_path}")
    return 0


def _run_sweep(cfg: RunConfig) -> int:
    result = sweep_steady(cfg.grid, workers=cfg.workers)
    deltas = cfg.grid.detunings()
    rabis = cfg.grid.rabis()
    header = ["delta", "rabi", "concurrence", "R_ee", "R_ss", "R_aa", "R_gg",
              "intensity"]
    rows = []
    for i in range(len(rabis)):
        for j in range(len(deltas)):
            cell = result.cells[i][j]
            if cell is None:
                continue
            rows.append([deltas[j], rabis[i], cell.concurrence,
                         *cell.populations, cell.intensity])
    _write_csv(cfg.output_path, header, rows)
    meta = {
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "command": "sweep",
        "workers": cfg.workers,
        "csv": cfg.output_path,
        "rows": len(rows),
        "config": cfg.resolved,
        "failures": [{"rabi_index": i, "delta_index": j, "error": err}
                     for (i, j), err in result.failures],
    }
    _write_json(cfg.output_path + ".meta.json", meta)
    print(f"wrote {cfg.output_path} ({len(rows)} rows, "
          f"{len(result.failures)} failed cells)")
    return 1 if result.failures else 0


def _run_limits(cfg: RunConfig) -> int:
    header = ["n_bar", "R_aa", "R_ss", "concurrence"]
    rows = []
    for nb in cfg.n_bar_grid:
        raa, rss, c = strong_phonon_limits(float(nb))
        rows.append([nb, raa, rss, c])
    if cfg.format == "json":
        payload = {name: [float(r[i]) for r in rows]
                   for i, name in enumerate(header)}
        _write_json(cfg.output_path, payload)
    else:
        _write_csv(cfg.output_path, header, rows)
    print(f"wrote {cfg.output_path}")
    return 0


def _run_convert(cfg: RunConfig) -> int:
    phys = cfg.physical
    gamma_si = spontaneous_rate(phys)
    omega_dd_si = dipole_dipole_shift(gamma_si, phys.zeta, phys.kr)
    gamma_pn_si = phonon_rate(phys, omega_dd_si)
    n_bar = mean_phonon_number(phys.T, omega_dd_si)
    payload = {
        "physical": asdict(phys),
        "rates_si": {
            "gamma": gamma_si,
            "omega_dd": omega_dd_si,
            "gamma_pn": gamma_pn_si,
            "n_bar": n_bar,
        },
        "system_params_gamma_units": {
            "gamma": 1.0,
            "chi_r": cfg.params.chi_r,
            "omega_dd": omega_dd_si / gamma_si,
            "gamma_pn": gamma_pn_si / gamma_si,
            "n_bar": n_bar,
            "rabi": cfg.params.rabi,
            "detuning": cfg.params.detuning,
        },
    }
    print(json.dumps(payload, indent=2))
    if cfg.output_path:
        _write_json(cfg.output_path, payload)
        print(f"wrote {cfg.output_path}")
    return 0


def validation_report(seed: int = 20240817) -> dict:
    """Built-in cross-checks of the independent computation routes."""
    rng = np.random.default_rng(seed)
    report = {}

    # 1. no-drive closed form against the matrix exponential
    sets = [SystemParams(gamma_pn=3.0, n_bar=0.05, chi_r=0.9, omega_dd=15.0)]
    while len(sets) < 13:
        p = SystemParams(
            chi_r=float(rng.uniform(0, 1)), gamma_pn=float(rng.uniform(0, 5)),
            n_bar=float(rng.uniform(0, 1)),
            omega_dd=float(rng.choice([-1, 1]) * rng.uniform(2, 20)))
        sets.append(p)
    worst = 0.0
    per = np.zeros(4)
    for p in sets:
        pops0 = rng.dirichlet(np.ones(4))
        for t in np.linspace(0.0, 10.0, 21):
            try:
                got = np.array(analytic_populations(p, pops0, float(t)))
            except ValueError:
                continue  # degenerate-spectrum point; the closed form declines
            ref = np.array(matexp_populations(p, pops0, float(t)))
            dev = np.abs(got - ref)
            per = np.maximum(per, dev)
            worst = max(worst, float(dev.max()))
    report["no_drive_closed_form_vs_matexp"] = {
        "max_abs_dev": worst,
        "per_population_max_dev": per.tolist(),
        "tolerance": 1e-9,
        "pass": worst <= 1e-9,
    }

    # 2. dense steady-state solve against forward integration
    driven = [
        SystemParams(gamma_pn=3.0, n_bar=0.05, chi_r=0.9, omega_dd=15.0,
                     rabi=5.0, detuning=-15.0),
        SystemParams(gamma_pn=0.0, n_bar=0.05, chi_r=0.9, omega_dd=15.0,
                     rabi=5.0, detuning=-15.0),
    ]
    for _ in range(4):
        driven.append(SystemParams(
            chi_r=float(rng.uniform(0, 0.99)), gamma_pn=float(rng.uniform(0.5, 5)),
            n_bar=float(rng.uniform(0.1, 0.6)),
            omega_dd=float(rng.choice([-1, 1]) * rng.uniform(5, 20)),
            rabi=float(rng.uniform(0, 8)), detuning=float(rng.uniform(-30, 30))))
    worst = 0.0
    for p in driven:
        direct = steady_state(p)
        evolved = steady_state_by_evolution(p)
        worst = max(worst, float(np.max(np.abs(direct.rho - evolved.rho))))
    report["steady_linear_vs_evolution"] = {
        "max_abs_dev": worst,
        "tolerance": 1e-6,
        "pass": worst <= 1e-6,
    }

    # 3. concurrence eigenvalue route against the closed forms
    tinv = PRODUCT_FROM_DICKE.conj().T
    worst = 0.0
    for _ in range(300):
        psi = rng.normal(size=4) + 1j * rng.normal(size=4)
        psi /= np.linalg.norm(psi)
        rho_d = np.outer(tinv @ psi, (tinv @ psi).conj())
        worst = max(worst, abs(concurrence(rho_d) - pure_state_concurrence(psi)))
    for _ in range(300):
        diag = rng.dirichlet(np.ones(4))
        r14 = rng.uniform(0, np.sqrt(diag[0] * diag[3])) * np.exp(2j * np.pi * rng.uniform())
        r23 = rng.uniform(0, np.sqrt(diag[1] * diag[2])) * np.exp(2j * np.pi * rng.uniform())
        x = np.diag(diag).astype(complex)
        x[0, 3], x[3, 0] = r14, r14.conjugate()
        x[1, 2], x[2, 1] = r23, r23.conjugate()
        rho_d = tinv @ x @ PRODUCT_FROM_DICKE
        worst = max(worst, abs(concurrence(rho_d) - x_state_concurrence(x)))
    report["concurrence_vs_closed_forms"] = {
        "max_abs_dev": float(worst),
        "tolerance": 1e-10,
        "pass": worst <= 1e-10,
    }

    # 4. strong-phonon closed-form curve against the full solver; a
    # documented discrepancy here does not fail validation as long as the
    # concurrence routine itself agrees with the x-state closed form
    regime = dict(gamma_pn=1000.0, chi_r=0.99, rabi=5.0, detuning=-15.0,
                  omega_dd=15.0)
    nbs = np.linspace(0.0, 0.7, 36)
    solver_c, closed_c = [], []
    x_worst = 0.0
    for nb in nbs:
        p = SystemParams(n_bar=float(nb), **regime)
        st = steady_state(p)
        solver_c.append(concurrence(st.rho))
        raa, rss, c_form = strong_phonon_limits(float(nb))
        closed_c.append(c_form)
        limit_diag = np.diag([rss, rss, raa, rss]).astype(complex)
        x_dev = abs(concurrence(limit_diag)
                    - x_state_concurrence(dicke_to_product(limit_diag)))
        x_worst = max(x_worst, x_dev)
    solver_c = np.array(solver_c)
    closed_c = np.array(closed_c)
    abs_dev = np.abs(solver_c - closed_c)
    sig = closed_c > 0.05
    rel_dev = float(np.max(abs_dev[sig] / closed_c[sig])) if sig.any() else 0.0
    within = rel_dev <= 0.10
    report["strong_phonon_curve"] = {
        "regime": regime,
        "n_bar": nbs.tolist(),
        "solver_concurrence": solver_c.tolist(),
        "closed_form_concurrence": closed_c.tolist(),
        "max_abs_dev": float(abs_dev.max()),
        "max_rel_dev": rel_dev,
        "within_10_percent": bool(within),
        "x_state_oracle_max_dev": float(x_worst),
        "x_state_oracle_pass": bool(x_worst <= 1e-10),
        "documented_discrepancy": bool(not within),
        "note": ("the closed-form curve is a vanishing-decay asymptote; at "
                 "finite drive the solver departs from it at intermediate "
                 "n_bar, while the concurrence routine itself matches the "
                 "x-state closed form"),
    }

    hard = ["no_drive_closed_form_vs_matexp", "steady_linear_vs_evolution",
            "concurrence_vs_closed_forms"]
    report["pass"] = (all(report[k]["pass"] for k in hard)
                      and report["strong_phonon_curve"]["x_state_oracle_pass"])
    return report


def _run_validate(cfg: RunConfig) -> int:
    report = validation_report()
    for key in ("no_drive_closed_form_vs_matexp", "steady_linear_vs_evolution",
                "concurrence_vs_closed_forms"):
        sec = report[key]
        print(f"{key}: {'ok' if sec['pass'] else 'FAIL'} "
              f"(max dev {sec['max_abs_dev']:.3e}, tol {sec['tolerance']:g})")
    curve = report["strong_phonon_curve"]
    status = "ok" if curve["within_10_percent"] else "documented discrepancy"
    print(f"strong_phonon_curve: {status} (max rel dev {curve['max_rel_dev']:.3f}, "
          f"x-state oracle dev {curve['x_state_oracle_max_dev']:.3e})")
    if cfg.output_path:
        _write_json(cfg.output_path, report)
        print(f"wrote {cfg.output_path}")
    return 0 if report["pass"] else 1


_RUNNERS = {
    "steady": _run_steady,
    "evolve": _run_evolve,
    "sweep": _run_sweep,
    "limits": _run_limits,
    "convert": _run_convert,
    "validate": _run_validate,
}


def run(cfg: RunConfig) -> int:
    return _RUNNERS[cfg.command](cfg)


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", help="path to a flat key = value config file")
    sub.add_argument("--output", help="output file path")
    sub.add_argument("--format", help="output format: csv or json")
    sub.add_argument("--gamma", type=float, help="spontaneous decay rate (the unit)")
    sub.add_argument("--chi-r", type=float, help="radiative coupling in [0, 1]")
    sub.add_argument("--omega-dd", type=float, help="dipole-dipole shift (signed)")
    sub.add_argument("--gamma-pn", type=float, help="phonon transfer rate")
    sub.add_argument("--n-bar", type=float, help="mean thermal phonon number")
    sub.add_argument("--rabi", type=float, help="Rabi frequency")
    sub.add_argument("--detuning", type=float, help="laser detuning (signed)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dotpair",
        description="Driven pair of coupled two-level emitters with radiative "
                    "and phonon damping: steady states, transients, sweeps.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("steady", help="steady state at one parameter point")
    _add_common(p)

    p = sub.add_parser("evolve", help="time evolution from a basis state")
    _add_common(p)
    p.add_argument("--t-end", type=float, help="final time in units 1/gamma")
    p.add_argument("--t-count", type=int, help="number of sample times")
    p.add_argument("--tol", type=float, help="integration tolerance")
    p.add_argument("--initial", help="initial basis state: e, s, a or g")

    p = sub.add_parser("sweep", help="steady-state scan over a (delta, rabi) grid")
    _add_common(p)
    p.add_argument("--delta-min", type=float)
    p.add_argument("--delta-max", type=float)
    p.add_argument("--delta-count", type=int)
    p.add_argument("--rabi-min", type=float)
    p.add_argument("--rabi-max", type=float)
    p.add_argument("--rabi-count", type=int)

    p = sub.add_parser("limits", help="strong-phonon closed-form curves")
    _add_common(p)
    p.add_argument("--n-bar-min", type=float)
    p.add_argument("--n-bar-max", type=float)
    p.add_argument("--n-bar-count", type=int)

    p = sub.add_parser("convert", help="physical SI inputs -> model rates")
    _add_common(p)
    p.add_argument("--A", type=float, help="phonon coefficient, s/K")
    p.add_argument("--omega-c", type=float, help="phonon cutoff, Hz")
    p.add_argument("--temperature", type=float, help="bath temperature, K")
    p.add_argument("--zeta", type=float, help="dipole-separation angle, rad")
    p.add_argument("--kr", type=float, help="wavenumber times separation")
    p.add_argument("--k", type=float, help="optical wavenumber, 1/m")
    p.add_argument("--d", type=float, help="dipole moment, C m")
    p.add_argument("--epsilon", type=float, help="relative dielectric constant")

    p = sub.add_parser("validate", help="run the built-in oracle cross-checks")
    _add_common(p)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    text = None
    if args.config:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: cannot read config file: {exc}", file=sys.stderr)
            return 2
    overrides = {}
    for key in KNOWN_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    try:
        cfg = parse_config(text, overrides, args.command)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return run(cfg)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
