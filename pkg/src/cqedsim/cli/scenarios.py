"""Named scenario kinds, the single-run driver and the sweep driver."""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product as iter_product
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from .. import __version__, analysis, cavity, circuit, thermal
from ..constants import H_PLANCK, PHI0
from ..dynamics import (ConstantEnvelope, DrivenQubitSpec, IntegratorStats,
                        JaynesCummingsSpec, SineEnvelope, TwoQubitSpec,
                        build_collapse_operators, build_hamiltonian,
                        duration_for_angle, lindblad_evolve, pulse_angle,
                        rabi_probability_analytic)
from ..errors import ConfigError, ConvergenceError
from ..hilbert import (DensityMatrix, QuantumOperator, SpaceDescriptor,
                       embed_operator, ladder_operator, pauli_operator,
                       product_density)
from .config import Param, Schema, ScenarioConfig
from .csvout import write_csv
from .manifest import build_manifest, manifest_path_for, write_manifest
from .svg import write_line_plot

TOP_FOCK_TOL = 1e-6


@dataclass
class Table:
    headers: list[str]
    rows: list[list]
    stats: Optional[IntegratorStats] = None
    results: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ScenarioDef:
    kind: str
    description: str
    schema: Schema
    output_schema: Schema
    run: Callable[[dict, dict], Table]


@dataclass
class RunResult:
    csv_path: Path
    manifest_path: Path
    manifest: dict
    svg_path: Optional[Path] = None


def _output_schema(kind: str, extra: list[Param]) -> Schema:
    base = [
        Param("csv_path", "str", help="output CSV file"),
        Param("svg_path", "str", default="", help="optional SVG line plot"),
    ]
    return Schema("output", base + extra)


def _time_grid(out: dict) -> np.ndarray:
    t_max, dt = out["t_max_ns"], out["dt_ns"]
    if t_max <= dt:
        raise ConfigError("output.t_max_ns", "span must exceed the sample step")
    return np.arange(0.0, t_max + dt / 2.0, dt)


def _bath(p: dict) -> thermal.BathSpec:
    return thermal.BathSpec(
        T_mK=p["T_mK"],
        kappa1_MHz=p.get("kappa1_MHz", 0.0),
        kappa_phi_MHz=p.get("kappa_phi_MHz", 0.0),
        Gamma1_MHz=p.get("Gamma1_MHz", 0.0),
        Gamma_phi_MHz=p.get("Gamma_phi_MHz", 0.0),
    )


# --- transmon_table -------------------------------------------------------

def _run_transmon_table(p, out):
    e_j = p["E_J_GHz"]
    e_c = p["E_C_GHz"] if p["E_C_GHz"] > 0 else e_j / p["E_J_over_E_C"]
    rows = []
    for order in (0, 1, 2):
        levels = circuit.transmon_spectrum(e_j, e_c, method="perturbative",
                                           order=order, n_levels=3)
        rows.append([order, float(levels[1]),
                     circuit.anharmonicity(levels) * 1e3])
    if p["include_exact"]:
        levels = circuit.transmon_spectrum(e_j, e_c, method="exact",
                                           charge_cutoff=p["exact_cutoff"],
                                           n_levels=3)
        rows.append(["exact", float(levels[1]),
                     circuit.anharmonicity(levels) * 1e3])
    return Table(headers=["order", "omega_q_GHz", "alpha_MHz"], rows=rows)


_TRANSMON_TABLE = ScenarioDef(
    kind="transmon_table",
    description="Transmon qubit frequency and anharmonicity per "
                "perturbative order",
    schema=Schema("scenario", [
        Param("E_J_GHz", "float", default=27.31, positive=True),
        Param("E_C_GHz", "float", default=-1.0,
              help="charging energy; derived from E_J_over_E_C when unset"),
        Param("E_J_over_E_C", "float", default=122.47, positive=True),
        Param("include_exact", "bool", default=False),
        Param("exact_cutoff", "int", default=40),
    ]),
    output_schema=_output_schema("transmon_table", []),
    run=_run_transmon_table,
)


# --- boltzmann_curve ------------------------------------------------------

def _run_boltzmann(p, out):
    temps = np.linspace(out["T_min_mK"], out["T_max_mK"], out["n_points"])
    rows = []
    for t_mk in temps:
        f, p_ex = thermal.boltzmann_excitation(p["f_GHz"], float(t_mk))
        n_th = thermal.thermal_occupancy(p["f_GHz"], float(t_mk))
        rows.append([float(t_mk), f, p_ex, n_th])
    return Table(headers=["T_mK", "F", "P_ex", "n_th"], rows=rows)


_BOLTZMANN = ScenarioDef(
    kind="boltzmann_curve",
    description="Boltzmann factor, excited-state occupation and thermal "
                "photon number against temperature",
    schema=Schema("scenario", [
        Param("f_GHz", "float", default=7.0, positive=True),
    ]),
    output_schema=_output_schema("boltzmann_curve", [
        Param("T_min_mK", "float", default=10.0, positive=True),
        Param("T_max_mK", "float", default=1000.0, positive=True),
        Param("n_points", "int", default=100, positive=True),
    ]),
    run=_run_boltzmann,
)


# --- cavity_modes ---------------------------------------------------------

def _run_cavity_modes(p, out):
    with_q = p["Q_ref_200mK"] > 0
    headers = ["n_x", "n_y", "n_z", "f_GHz"]
    if with_q:
        headers += ["Q", "kappa1_MHz"]
        model = cavity.QualityModel(Q_ref=p["Q_ref_200mK"])
        q = cavity.quality_factor_thermal(p["T_mK"], model)
    rows = []
    if p["geometry"] == "rectangular":
        geom = cavity.RectangularCavity(p["Lx_mm"] * 1e-3, p["Ly_mm"] * 1e-3,
                                        p["Lz_mm"] * 1e-3)
        modes = []
        for triple in iter_product(range(p["max_index"] + 1), repeat=3):
            if sum(1 for v in triple if v) < 2:
                continue
            modes.append((cavity.rectangular_mode_frequency(geom, triple),
                          triple))
        for f, (nx, ny, nz) in sorted(modes):
            row = [nx, ny, nz, f]
            if with_q:
                row += [q, cavity.kappa_from_quality(f, q)]
            rows.append(row)
    else:
        f = cavity.quarter_wave_frequency(p["stub_mm"] * 1e-3)
        row = [0, 0, 0, f]
        if with_q:
            row += [q, cavity.kappa_from_quality(f, q)]
        rows.append(row)
    return Table(headers=headers, rows=rows)


_CAVITY_MODES = ScenarioDef(
    kind="cavity_modes",
    description="Rectangular or quarter-wave cavity mode frequencies, "
                "optionally with the thermal quality factor",
    schema=Schema("scenario", [
        Param("geometry", "str", default="rectangular",
              choices=("rectangular", "quarter_wave")),
        Param("Lx_mm", "float", default=36.0, positive=True),
        Param("Ly_mm", "float", default=6.0, positive=True),
        Param("Lz_mm", "float", default=22.0, positive=True),
        Param("max_index", "int", default=2, positive=True),
        Param("stub_mm", "float", default=8.0, positive=True),
        Param("Q_ref_200mK", "float", default=-1.0,
              help="reference quality factor; enables the Q/kappa columns"),
        Param("T_mK", "float", default=200.0, positive=True),
    ]),
    output_schema=_output_schema("cavity_modes", []),
    run=_run_cavity_modes,
)


# --- rabi_jc --------------------------------------------------------------

def _top_fock_guard(space, n_max):
    proj = np.zeros((n_max, n_max))
    proj[n_max - 1, n_max - 1] = 1.0
    proj[n_max - 2, n_max - 2] = 1.0
    op = QuantumOperator(SpaceDescriptor((n_max,)), proj, hermitian=True)
    return embed_operator(op, 1, space)


def _run_rabi_jc(p, out):
    if p["n_photons"] >= p["n_max"]:
        raise ConfigError("scenario.n_photons",
                          f"must be below n_max = {p['n_max']}")
    spec = JaynesCummingsSpec(omega_r_GHz=p["omega_r_GHz"],
                              omega_q_GHz=p["omega_q_GHz"],
                              g_GHz=p["g_MHz"] / 1e3, n_max=p["n_max"])
    h = build_hamiltonian(spec)
    space = h.space
    cops = build_collapse_operators(_bath(p), space, p["omega_r_GHz"],
                                    p["omega_q_GHz"],
                                    qubit_thermal=p["qubit_thermal"])
    rho0 = product_density(space, (1 if p["qubit_excited"] else 0,
                                   p["n_photons"]))
    excited = pauli_operator("plus") @ pauli_operator("minus")
    observables = {
        "P_e": embed_operator(excited, 0, space),
        "n_cavity": embed_operator(ladder_operator(p["n_max"], "number"),
                                   1, space),
        "_top_fock": _top_fock_guard(space, p["n_max"]),
    }
    res = lindblad_evolve(h, rho0, cops, _time_grid(out), observables,
                          rtol=p["rtol"])
    top = float(np.max(res.traces["_top_fock"]))
    if top >= TOP_FOCK_TOL:
        raise ConvergenceError(
            f"top two Fock levels reach population {top:.2e}; "
            f"increase n_max beyond {p['n_max']}")
    rows = [[float(t), float(pe), float(n)] for t, pe, n in
            zip(res.times, res.traces["P_e"], res.traces["n_cavity"])]
    return Table(headers=["t_ns", "P_e", "n_cavity"], rows=rows,
                 stats=res.stats)


_RABI_JC = ScenarioDef(
    kind="rabi_jc",
    description="Vacuum Rabi oscillations of a qubit-cavity system under "
                "dissipation and temperature",
    schema=Schema("scenario", [
        Param("omega_r_GHz", "float", default=7.0, positive=True),
        Param("omega_q_GHz", "float", default=7.0, positive=True),
        Param("g_MHz", "float", default=200.0, nonneg=True),
        Param("n_max", "int", default=15),
        Param("n_photons", "int", default=5, nonneg=True),
        Param("qubit_excited", "bool", default=True),
        Param("kappa1_MHz", "float", default=1e-5, nonneg=True),
        Param("kappa_phi_MHz", "float", default=0.0, nonneg=True),
        Param("Gamma1_MHz", "float", default=0.01, nonneg=True),
        Param("Gamma_phi_MHz", "float", default=0.0, nonneg=True),
        Param("T_mK", "float", default=200.0, positive=True),
        Param("qubit_thermal", "bool", default=False),
        Param("rtol", "float", default=1e-8, positive=True),
    ]),
    output_schema=_output_schema("rabi_jc", [
        Param("t_max_ns", "float", default=100.0, positive=True),
        Param("dt_ns", "float", default=0.05, positive=True),
    ]),
    run=_run_rabi_jc,
)


# --- driven_rabi ----------------------------------------------------------

def _make_envelope(p):
    if p["envelope"] == "constant":
        return ConstantEnvelope(p["amplitude"])
    return SineEnvelope(p["omega_e_MHz"])


def _run_driven_rabi(p, out):
    env = _make_envelope(p)
    spec = DrivenQubitSpec(omega_q_GHz=p["omega_q_GHz"],
                           g_GHz=p["g_MHz"] / 1e3,
                           omega_d_GHz=p["omega_d_GHz"],
                           envelope=env, frame=p["frame"])
    h = build_hamiltonian(spec)
    space = h.space
    cops = build_collapse_operators(_bath(p), space, p["omega_q_GHz"],
                                    p["omega_q_GHz"])
    rho0 = product_density(space, (0,))
    excited = pauli_operator("plus") @ pauli_operator("minus")
    times = _time_grid(out)
    res = lindblad_evolve(h, rho0, cops, times, {"P_e": excited},
                          rtol=p["rtol"])
    headers = ["t_ns", "P_e"]
    rows = [[float(t), float(pe)] for t, pe in zip(res.times,
                                                   res.traces["P_e"])]
    if p["envelope"] == "constant":
        headers.append("P_e_analytic")
        ref = rabi_probability_analytic(p["g_MHz"] * p["amplitude"],
                                        p["omega_q_GHz"], p["omega_d_GHz"],
                                        times)
        for row, v in zip(rows, ref):
            row.append(float(v))
    return Table(headers=headers, rows=rows, stats=res.stats)


_DRIVEN_RABI = ScenarioDef(
    kind="driven_rabi",
    description="Microwave-driven qubit in the lab or rotating frame, with "
                "the closed-form reference for constant envelopes",
    schema=Schema("scenario", [
        Param("omega_q_GHz", "float", default=7.0, positive=True),
        Param("omega_d_GHz", "float", default=7.0, positive=True),
        Param("g_MHz", "float", default=500.0, nonneg=True),
        Param("frame", "str", default="rotating",
              choices=("rotating", "lab")),
        Param("envelope", "str", default="constant",
              choices=("constant", "sine")),
        Param("amplitude", "float", default=1.0),
        Param("omega_e_MHz", "float", default=10.0, positive=True),
        Param("Gamma1_MHz", "float", default=0.0, nonneg=True),
        Param("Gamma_phi_MHz", "float", default=0.0, nonneg=True),
        Param("T_mK", "float", default=200.0, positive=True),
        Param("rtol", "float", default=1e-8, positive=True),
    ]),
    output_schema=_output_schema("driven_rabi", [
        Param("t_max_ns", "float", default=10.0, positive=True),
        Param("dt_ns", "float", default=0.01, positive=True),
    ]),
    run=_run_driven_rabi,
)


# --- pulse_calibration ----------------------------------------------------

def _run_pulse_calibration(p, out):
    env = _make_envelope(p)
    times = _time_grid(out)
    s = np.asarray(env.value(times), dtype=float)
    theta = np.array([pulse_angle(env, p["g_MHz"], float(t)) for t in times])
    rows = [[float(t), float(sv), float(th)]
            for t, sv, th in zip(times, s, theta)]
    results = {
        "t_pi_ns": duration_for_angle(env, p["g_MHz"], np.pi),
        "t_pi_half_ns": duration_for_angle(env, p["g_MHz"], np.pi / 2.0),
    }
    return Table(headers=["t_ns", "S", "Theta_rad"], rows=rows,
                 results=results)


_PULSE_CALIBRATION = ScenarioDef(
    kind="pulse_calibration",
    description="Pulse rotation angle against time plus pi and pi/2 "
                "durations for an envelope",
    schema=Schema("scenario", [
        Param("g_MHz", "float", default=50.0, positive=True),
        Param("envelope", "str", default="sine",
              choices=("constant", "sine")),
        Param("amplitude", "float", default=1.0),
        Param("omega_e_MHz", "float", default=10.0, positive=True),
    ]),
    output_schema=_output_schema("pulse_calibration", [
        Param("t_max_ns", "float", default=100.0, positive=True),
        Param("dt_ns", "float", default=0.1, positive=True),
    ]),
    run=_run_pulse_calibration,
)


# --- dispersive_spectrum --------------------------------------------------

def _run_dispersive(p, out):
    p_e = p["P_e"]
    if p_e < 0.0:
        p_e = thermal.boltzmann_excitation(p["omega_q_GHz"], p["T_mK"]).P_ex
    span = out["span_MHz"] * 1e-3
    f_lo = out["f_min_GHz"] if out["f_min_GHz"] > 0 \
        else p["omega_r_GHz"] - span
    f_hi = out["f_max_GHz"] if out["f_max_GHz"] > 0 \
        else p["omega_r_GHz"] + span
    df = out["df_MHz"] * 1e-3
    if f_hi <= f_lo:
        raise ConfigError("output.f_max_GHz", "grid must be non-empty")
    grid = np.arange(f_lo, f_hi + df / 2.0, df)
    spec = analysis.transmission_spectrum(p["omega_r_GHz"], p["chi_MHz"],
                                          p["kappa2_MHz"], p_e, grid)
    rows = [[float(f), float(v)] for f, v in zip(spec.freqs_GHz, spec.values)]
    return Table(headers=["f_GHz", "transmission"], rows=rows,
                 results={"P_e": p_e})


_DISPERSIVE = ScenarioDef(
    kind="dispersive_spectrum",
    description="Dispersive-readout transmission lines split by the "
                "qubit-state cavity pull",
    schema=Schema("scenario", [
        Param("omega_r_GHz", "float", default=6.0, positive=True),
        Param("omega_q_GHz", "float", default=7.0, positive=True),
        Param("chi_MHz", "float", default=6.0),
        Param("kappa2_MHz", "float", default=0.1, positive=True),
        Param("T_mK", "float", default=200.0, positive=True),
        Param("P_e", "float", default=-1.0,
              help="occupation override; derived from T_mK when negative"),
    ]),
    output_schema=_output_schema("dispersive_spectrum", [
        Param("span_MHz", "float", default=30.0, positive=True),
        Param("f_min_GHz", "float", default=-1.0),
        Param("f_max_GHz", "float", default=-1.0),
        Param("df_MHz", "float", default=0.02, positive=True),
    ]),
    run=_run_dispersive,
)


# --- entropy_sweep --------------------------------------------------------

def _run_entropy_sweep(p, out):
    spec = TwoQubitSpec(omega1_GHz=p["omega1_GHz"],
                        omega2_GHz=p["omega2_GHz"],
                        g_GHz=p["g_MHz"] / 1e3)
    h = build_hamiltonian(spec)
    space = h.space
    cops = build_collapse_operators(_bath(p), space, p["omega1_GHz"],
                                    p["omega1_GHz"])
    rho0 = product_density(space, (1, 0))
    res = lindblad_evolve(h, rho0, cops, _time_grid(out), {},
                          rtol=p["rtol"], store_states=True)
    s_total = np.empty(len(res.times))
    s_qubit = np.empty(len(res.times))
    for i, state in enumerate(res.states):
        dm = DensityMatrix(space, state, trace_tol=1e-6, herm_tol=1e-9,
                           eig_floor=-1e-6)
        s_total[i] = analysis.von_neumann_entropy(dm)
        s_qubit[i] = analysis.entanglement_entropy(dm, {0})
    row = [p["g_MHz"], float(np.mean(s_total)), float(np.mean(s_qubit)),
           float(np.max(s_qubit))]
    return Table(headers=["g_MHz", "S_total_avg_nats", "S_qubit1_avg_nats",
                          "S_qubit1_max_nats"],
                 rows=[row], stats=res.stats)


_ENTROPY_SWEEP = ScenarioDef(
    kind="entropy_sweep",
    description="Time-averaged total and single-qubit entropies of two "
                "coupled qubits started in |10>",
    schema=Schema("scenario", [
        Param("omega1_GHz", "float", default=6.926, positive=True),
        Param("omega2_GHz", "float", default=5.755, positive=True),
        Param("g_MHz", "float", default=306.0, nonneg=True),
        Param("Gamma1_MHz", "float", default=1e-5, nonneg=True),
        Param("Gamma_phi_MHz", "float", default=0.0, nonneg=True),
        Param("T_mK", "float", default=200.0, positive=True),
        Param("rtol", "float", default=1e-8, positive=True),
    ]),
    output_schema=_output_schema("entropy_sweep", [
        Param("t_max_ns", "float", default=50.0, positive=True),
        Param("dt_ns", "float", default=0.05, positive=True),
    ]),
    run=_run_entropy_sweep,
)


# --- epr_params -----------------------------------------------------------

def _run_epr_params(p, out):
    freqs = p["mode_freqs_GHz"]
    parts = p["mode_participations"]
    if len(freqs) != len(parts):
        raise ConfigError("scenario.mode_participations",
                          "needs one entry per mode frequency")
    e_j = p["E_J_GHz"]
    if e_j <= 0.0:
        if p["L_J_nH"] <= 0.0:
            raise ConfigError("scenario.E_J_GHz",
                              "set E_J_GHz or L_J_nH to a positive value")
        e_j = PHI0 ** 2 / (p["L_J_nH"] * 1e-9) / H_PLANCK / 1e9
    xis = [circuit.epr_zero_point(pr, f, e_j) for pr, f in zip(parts, freqs)]
    kerr = circuit.kerr_matrix(xis, freqs, e_j, p["fock_dim"])
    headers = ["E_J_GHz"]
    row = [e_j]
    for m, (f, pr, xi, al) in enumerate(zip(freqs, parts, xis,
                                            kerr.alpha_GHz)):
        headers += [f"omega_{m}_GHz", f"p_{m}", f"xi_{m}", f"alpha_{m}_MHz"]
        row += [f, pr, xi, al * 1e3]
    for m in range(len(freqs)):
        for n in range(m + 1, len(freqs)):
            chi = kerr.chi_GHz[m][n]
            delta = abs(freqs[m] - freqs[n])
            headers += [f"chi_{m}{n}_MHz", f"g_{m}{n}_MHz"]
            g = circuit.coupling_from_dispersive(abs(chi), delta) * 1e3
            row += [chi * 1e3, g]
    return Table(headers=headers, rows=[row])


_EPR_PARAMS = ScenarioDef(
    kind="epr_params",
    description="Hamiltonian parameters (zero-point fluctuations, Kerr "
                "matrix, coupling) from mode participation ratios",
    schema=Schema("scenario", [
        Param("E_J_GHz", "float", default=-1.0,
              help="Josephson energy; derived from L_J_nH when unset"),
        Param("L_J_nH", "float", default=6.0),
        Param("mode_freqs_GHz", "floats", default=(6.794, 7.577)),
        Param("mode_participations", "floats", default=(0.8, 0.09)),
        Param("fock_dim", "int", default=8),
    ]),
    output_schema=_output_schema("epr_params", []),
    run=_run_epr_params,
)


SCENARIOS: dict[str, ScenarioDef] = {
    d.kind: d for d in (
        _TRANSMON_TABLE, _BOLTZMANN, _CAVITY_MODES, _RABI_JC, _DRIVEN_RABI,
        _PULSE_CALIBRATION, _DISPERSIVE, _ENTROPY_SWEEP, _EPR_PARAMS,
    )
}


def _resolve(config: ScenarioConfig, tol: float | None):
    if config.kind not in SCENARIOS:
        raise ConfigError("scenario.kind",
                          f"unknown kind {config.kind!r}; expected one of "
                          f"{sorted(SCENARIOS)}")
    definition = SCENARIOS[config.kind]
    raw = dict(config.params)
    if tol is not None and "rtol" in definition.schema.params:
        raw["rtol"] = tol
    params = definition.schema.validate(raw)
    output = definition.output_schema.validate(dict(config.output))
    return definition, params, output


def _write_outputs(definition, params, output, table, duration_s,
                   command=None) -> RunResult:
    csv_path = Path(output["csv_path"])
    write_csv(csv_path, table.headers, table.rows)
    svg_path = None
    if output["svg_path"]:
        svg_path = Path(output["svg_path"])
        write_line_plot(svg_path, table.headers, table.rows,
                        title=definition.kind)
    outputs = {"csv": str(csv_path)}
    if svg_path is not None:
        outputs["svg"] = str(svg_path)
    manifest = build_manifest(
        kind=definition.kind,
        scenario_params={k: (list(v) if isinstance(v, tuple) else v)
                         for k, v in params.items()},
        output_params=output,
        version=__version__,
        duration_s=duration_s,
        stats=table.stats,
        outputs=outputs,
        extra=table.results or None,
        command=command,
    )
    mpath = manifest_path_for(csv_path)
    write_manifest(mpath, manifest)
    return RunResult(csv_path=csv_path, manifest_path=mpath,
                     manifest=manifest, svg_path=svg_path)


def run_scenario(config: ScenarioConfig, *, tol: float | None = None,
                 command: dict | None = None) -> RunResult:
    """Validate a config, run its scenario and write CSV/SVG/manifest."""
    definition, params, output = _resolve(config, tol)
    start = time.perf_counter()
    table = definition.run(params, output)
    duration = time.perf_counter() - start
    return _write_outputs(definition, params, output, table, duration,
                          command=command)


def sweep(config: ScenarioConfig, axis: str, values, *, jobs: int = 1,
          tol: float | None = None) -> RunResult:
    """Run one scenario per axis value and aggregate the rows.

    Each value's rows are prefixed with the axis value and suffixed with an
    ``error`` column; a failing point records its error message there while
    the remaining points still run. Points may execute concurrently but the
    output order always matches the input order.
    """
    definition, params, output = _resolve(config, tol)
    axis = axis.removeprefix("scenario.")
    if axis not in definition.schema.params:
        raise ConfigError(f"scenario.{axis}",
                          f"unknown sweep axis for kind {definition.kind}")
    if definition.schema.params[axis].kind not in ("float", "int"):
        raise ConfigError(f"scenario.{axis}", "sweep axis must be numeric")
    values = list(values)
    if not values:
        raise ConfigError(f"scenario.{axis}", "sweep needs at least one value")
    if jobs < 1:
        raise ConfigError("jobs", "must be >= 1")

    axis_is_int = definition.schema.params[axis].kind == "int"
    for v in values:
        if axis_is_int and float(v) != int(float(v)):
            raise ConfigError(f"scenario.{axis}",
                              f"sweep value {v!r} is not an integer")

    def run_point(value):
        pt = dict(params)
        pt[axis] = int(value) if axis_is_int else float(value)
        return definition.run(pt, output)

    start = time.perf_counter()
    outcomes: list = [None] * len(values)
    if jobs == 1:
        for i, v in enumerate(values):
            try:
                outcomes[i] = run_point(v)
            except Exception as exc:
                outcomes[i] = exc
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(run_point, v) for v in values]
            for i, fut in enumerate(futures):
                try:
                    outcomes[i] = fut.result()
                except Exception as exc:
                    outcomes[i] = exc
    duration = time.perf_counter() - start

    point_headers: list[str] = []
    for oc in outcomes:
        if isinstance(oc, Table):
            point_headers = oc.headers
            break
    headers = [axis] + point_headers + ["error"]
    rows = []
    stats = IntegratorStats()
    for value, oc in zip(values, outcomes):
        if isinstance(oc, Table):
            for r in oc.rows:
                rows.append([value] + list(r) + [""])
            if oc.stats is not None:
                stats.steps += oc.stats.steps
                stats.rejections += oc.stats.rejections
        else:
            rows.append([value] + [""] * len(point_headers) + [str(oc)])
    table = Table(headers=headers, rows=rows, stats=stats)
    return _write_outputs(
        definition, params, output, table, duration,
        command={"sweep": {"axis": axis, "values": list(values),
                           "jobs": jobs}},
    )
