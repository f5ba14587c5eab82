"""Acceptance suite.

Each test enforces one exit criterion at its stated tolerance and prints a
single PASS/FAIL line (visible with ``pytest -s`` or ``-rA``).
"""

import math
import time

import numpy as np
import pytest

from cqedsim import analysis, cavity, circuit, thermal
from cqedsim.cli import load_config, main
from cqedsim.constants import mhz_to_angular
from cqedsim.dynamics import (ConstantEnvelope, DrivenQubitSpec,
                              JaynesCummingsSpec, build_collapse_operators,
                              build_hamiltonian, lindblad_evolve,
                              rabi_probability_analytic)
from cqedsim.hilbert import (DensityMatrix, SpaceDescriptor, basis_ket,
                             embed_operator, ladder_operator, pauli_operator,
                             product_density)
from cqedsim.thermal import BathSpec

E_J = 27.31
RATIO = 122.47
E_C = E_J / RATIO


def _verdict(num, description, ok):
    print(f"[criterion {num:>2}] {'PASS' if ok else 'FAIL'} - {description}")
    assert ok, f"criterion {num} failed: {description}"


# --- shared runs (criteria 5-8 and 12 reuse these) -------------------------

def _run_jc(kappa1_mhz, t_mk):
    spec = JaynesCummingsSpec(omega_r_GHz=7.0, omega_q_GHz=7.0, g_GHz=0.2,
                              n_max=15)
    h = build_hamiltonian(spec)
    bath = BathSpec(T_mK=t_mk, kappa1_MHz=kappa1_mhz, Gamma1_MHz=0.01)
    cops = build_collapse_operators(bath, h.space, 7.0, 7.0)
    rho0 = product_density(h.space, (1, 5))
    excited = embed_operator(pauli_operator("plus") @ pauli_operator("minus"),
                             0, h.space)
    number = embed_operator(ladder_operator(15, "number"), 1, h.space)
    times = np.arange(0.0, 100.0 + 0.025, 0.05)
    start = time.perf_counter()
    res = lindblad_evolve(h, rho0, cops, times,
                          {"P_e": excited, "n_cavity": number},
                          store_states=True)
    return res, time.perf_counter() - start


@pytest.fixture(scope="module")
def jc_runs():
    return {
        "a": _run_jc(1e-5, 200.0),
        "b": _run_jc(0.5, 200.0),
        "c": _run_jc(0.5, 1000.0),
    }


@pytest.fixture(scope="module")
def driven_run():
    spec = DrivenQubitSpec(omega_q_GHz=7.0, g_GHz=0.5, omega_d_GHz=7.0,
                           envelope=ConstantEnvelope(1.0), frame="rotating")
    h = build_hamiltonian(spec)
    rho0 = product_density(h.space, (0,))
    excited = pauli_operator("plus") @ pauli_operator("minus")
    times = np.linspace(0.0, 10.0, 501)
    start = time.perf_counter()
    res = lindblad_evolve(h, rho0, [], times, {"P_e": excited},
                          store_states=True)
    return res, time.perf_counter() - start


@pytest.fixture(scope="module")
def damping_run():
    space = SpaceDescriptor((10,))
    h = None
    from cqedsim.hilbert import QuantumOperator
    h = QuantumOperator(space, np.zeros((10, 10)), hermitian=True)
    bath = BathSpec(T_mK=1e-3, kappa1_MHz=0.5)
    cops = build_collapse_operators(bath, space, 7.0, 7.0)
    rho0 = product_density(space, (1,))
    number = ladder_operator(10, "number")
    times = np.linspace(0.0, 5000.0, 201)
    res = lindblad_evolve(h, rho0, cops, times, {"n": number},
                          store_states=True)
    return res


def _peak_to_peak(times, trace, t_lo, t_hi):
    sel = (times >= t_lo) & (times <= t_hi)
    return float(np.max(trace[sel]) - np.min(trace[sel]))


def _decay_time(times, trace, window_ns=5.0):
    initial = _peak_to_peak(times, trace, 0.0, window_ns)
    for start in np.arange(0.0, times[-1] - window_ns, 1.0):
        if _peak_to_peak(times, trace, start, start + window_ns) \
                < initial / math.e:
            return start + window_ns
    return None


# --- criteria ---------------------------------------------------------------

def test_criterion_01_table1():
    start = time.perf_counter()
    got = {}
    for order in (0, 1, 2):
        levels = circuit.transmon_spectrum(E_J, E_C, method="perturbative",
                                           order=order, n_levels=3)
        got[order] = (levels[1], circuit.anharmonicity(levels) * 1e3)
    elapsed = time.perf_counter() - start
    expected_wq = {0: 6.982, 1: 6.759, 2: 6.752}
    expected_alpha = {1: 223.1, 2: 239.1}
    ok = all(abs(got[k][0] - expected_wq[k]) / expected_wq[k] < 0.002
             for k in (0, 1, 2))
    ok &= abs(got[0][1]) < 1.0
    ok &= all(abs(got[k][1] - expected_alpha[k]) / expected_alpha[k] < 0.02
              for k in (1, 2))
    ok &= elapsed < 1.0
    _verdict(1, f"Table-1 spectrum orders 0-2 in {elapsed:.2f}s", ok)


def test_criterion_02_oracle_equivalence():
    start = time.perf_counter()
    worst = 0.0
    for ratio in (50.0, 100.0, 122.47, 200.0):
        e_c = E_J / ratio
        exact = circuit.transmon_spectrum(E_J, e_c, method="exact",
                                          charge_cutoff=40)
        pert = circuit.transmon_spectrum(E_J, e_c, method="perturbative",
                                         order=2)
        worst = max(worst, abs(pert[1] - exact[1]) / exact[1])
    elapsed = time.perf_counter() - start
    ok = worst < 0.005 and elapsed < 5.0
    _verdict(2, f"exact vs order-2 max deviation {worst:.2e} "
                f"in {elapsed:.2f}s", ok)


def test_criterion_03_junction_numbers():
    params = circuit.junction_parameters(I_C=55e-9, C_total=0.0866e-12,
                                         delta0_eV=170e-6)
    ok = abs(params.E_J_GHz - 27.3) <= 0.1
    ok &= abs(params.R_n - 4860.0) <= 50.0
    _verdict(3, f"E_J = {params.E_J_GHz:.3f} GHz, "
                f"R_n = {params.R_n / 1e3:.3f} kOhm", ok)


def test_criterion_04_te101_mode():
    geom = cavity.RectangularCavity(0.036, 0.006, 0.022)
    f = cavity.rectangular_mode_frequency(geom, (1, 0, 1))
    ok = abs(f - 7.99) <= 0.01
    _verdict(4, f"in-plane fundamental at {f:.4f} GHz", ok)


def test_criterion_05_driven_vs_analytic(driven_run):
    res, elapsed = driven_run
    ref = rabi_probability_analytic(500.0, 7.0, 7.0, res.times)
    dev = float(np.max(np.abs(res.traces["P_e"] - ref)))
    ok = dev < 1e-6 and elapsed < 5.0
    _verdict(5, f"rotating-frame drive max deviation {dev:.2e} "
                f"in {elapsed:.2f}s", ok)


def test_criterion_06_damping_oracle(damping_run):
    res = damping_run
    kappa_ang = mhz_to_angular(0.5)
    dev = float(np.max(np.abs(res.traces["n"] - np.exp(-kappa_ang * res.times))))
    ok = dev < 1e-6

    space = SpaceDescriptor((10,))
    from cqedsim.hilbert import QuantumOperator
    h = QuantumOperator(space, np.zeros((10, 10)), hermitian=True)
    bath = BathSpec(T_mK=200.0, kappa1_MHz=0.5)
    cops = build_collapse_operators(bath, space, 7.0, 7.0)
    rho0 = product_density(space, (1,))
    number = ladder_operator(10, "number")
    res_th = lindblad_evolve(h, rho0, cops, np.linspace(0.0, 5000.0, 51),
                             {"n": number})
    n_final = float(res_th.traces["n"][-1])
    ok &= abs(n_final - 0.229) < 1e-3
    _verdict(6, f"decay deviation {dev:.2e}; steady state {n_final:.4f}", ok)


def test_criterion_07_rabi_envelopes(jc_runs):
    (res_a, el_a) = jc_runs["a"]
    (res_b, el_b) = jc_runs["b"]
    (res_c, el_c) = jc_runs["c"]
    times = res_a.times

    initial = _peak_to_peak(times, res_a.traces["P_e"], 0.0, 5.0)
    final = _peak_to_peak(times, res_a.traces["P_e"], 95.0, 100.0)
    ok = final > 0.9 * initial

    t_b = _decay_time(times, res_b.traces["P_e"])
    ok &= t_b is not None and t_b <= 100.0
    t_c = _decay_time(times, res_c.traces["P_e"])
    ok &= t_c is not None and t_c <= 40.0
    ok &= max(el_a, el_b, el_c) < 30.0
    _verdict(7, f"envelope retention {final / initial:.3f}; decay at "
                f"{t_b:.0f} ns (200 mK) and {t_c:.0f} ns (1 K); slowest run "
                f"{max(el_a, el_b, el_c):.1f}s", ok)


def test_criterion_08_vacuum_rabi_frequency(jc_runs):
    res, _ = jc_runs["a"]
    f = analysis.dominant_frequency(res.times, res.traces["P_e"])
    expected = 2.0 * 200.0 * math.sqrt(6.0)
    ok = abs(f - expected) / expected < 0.01
    _verdict(8, f"dominant frequency {f:.1f} MHz vs 2g sqrt(6) = "
                f"{expected:.1f} MHz", ok)


def _resolved_peaks(grid, values):
    idx = [i for i in range(1, len(values) - 1)
           if values[i] > values[i - 1] and values[i] > values[i + 1]
           and values[i] > 0.05]
    return idx


def _fwhm_around(grid, values, peak_idx):
    half = values[peak_idx] / 2.0
    lo = peak_idx
    while lo > 0 and values[lo] > half:
        lo -= 1
    hi = peak_idx
    while hi < len(values) - 1 and values[hi] > half:
        hi += 1
    return grid[hi] - grid[lo]


def test_criterion_09_dispersive_spectra():
    df = 0.00002  # 0.02 MHz grid
    grid = np.arange(6.97, 7.03, df)
    ok = True
    details = []
    for kappa2, t_mk in ((0.1, 200.0), (0.5, 1000.0), (1.0, 1000.0)):
        p_e = thermal.boltzmann_excitation(7.0, t_mk).P_ex
        spec = analysis.transmission_spectrum(7.0, 6.0, kappa2, p_e, grid)
        peaks = _resolved_peaks(grid, spec.values)
        ok &= len(peaks) == 2
        if len(peaks) == 2:
            sep = (grid[peaks[1]] - grid[peaks[0]]) * 1e3
            ok &= abs(sep - 12.0) <= df * 1e3 + 1e-9
            for idx in peaks:
                width = _fwhm_around(grid, spec.values, idx) * 1e3
                ok &= abs(width - kappa2) / kappa2 < 0.10
            details.append(f"k2={kappa2}: sep {sep:.3f} MHz")
    _verdict(9, "; ".join(details), ok)


def test_criterion_10_thermal_identities():
    ok = True
    for f_ghz in np.linspace(1.0, 12.0, 10):
        for t_mk in np.linspace(20.0, 1500.0, 10):
            bath = BathSpec(T_mK=t_mk, kappa1_MHz=0.5)
            rates = thermal.thermal_rates(bath, f_ghz, "resonator")
            boltz = thermal.boltzmann_excitation(f_ghz, t_mk)
            ratio = rates.kappa_up_MHz / rates.kappa_down_MHz
            ok &= abs(ratio - boltz.F) <= 1e-12 * boltz.F
            n_th = rates.n_th
            identity = n_th / (1.0 + 2.0 * n_th)
            ok &= abs(boltz.P_ex - identity) <= 1e-12 * identity
    _verdict(10, "detailed balance and occupation identity on a "
                 "100-point grid", ok)


def test_criterion_11_entropy_suite():
    rng = np.random.default_rng(123)
    ok = True
    space4 = SpaceDescriptor((4,))
    for _ in range(10):
        ket = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        ket /= np.linalg.norm(ket)
        rho = DensityMatrix(space4, np.outer(ket, ket.conj()))
        ok &= analysis.von_neumann_entropy(rho) < 1e-9

    bell = (np.kron(basis_ket(2, 0), basis_ket(2, 0))
            + np.kron(basis_ket(2, 1), basis_ket(2, 1))) / math.sqrt(2.0)
    rho_bell = DensityMatrix(SpaceDescriptor((2, 2)),
                             np.outer(bell, bell.conj()))
    ok &= abs(analysis.entanglement_entropy(rho_bell, {0})
              - math.log(2.0)) < 1e-9

    m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    rho = m @ m.conj().T
    rho /= np.trace(rho)
    s_ref = analysis.von_neumann_entropy(DensityMatrix(space4, rho))
    for _ in range(50):
        q, r = np.linalg.qr(rng.standard_normal((4, 4))
                            + 1j * rng.standard_normal((4, 4)))
        u = q * (np.diag(r) / np.abs(np.diag(r)))
        rotated = DensityMatrix(space4, u @ rho @ u.conj().T,
                                trace_tol=1e-8, herm_tol=1e-8)
        ok &= abs(analysis.von_neumann_entropy(rotated) - s_ref) < 1e-9
    _verdict(11, "pure states, Bell reduction and 50 unitary rotations", ok)


def test_criterion_12_trace_positivity(jc_runs, driven_run, damping_run):
    runs = [jc_runs[k][0] for k in ("a", "b", "c")]
    runs.append(driven_run[0])
    runs.append(damping_run)
    worst_trace = 0.0
    worst_eig = 0.0
    for res in runs:
        for state in res.states:
            worst_trace = max(worst_trace,
                              abs(float(np.trace(state).real) - 1.0))
            worst_eig = min(worst_eig,
                            float(np.min(np.linalg.eigvalsh(state))))
    ok = worst_trace < 1e-6 and worst_eig > -1e-6
    _verdict(12, f"max |Tr-1| = {worst_trace:.2e}, "
                 f"min eigenvalue = {worst_eig:.2e}", ok)


# --- criterion 13: CSV determinism over the acceptance configs -------------

_RABI_TEMPLATE = """
[scenario]
kind = rabi_jc
omega_r_GHz = 7.0
omega_q_GHz = 7.0
g_MHz = 200
n_max = 15
n_photons = 5
kappa1_MHz = {kappa}
Gamma1_MHz = 0.01
T_mK = {t_mk}

[output]
csv_path = {csv}
t_max_ns = 100
dt_ns = 0.05
"""

_DISPERSIVE_TEMPLATE = """
[scenario]
kind = dispersive_spectrum
omega_r_GHz = 7.0
omega_q_GHz = 7.0
chi_MHz = 6
kappa2_MHz = {kappa2}
T_mK = {t_mk}

[output]
csv_path = {csv}
df_MHz = 0.02
"""

_SIMPLE_CONFIGS = {
    "transmon_table": """
[scenario]
kind = transmon_table
E_J_GHz = 27.31
E_J_over_E_C = 122.47
include_exact = true

[output]
csv_path = {csv}
""",
    "cavity_modes": """
[scenario]
kind = cavity_modes
geometry = rectangular
Lx_mm = 36
Ly_mm = 6
Lz_mm = 22

[output]
csv_path = {csv}
""",
    "boltzmann_curve": """
[scenario]
kind = boltzmann_curve
f_GHz = 7.0

[output]
csv_path = {csv}
""",
    "driven_rabi": """
[scenario]
kind = driven_rabi
omega_q_GHz = 7.0
omega_d_GHz = 7.0
g_MHz = 500
frame = rotating

[output]
csv_path = {csv}
t_max_ns = 10
dt_ns = 0.02
""",
    "pulse_calibration": """
[scenario]
kind = pulse_calibration
g_MHz = 50
omega_e_MHz = 10

[output]
csv_path = {csv}
""",
    "entropy_sweep": """
[scenario]
kind = entropy_sweep
g_MHz = 306

[output]
csv_path = {csv}
t_max_ns = 50
dt_ns = 0.05
""",
    "epr_params": """
[scenario]
kind = epr_params
E_J_GHz = 27.31
mode_freqs_GHz = 6.794, 7.577
mode_participations = 0.8, 0.09

[output]
csv_path = {csv}
""",
}


def _all_acceptance_configs(tmp_path):
    configs = []
    for name, body in _SIMPLE_CONFIGS.items():
        configs.append((name, body))
    for label, kappa, t_mk in (("a", "1e-5", "200"), ("b", "0.5", "200"),
                               ("c", "0.5", "1000")):
        body = _RABI_TEMPLATE.replace("{kappa}", kappa) \
                             .replace("{t_mk}", t_mk)
        configs.append((f"rabi_{label}", body))
    for kappa2, t_mk in (("0.1", "200"), ("0.5", "1000"), ("1", "1000")):
        body = _DISPERSIVE_TEMPLATE.replace("{kappa2}", kappa2) \
                                   .replace("{t_mk}", t_mk)
        configs.append((f"dispersive_{kappa2}", body))
    return configs


def test_criterion_13_csv_determinism(tmp_path):
    mismatches = []
    for name, body in _all_acceptance_configs(tmp_path):
        blobs = []
        for attempt in ("x", "y"):
            csv = tmp_path / f"{name}_{attempt}.csv"
            cfg = tmp_path / f"{name}_{attempt}.ini"
            cfg.write_text(body.replace("{csv}", str(csv)), encoding="utf-8")
            assert main(["run", str(cfg)]) == 0, f"{name} run failed"
            blobs.append(csv.read_bytes())
        if blobs[0] != blobs[1]:
            mismatches.append(name)
    ok = not mismatches
    _verdict(13, "byte-identical CSVs across consecutive runs "
                 f"({len(_all_acceptance_configs(tmp_path))} scenarios)"
                 + (f"; mismatches: {mismatches}" if mismatches else ""), ok)
