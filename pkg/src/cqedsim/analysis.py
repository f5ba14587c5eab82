"""Post-processing: entropies, dispersive transmission lines, trace spectra."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hilbert import DensityMatrix, partial_trace

EIGENVALUE_FLOOR = 1e-12


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """-Tr(rho ln rho) in nats; eigenvalues below 1e-12 are dropped."""
    evals = np.linalg.eigvalsh(rho.matrix)
    evals = evals[evals > EIGENVALUE_FLOOR]
    return float(-np.sum(evals * np.log(evals)))


def entanglement_entropy(rho: DensityMatrix, keep) -> float:
    """Entropy of the reduced state over the kept slots, in nats."""
    return von_neumann_entropy(partial_trace(rho, keep))


@dataclass(frozen=True)
class Spectrum:
    """Transmission amplitudes on a frequency grid, normalized to max 1."""

    freqs_GHz: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        freqs = np.asarray(self.freqs_GHz, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if freqs.shape != values.shape or freqs.ndim != 1:
            raise ValueError("freqs and values must be matching 1-D arrays")
        if len(freqs) > 1 and np.any(np.diff(freqs) <= 0.0):
            raise ValueError("frequencies must be strictly increasing")
        if np.any(values < 0.0) or np.any(values > 1.0 + 1e-12):
            raise ValueError("values must lie in [0, 1]")
        freqs.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "freqs_GHz", freqs)
        object.__setattr__(self, "values", values)


def transmission_spectrum(omega_r_GHz: float, chi_MHz: float,
                          kappa2_MHz: float, P_e: float,
                          grid_GHz) -> Spectrum:
    """Dispersive-readout line shape of a cavity pulled by a qubit.

    Two Lorentzians of half-width kappa2/2: the qubit-ground line at
    omega_r - chi with weight 1 - P_e and the excited line at
    omega_r + chi with weight P_e, summed and normalized to a unit peak.
    """
    if kappa2_MHz <= 0.0:
        raise ValueError("kappa2 must be positive")
    if not 0.0 <= P_e <= 1.0:
        raise ValueError("P_e must lie in [0, 1]")
    grid = np.asarray(grid_GHz, dtype=float)
    if grid.size == 0:
        raise ValueError("frequency grid must not be empty")
    chi = chi_MHz * 1e-3
    hw = kappa2_MHz / 2.0 * 1e-3

    def lorentzian(center):
        return hw ** 2 / ((grid - center) ** 2 + hw ** 2)

    total = (1.0 - P_e) * lorentzian(omega_r_GHz - chi) \
        + P_e * lorentzian(omega_r_GHz + chi)
    peak = float(np.max(total))
    if peak > 0.0:
        total = total / peak
    return Spectrum(freqs_GHz=grid, values=total)


def dominant_frequency(times_ns, trace) -> float:
    """Strongest non-DC frequency of a uniformly sampled trace, in MHz.

    The discrete-Fourier peak is refined by quadratic interpolation of the
    neighboring bin magnitudes. A constant trace returns 0.
    """
    t = np.asarray(times_ns, dtype=float)
    x = np.asarray(trace, dtype=float)
    if t.shape != x.shape or t.ndim != 1:
        raise ValueError("times and trace must be matching 1-D arrays")
    if len(t) < 16:
        raise ValueError("need at least 16 samples")
    dt = np.diff(t)
    if np.max(np.abs(dt - dt[0])) > 1e-9 * abs(dt[0]):
        raise ValueError("time grid must be uniform")

    mags = np.abs(np.fft.rfft(x - np.mean(x)))
    if np.max(mags[1:]) <= 1e-12 * max(1.0, float(np.max(np.abs(x)))):
        return 0.0
    k = int(np.argmax(mags[1:]) + 1)
    delta = 0.0
    if 1 <= k < len(mags) - 1:
        lo, mid, hi = mags[k - 1], mags[k], mags[k + 1]
        denom = lo - 2.0 * mid + hi
        if denom != 0.0:
            delta = 0.5 * (lo - hi) / denom
    f_ghz = (k + delta) / (len(x) * float(dt[0]))
    return float(f_ghz * 1e3)
