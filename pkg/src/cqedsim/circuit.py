"""Circuit quantization.

LC oscillator energies, Josephson junction parameters, the transmon
spectrum (perturbative orders and an exact charge-basis diagonalization
that serves as its oracle), zero-point fluctuations from participation
ratios, and self/cross-Kerr extraction from the quartic junction
nonlinearity.

Everything in this module works in ordinary-frequency units: energies are
E/h in GHz.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .constants import E_CHARGE, H_PLANCK, PHI0
from .errors import ConvergenceError

EXACT_DOUBLING_RTOL = 1e-9
KERR_CONVERGENCE_RTOL = 1e-2


@dataclass(frozen=True)
class LcParams:
    """Quantized LC oscillator quantities.

    C in farad, L in henry; E_C, E_L and omega_r in GHz; xi is the
    dimensionless zero-point parameter sqrt(2 E_C / E_L).
    """

    C: float
    L: float
    E_C_GHz: float
    E_L_GHz: float
    omega_r_GHz: float
    xi: float

    def __post_init__(self):
        if self.C <= 0.0 or self.L <= 0.0:
            raise ValueError("C and L must be positive")
        ref = np.sqrt(8.0 * self.E_C_GHz * self.E_L_GHz)
        if abs(self.omega_r_GHz - ref) > 1e-12 * ref:
            raise ValueError("omega_r inconsistent with sqrt(8 E_C E_L)")


@dataclass(frozen=True)
class TransmonParams:
    """Junction and shunt parameters of a transmon."""

    E_J_GHz: float
    E_C_GHz: float
    L_J: float       # junction inductance at phi = 0, henry
    I_C: float       # critical current, ampere
    C_total: float   # farad
    R_n: float       # normal-state resistance, ohm

    def __post_init__(self):
        ref = PHI0 / self.I_C
        if abs(self.L_J - ref) > 1e-12 * ref:
            raise ValueError("L_J inconsistent with Phi0 / I_C")
        if self.E_J_GHz / self.E_C_GHz <= 1.0:
            warnings.warn(
                f"E_J/E_C = {self.E_J_GHz / self.E_C_GHz:.3g} <= 1; "
                "perturbative spectrum methods are unreliable here",
                stacklevel=2,
            )


@dataclass(frozen=True)
class EprMode:
    """One linear mode: frequency plus participation ratio per junction."""

    omega_GHz: float
    participations: tuple[float, ...]

    def __post_init__(self):
        if self.omega_GHz <= 0.0:
            raise ValueError("mode frequency must be positive")
        for p in self.participations:
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"participation ratio {p} outside [0, 1]")


@dataclass(frozen=True)
class EprInput:
    """Mode table plus Josephson energy per junction (GHz)."""

    modes: tuple[EprMode, ...]
    E_J_GHz: tuple[float, ...]

    def __post_init__(self):
        for mode in self.modes:
            if len(mode.participations) != len(self.E_J_GHz):
                raise ValueError(
                    "each mode needs one participation ratio per junction"
                )

    def zero_point(self, junction: int = 0) -> list[float]:
        """Zero-point fluctuation parameter xi of every mode for one junction."""
        return [
            epr_zero_point(m.participations[junction], m.omega_GHz,
                           self.E_J_GHz[junction])
            for m in self.modes
        ]


def lc_quantize(C: float, L: float) -> LcParams:
    """Charging/inductive energies and mode frequency of an LC circuit.

    E_C = e^2/(2C)/h and E_L = Phi0^2/L/h in GHz; the harmonic levels are
    omega_r (n + 1/2) with omega_r = sqrt(8 E_C E_L).
    """
    if C <= 0.0 or L <= 0.0:
        raise ValueError("C and L must be positive")
    e_c = E_CHARGE ** 2 / (2.0 * C) / H_PLANCK / 1e9
    e_l = PHI0 ** 2 / L / H_PLANCK / 1e9
    return LcParams(
        C=C, L=L, E_C_GHz=e_c, E_L_GHz=e_l,
        omega_r_GHz=float(np.sqrt(8.0 * e_c * e_l)),
        xi=float(np.sqrt(2.0 * e_c / e_l)),
    )


def junction_parameters(I_C: float, C_total: float,
                        delta0_eV: float = 170e-6) -> TransmonParams:
    """Transmon parameters from critical current and shunt capacitance.

    E_J = Phi0 I_C / h, L_J = Phi0 / I_C, E_C = e^2/(2C)/h and the
    normal-state resistance R_n = pi Delta(0) / (2 e I_C) for a
    superconducting gap Delta(0) given in eV.
    """
    if I_C <= 0.0 or C_total <= 0.0 or delta0_eV <= 0.0:
        raise ValueError("I_C, C_total and delta0 must be positive")
    delta_j = delta0_eV * E_CHARGE
    return TransmonParams(
        E_J_GHz=PHI0 * I_C / H_PLANCK / 1e9,
        E_C_GHz=E_CHARGE ** 2 / (2.0 * C_total) / H_PLANCK / 1e9,
        L_J=PHI0 / I_C,
        I_C=I_C,
        C_total=C_total,
        R_n=np.pi * delta_j / (2.0 * E_CHARGE * I_C),
    )


def _ladder(dim: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1.0, dim)), 1)


def _perturbative_levels(e_j: float, e_c: float, order: int,
                         n_levels: int) -> np.ndarray:
    # Rayleigh-Schrodinger perturbation theory around the harmonic part.
    # Diagonalizing the quartic-truncated Hamiltonian instead is unusable:
    # the inverted quartic potential is unbounded below, so its truncated
    # spectrum depends on the basis size.
    nfock = max(30, n_levels + 12)
    x = _ladder(nfock)
    x = x + x.T
    omega = np.sqrt(8.0 * e_c * e_j)
    xi = np.sqrt(2.0 * e_c / e_j)
    e0 = omega * (np.arange(nfock) + 0.5)
    levels = e0.copy()
    if order >= 1:
        v4 = -e_j / 24.0 * xi ** 2 * np.linalg.matrix_power(x, 4)
        levels = levels + np.diag(v4)
    if order >= 2:
        v6 = e_j / 720.0 * xi ** 3 * np.linalg.matrix_power(x, 6)
        shift = np.zeros(nfock)
        for n in range(n_levels):
            num = np.abs(v4[:, n]) ** 2
            den = e0[n] - e0
            den[n] = np.inf
            shift[n] = np.sum(num / den)
        levels = levels + shift + np.diag(v6)
    levels = levels - levels[0]
    return levels[:n_levels]


def _exact_levels(e_j: float, e_c: float, cutoff: int,
                  n_levels: int) -> np.ndarray:
    charges = np.arange(-cutoff, cutoff + 1, dtype=float)
    h = np.diag(4.0 * e_c * charges ** 2)
    off = np.full(len(charges) - 1, -e_j / 2.0)
    h += np.diag(off, 1) + np.diag(off, -1)
    evals = np.linalg.eigvalsh(h)
    return evals[:n_levels] - evals[0]


def transmon_spectrum(E_J_GHz: float, E_C_GHz: float, *,
                      method: str = "perturbative", order: int = 2,
                      charge_cutoff: int = 40,
                      n_levels: int = 3) -> np.ndarray:
    """Transmon level energies relative to the ground state, in GHz.

    Parameters
    ----------
    method : str
        ``"perturbative"`` treats the cosine expansion terms through
        phi^(2*order+2) by numerical perturbation theory around the
        harmonic part (order 0 = harmonic, 1 adds the quartic term,
        2 adds the sextic term and the second-order quartic correction).
        ``"exact"`` diagonalizes the charge-basis matrix
        H[n, n] = 4 E_C n^2, H[n, n+-1] = -E_J/2 on n in
        [-charge_cutoff, charge_cutoff] with zero offset charge.

    Raises
    ------
    ConvergenceError
        If the exact spectrum still changes when the charge cutoff is
        doubled.
    """
    if E_J_GHz <= 0.0 or E_C_GHz <= 0.0:
        raise ValueError("E_J and E_C must be positive")
    if n_levels < 2:
        raise ValueError("need at least 2 levels")
    if method == "perturbative":
        if order not in (0, 1, 2):
            raise ValueError(f"perturbative order must be 0, 1 or 2, got {order}")
        if E_J_GHz / E_C_GHz <= 1.0:
            warnings.warn(
                f"E_J/E_C = {E_J_GHz / E_C_GHz:.3g} <= 1; perturbative "
                "levels are unreliable outside the E_J >> E_C regime",
                stacklevel=2,
            )
        return _perturbative_levels(E_J_GHz, E_C_GHz, order, n_levels)
    if method == "exact":
        if charge_cutoff < 10:
            raise ValueError("charge_cutoff must be >= 10")
        if n_levels > 2 * charge_cutoff + 1:
            raise ValueError("n_levels exceeds the charge-basis dimension")
        levels = _exact_levels(E_J_GHz, E_C_GHz, charge_cutoff, n_levels)
        check = _exact_levels(E_J_GHz, E_C_GHz, 2 * charge_cutoff, n_levels)
        scale = np.maximum(np.abs(check), 1e-30)
        rel = np.max(np.abs(levels[1:] - check[1:]) / scale[1:])
        if rel > EXACT_DOUBLING_RTOL:
            raise ConvergenceError(
                f"charge cutoff {charge_cutoff} not converged: levels move "
                f"by {rel:.2e} (relative) when the cutoff is doubled"
            )
        return levels
    raise ValueError(f"unknown method {method!r}")


def anharmonicity(levels: Sequence[float]) -> float:
    """(E1 - E0) - (E2 - E1) from a level list, in the input's units."""
    if len(levels) < 3:
        raise ValueError("need at least 3 levels")
    e0, e1, e2 = levels[0], levels[1], levels[2]
    return (e1 - e0) - (e2 - e1)


def epr_zero_point(p_mJ: float, omega_m_GHz: float, E_J_GHz: float) -> float:
    """Zero-point fluctuation parameter xi of a mode across a junction.

    xi = p * omega_m / (2 E_J); hbar is absorbed by the E/h convention.
    """
    if not 0.0 <= p_mJ <= 1.0:
        raise ValueError(f"participation ratio {p_mJ} outside [0, 1]")
    if omega_m_GHz <= 0.0 or E_J_GHz <= 0.0:
        raise ValueError("omega_m and E_J must be positive")
    return p_mJ * omega_m_GHz / (2.0 * E_J_GHz)


@dataclass(frozen=True)
class KerrResult:
    """Self-Kerr per mode and symmetric cross-Kerr matrix, both GHz."""

    alpha_GHz: tuple[float, ...]
    chi_GHz: tuple[tuple[float, ...], ...]


def _kerr_diagonalize(xis, omegas, e_j, fock_dim):
    m_modes = len(xis)
    eye = np.eye(fock_dim)
    lower = _ladder(fock_dim)
    dim = fock_dim ** m_modes
    h = np.zeros((dim, dim))
    phi = np.zeros((dim, dim))
    for m in range(m_modes):
        factors = [eye] * m_modes
        factors[m] = lower
        a = factors[0]
        for f in factors[1:]:
            a = np.kron(a, f)
        h += omegas[m] * (a.T @ a)
        phi += np.sqrt(xis[m]) * (a + a.T)
    h -= e_j / 24.0 * np.linalg.matrix_power(phi, 4)
    evals, evecs = np.linalg.eigh(h)

    def energy(label):
        idx = 0
        for occ in label:
            idx = idx * fock_dim + occ
        # dressed state with maximum overlap; argmax ties resolve to the
        # lowest energy because eigh sorts ascending
        j = int(np.argmax(np.abs(evecs[idx, :])))
        return evals[j]

    e_vac = energy((0,) * m_modes)
    alphas = []
    for m in range(m_modes):
        one = [0] * m_modes
        two = [0] * m_modes
        one[m], two[m] = 1, 2
        e1 = energy(tuple(one)) - e_vac
        e2 = energy(tuple(two)) - e_vac
        alphas.append(2.0 * e1 - e2)
    chi = np.zeros((m_modes, m_modes))
    for m in range(m_modes):
        for n in range(m + 1, m_modes):
            lab = [0] * m_modes
            lab[m], lab[n] = 1, 1
            one_m = [0] * m_modes
            one_m[m] = 1
            one_n = [0] * m_modes
            one_n[n] = 1
            val = (energy(tuple(one_m)) - e_vac) \
                + (energy(tuple(one_n)) - e_vac) \
                - (energy(tuple(lab)) - e_vac)
            chi[m, n] = chi[n, m] = val
    return np.array(alphas), chi


def kerr_matrix(xi: Sequence[float], omega_GHz: Sequence[float],
                E_J_GHz: float, fock_dim: int) -> KerrResult:
    """Self- and cross-Kerr coefficients of the quartic junction term.

    Builds H = sum_m omega_m a_m^dag a_m - (E_J/4!) (sum_m sqrt(xi_m)
    (a_m + a_m^dag))^4 on the truncated multimode space, diagonalizes,
    and reads alpha_m and chi_mn off the dressed eigenvalues labeled by
    maximum overlap with the bare Fock products.

    Raises
    ------
    ConvergenceError
        If any coefficient moves by more than 1% when the per-mode
        truncation is increased by two levels.
    """
    xis = [float(v) for v in xi]
    omegas = [float(v) for v in omega_GHz]
    if len(xis) != len(omegas):
        raise ValueError("xi and omega lists must have the same length")
    if not xis:
        raise ValueError("need at least one mode")
    for v in xis:
        if v < 0.0:
            raise ValueError("xi values must be >= 0")
    for v in omegas:
        if v <= 0.0:
            raise ValueError("mode frequencies must be positive")
    if fock_dim < 4:
        raise ValueError("fock_dim must be >= 4")
    alpha, chi = _kerr_diagonalize(xis, omegas, E_J_GHz, fock_dim)
    alpha_ref, chi_ref = _kerr_diagonalize(xis, omegas, E_J_GHz, fock_dim + 2)
    for got, ref in ((alpha, alpha_ref), (chi, chi_ref)):
        scale = np.maximum(np.maximum(np.abs(got), np.abs(ref)), 1e-12)
        drift = np.max(np.abs(got - ref) / scale)
        if drift > KERR_CONVERGENCE_RTOL:
            raise ConvergenceError(
                f"fock_dim {fock_dim} not converged: Kerr coefficients move "
                f"by {drift:.1%} when the truncation grows by 2"
            )
    return KerrResult(
        alpha_GHz=tuple(float(v) for v in alpha),
        chi_GHz=tuple(tuple(float(v) for v in row) for row in chi),
    )


def coupling_from_dispersive(chi_GHz: float, delta_GHz: float) -> float:
    """Coupling g = sqrt(chi * Delta) in GHz from the dispersive shift."""
    product = chi_GHz * delta_GHz
    if product < 0.0:
        raise ValueError("chi and Delta must have the same sign")
    return float(np.sqrt(product))
