"""Finite-temperature bath quantities.

Boltzmann factors, Bose-Einstein occupancy and the split of a bare
dissipation rate into emission/absorption channels. Rates are stored as
ordinary frequencies (MHz) and converted to angular units only inside the
integrator.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .constants import thermal_exponent


@dataclass(frozen=True)
class BathSpec:
    """Bath temperature plus bare dissipation rates (all MHz).

    kappa1/kappa_phi apply to a resonator, Gamma1/Gamma_phi to a qubit.
    """

    T_mK: float
    kappa1_MHz: float = 0.0
    kappa_phi_MHz: float = 0.0
    Gamma1_MHz: float = 0.0
    Gamma_phi_MHz: float = 0.0

    def __post_init__(self):
        if self.T_mK <= 0.0:
            raise ValueError(f"temperature must be positive, got {self.T_mK} mK")
        for name in ("kappa1_MHz", "kappa_phi_MHz", "Gamma1_MHz", "Gamma_phi_MHz"):
            if getattr(self, name) < 0.0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")


@dataclass(frozen=True)
class ThermalRates:
    """Emission/absorption split of a bare rate (all MHz)."""

    kappa_down_MHz: float
    kappa_up_MHz: float
    n_th: float
    kappa2_MHz: float

    def __post_init__(self):
        if not self.kappa_down_MHz >= self.kappa_up_MHz >= 0.0:
            raise ValueError("rates must satisfy kappa_down >= kappa_up >= 0")


class BoltzmannFactors(NamedTuple):
    F: float
    P_ex: float


def boltzmann_excitation(f_ghz: float, t_mk: float) -> BoltzmannFactors:
    """Boltzmann factor F = exp(-hf/kT) and excited-state occupation F/(1+F)."""
    x = thermal_exponent(f_ghz, t_mk)
    f = np.exp(-x)
    return BoltzmannFactors(F=float(f), P_ex=float(f / (1.0 + f)))


def thermal_occupancy(f_ghz: float, t_mk: float) -> float:
    """Bose-Einstein occupancy 1/(exp(hf/kT) - 1)."""
    x = thermal_exponent(f_ghz, t_mk)
    if x > 700.0:  # exp would overflow; the bath is frozen
        return 0.0
    return float(1.0 / np.expm1(x))


def thermal_rates(bath: BathSpec, f_ghz: float, subsystem: str) -> ThermalRates:
    """Split a subsystem's bare decay rate into up/down channels.

    For ``subsystem="resonator"`` uses kappa1/kappa_phi, for ``"qubit"``
    Gamma1/Gamma_phi. kappa_down = (1 + n_th) * rate, kappa_up = n_th * rate
    and kappa2 = rate/2 + rate_phi.
    """
    if subsystem == "resonator":
        base, dephase = bath.kappa1_MHz, bath.kappa_phi_MHz
    elif subsystem == "qubit":
        base, dephase = bath.Gamma1_MHz, bath.Gamma_phi_MHz
    else:
        raise ValueError(f"unknown subsystem {subsystem!r}")
    n_th = thermal_occupancy(f_ghz, bath.T_mK)
    return ThermalRates(
        kappa_down_MHz=(1.0 + n_th) * base,
        kappa_up_MHz=n_th * base,
        n_th=n_th,
        kappa2_MHz=base / 2.0 + dephase,
    )
