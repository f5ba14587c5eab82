"""Physical constants and unit conversions.

Unit conventions used throughout the package:

* energies and frequencies are ordinary frequencies (E/h) in GHz,
* dissipation rates are ordinary frequencies in MHz,
* time is in nanoseconds,
* temperature is in millikelvin,
* dynamics internally uses angular frequencies in rad/ns with hbar = 1.
"""

import math

H_PLANCK = 6.62607015e-34     # J s
HBAR = H_PLANCK / (2.0 * math.pi)
K_BOLTZMANN = 1.380649e-23    # J/K
E_CHARGE = 1.602176634e-19    # C
PHI0 = HBAR / (2.0 * E_CHARGE)  # reduced flux quantum, Wb
C_LIGHT = 2.99792458e8        # m/s

TWO_PI = 2.0 * math.pi


def ghz_to_angular(f_ghz: float) -> float:
    """Ordinary frequency in GHz -> angular frequency in rad/ns."""
    return TWO_PI * f_ghz


def mhz_to_angular(f_mhz: float) -> float:
    """Ordinary frequency in MHz -> angular frequency in rad/ns."""
    return TWO_PI * f_mhz * 1e-3


def thermal_exponent(f_ghz: float, t_mk: float) -> float:
    """Dimensionless h*f/(k_B*T) for f in GHz and T in mK."""
    if f_ghz <= 0.0:
        raise ValueError(f"frequency must be positive, got {f_ghz} GHz")
    if t_mk <= 0.0:
        raise ValueError(f"temperature must be positive, got {t_mk} mK")
    return H_PLANCK * f_ghz * 1e9 / (K_BOLTZMANN * t_mk * 1e-3)
