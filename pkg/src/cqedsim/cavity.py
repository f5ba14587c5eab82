"""Closed-form cavity physics.

Rectangular and quarter-wave mode frequencies, the empirical
temperature-dependent quality factor of an aluminium cavity, conversion
between quality factor and energy decay rate, and coaxial loss estimates.
"""

import math
from dataclasses import dataclass

from .constants import C_LIGHT


@dataclass(frozen=True)
class RectangularCavity:
    """Box cavity with edge lengths in meters."""

    Lx: float
    Ly: float
    Lz: float

    def __post_init__(self):
        for name in ("Lx", "Ly", "Lz"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class QuarterWaveCavity:
    """Coaxial stub resonator; lengths in meters."""

    stub_length: float
    inner_radius: float
    outer_radius: float

    def __post_init__(self):
        if self.stub_length <= 0.0 or self.inner_radius <= 0.0:
            raise ValueError("lengths must be positive")
        if self.outer_radius <= self.inner_radius:
            raise ValueError("outer radius must exceed inner radius")


@dataclass(frozen=True)
class QualityModel:
    """Exponential fit of Q against temperature, referenced to 200 mK.

    Q(T) = Q_ref * amplitude * exp(-T / decay_T_mK) with T in mK.
    """

    Q_ref: float
    amplitude: float = 9.06
    decay_T_mK: float = 105.0

    def __post_init__(self):
        if self.Q_ref <= 0.0 or self.amplitude <= 0.0 or self.decay_T_mK <= 0.0:
            raise ValueError("all QualityModel fields must be positive")


@dataclass(frozen=True)
class CoaxLosses:
    Q_C: float
    Q_d: float
    Q_total: float


def rectangular_mode_frequency(geometry: RectangularCavity,
                               n: tuple[int, int, int]) -> float:
    """Mode frequency in GHz for index triple (n_x, n_y, n_z).

    At least two indices must be nonzero for a propagating box mode.
    """
    nx, ny, nz = (int(v) for v in n)
    if min(nx, ny, nz) < 0:
        raise ValueError(f"mode indices must be non-negative, got {n}")
    if sum(1 for v in (nx, ny, nz) if v != 0) < 2:
        raise ValueError(f"at least two mode indices must be nonzero, got {n}")
    s = ((nx / geometry.Lx) ** 2 + (ny / geometry.Ly) ** 2
         + (nz / geometry.Lz) ** 2)
    return C_LIGHT / 2.0 * math.sqrt(s) / 1e9


def quarter_wave_frequency(stub_length: float) -> float:
    """Rough quarter-wave estimate c/(4L) in GHz."""
    if stub_length <= 0.0:
        raise ValueError("stub length must be positive")
    return C_LIGHT / (4.0 * stub_length) / 1e9


def quality_factor_thermal(t_mk: float, model: QualityModel) -> float:
    """Quality factor at temperature T (mK) from the exponential fit."""
    if t_mk <= 0.0:
        raise ValueError("temperature must be positive")
    return model.Q_ref * model.amplitude * math.exp(-t_mk / model.decay_T_mK)


def kappa_from_quality(f_ghz: float, q: float) -> float:
    """Energy decay rate kappa1 in MHz (ordinary frequency) from Q = f/kappa."""
    if f_ghz <= 0.0 or q <= 0.0:
        raise ValueError("frequency and quality factor must be positive")
    return f_ghz / q * 1e3


def coax_losses(a: float, b: float, f_ghz: float, mu: float, sigma: float,
                tan_delta: float) -> CoaxLosses:
    """Conductor and dielectric quality factors of a coaxial stub.

    Conductor term evaluates 1/Q_C = 2*sqrt(pi*f*mu*sigma)*ln(b/a)/(1/a + 1/b)
    verbatim with f in Hz. The expression is not dimensionless as printed;
    it is exposed for qualitative comparisons only. The dielectric term is
    Q_d = 1/tan(delta).
    """
    if not (b > a > 0.0):
        raise ValueError("need outer radius b > inner radius a > 0")
    if f_ghz <= 0.0 or sigma <= 0.0 or mu <= 0.0 or tan_delta <= 0.0:
        raise ValueError("f, mu, sigma and tan_delta must be positive")
    inv_qc = 2.0 * math.sqrt(math.pi * f_ghz * 1e9 * mu * sigma) \
        * math.log(b / a) / (1.0 / a + 1.0 / b)
    q_c = 1.0 / inv_qc
    q_d = 1.0 / tan_delta
    return CoaxLosses(Q_C=q_c, Q_d=q_d, Q_total=1.0 / (inv_qc + tan_delta))
