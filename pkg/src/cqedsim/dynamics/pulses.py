"""Drive envelopes, pulse-area calibration and the analytic Rabi formula."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..constants import mhz_to_angular, ghz_to_angular
from ..errors import UnreachableAngleError

_BISECT_ITERS = 200


@dataclass(frozen=True)
class ConstantEnvelope:
    """S(t) = amplitude."""

    amplitude: float = 1.0

    def value(self, t_ns):
        return self.amplitude * np.ones_like(np.asarray(t_ns, dtype=float))

    def integral(self, t_ns: float) -> float:
        return self.amplitude * t_ns


@dataclass(frozen=True)
class SineEnvelope:
    """S(t) = sin(omega_e t) with omega_e an ordinary frequency in MHz."""

    omega_e_MHz: float

    def __post_init__(self):
        if self.omega_e_MHz <= 0.0:
            raise ValueError("envelope frequency must be positive")

    @property
    def omega_angular(self) -> float:
        return mhz_to_angular(self.omega_e_MHz)

    def value(self, t_ns):
        return np.sin(self.omega_angular * np.asarray(t_ns, dtype=float))

    def integral(self, t_ns: float) -> float:
        w = self.omega_angular
        return (1.0 - math.cos(w * t_ns)) / w


@dataclass(frozen=True)
class TableEnvelope:
    """Piecewise-linear samples (t_ns, value); zero outside the table."""

    times_ns: tuple[float, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        t = np.asarray(self.times_ns, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if len(t) != len(v) or len(t) < 2:
            raise ValueError("need matching time/value samples (at least 2)")
        if np.any(np.diff(t) <= 0.0):
            raise ValueError("sample times must be strictly increasing")
        if not np.all(np.isfinite(v)):
            raise ValueError("sample values must be finite")
        object.__setattr__(self, "times_ns", tuple(float(x) for x in t))
        object.__setattr__(self, "values", tuple(float(x) for x in v))
        cum = np.concatenate(
            ([0.0], np.cumsum(np.diff(t) * (v[:-1] + v[1:]) / 2.0)))
        object.__setattr__(self, "_cum", cum)
        object.__setattr__(self, "_t", t)
        object.__setattr__(self, "_v", v)

    def value(self, t_ns):
        return np.interp(np.asarray(t_ns, dtype=float), self._t, self._v,
                         left=0.0, right=0.0)

    def integral(self, t_ns: float) -> float:
        # exact integral of the piecewise-linear interpolant
        t, v, cum = self._t, self._v, self._cum
        if t_ns <= t[0]:
            return 0.0
        if t_ns >= t[-1]:
            return float(cum[-1])
        i = int(np.searchsorted(t, t_ns) - 1)
        vt = v[i] + (v[i + 1] - v[i]) * (t_ns - t[i]) / (t[i + 1] - t[i])
        return float(cum[i] + (t_ns - t[i]) * (v[i] + vt) / 2.0)


Envelope = Union[ConstantEnvelope, SineEnvelope, TableEnvelope]


def pulse_angle(envelope: Envelope, g_MHz: float, t_ns: float) -> float:
    """Accumulated rotation angle Theta(t) = -g * integral of S, in radians.

    Closed forms are used for the constant and sine envelopes; the table
    envelope integrates its piecewise-linear interpolant exactly.
    """
    if t_ns < 0.0:
        raise ValueError("time must be >= 0")
    return -mhz_to_angular(g_MHz) * envelope.integral(t_ns)


def _bisect_angle(envelope, g_MHz, level, lo, hi):
    # Theta is monotone on [lo, hi]; solve Theta(t) = level
    flo = pulse_angle(envelope, g_MHz, lo) - level
    for _ in range(_BISECT_ITERS):
        mid = 0.5 * (lo + hi)
        fmid = pulse_angle(envelope, g_MHz, mid) - level
        if fmid == 0.0 or (hi - lo) < 1e-15 * max(1.0, hi):
            return mid
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _segment_boundaries(envelope: Envelope, g_MHz: float):
    # boundaries of the monotone segments of Theta = sign changes of S
    if isinstance(envelope, SineEnvelope):
        # |Theta| peaks at the half period and returns to zero at the full
        # period, so the first half period reaches every attainable angle
        half = math.pi / envelope.omega_angular
        return [0.0, half]
    if isinstance(envelope, TableEnvelope):
        # Theta is monotone wherever S keeps one sign, so only the zero
        # crossings and zero-valued nodes of the interpolant matter
        pts = [0.0]
        t = np.asarray(envelope.times_ns)
        v = np.asarray(envelope.values)
        for i in range(len(t) - 1):
            if v[i] == 0.0:
                pts.append(float(t[i]))
            elif v[i] * v[i + 1] < 0.0:  # interpolated zero crossing
                tz = t[i] + v[i] * (t[i + 1] - t[i]) / (v[i] - v[i + 1])
                pts.append(float(tz))
        pts.append(float(t[-1]))
        return sorted(set(p for p in pts if p >= 0.0))
    raise TypeError(f"unsupported envelope type {type(envelope).__name__}")


def duration_for_angle(envelope: Envelope, g_MHz: float,
                       target_rad: float) -> float:
    """Smallest t >= 0 with |Theta(t)| = target, in ns.

    Found by bracketing the target on the monotone segments of Theta and
    bisecting; the constant envelope inverts exactly.

    Raises
    ------
    UnreachableAngleError
        If the envelope can never accumulate the requested angle.
    """
    if target_rad <= 0.0:
        raise ValueError("target angle must be positive")
    if g_MHz <= 0.0:
        raise ValueError("coupling must be positive")
    g_ang = mhz_to_angular(g_MHz)
    if isinstance(envelope, ConstantEnvelope):
        if envelope.amplitude == 0.0:
            raise UnreachableAngleError(
                f"zero envelope never reaches {target_rad:g} rad")
        return target_rad / (g_ang * abs(envelope.amplitude))

    boundaries = _segment_boundaries(envelope, g_MHz)
    rel = 1e-12
    for lo, hi in zip(boundaries[:-1], boundaries[1:]):
        th_lo = pulse_angle(envelope, g_MHz, lo)
        th_hi = pulse_angle(envelope, g_MHz, hi)
        for level in (target_rad, -target_rad):
            if min(th_lo, th_hi) - rel <= level <= max(th_lo, th_hi) + rel:
                return _bisect_angle(envelope, g_MHz, level, lo, hi)
    reach = max(abs(pulse_angle(envelope, g_MHz, b)) for b in boundaries)
    raise UnreachableAngleError(
        f"target {target_rad:g} rad exceeds the reachable angle {reach:g} rad"
    )


def rabi_probability_analytic(g_MHz: float, omega_q_GHz: float,
                              omega_d_GHz: float, t_ns):
    """Excited-state probability of a driven qubit, closed form.

    P_e(t) = g^2/Omega_R^2 sin^2(Omega_R t / 2) with
    Omega_R = sqrt(g^2 + (omega_q - omega_d)^2), everything converted to
    angular units internally.
    """
    if g_MHz < 0.0:
        raise ValueError("coupling must be >= 0")
    g = mhz_to_angular(g_MHz)
    delta = ghz_to_angular(omega_q_GHz - omega_d_GHz)
    omega_r2 = g * g + delta * delta
    t = np.asarray(t_ns, dtype=float)
    if omega_r2 == 0.0:
        out = np.zeros_like(t)
        return float(out) if np.isscalar(t_ns) else out
    omega_r = math.sqrt(omega_r2)
    p = (g * g / omega_r2) * np.sin(omega_r * t / 2.0) ** 2
    return float(p) if np.isscalar(t_ns) else p
