"""Embedded adaptive Runge-Kutta integrator (Dormand-Prince 4(5)).

Generic over flat complex state vectors. The fifth-order solution is
propagated; the difference to the embedded fourth-order solution drives
the step-size controller. The first stage of each step reuses the last
stage of the previous one (FSAL).
"""

from dataclasses import dataclass

import numpy as np

from ..errors import IntegrationError

_C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
_A = (
    np.array([]),
    np.array([1 / 5]),
    np.array([3 / 40, 9 / 40]),
    np.array([44 / 45, -56 / 15, 32 / 9]),
    np.array([19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729]),
    np.array([9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656]),
)
_B5 = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84])
_ERR = np.array([
    35 / 384 - 5179 / 57600, 0.0, 500 / 1113 - 7571 / 16695,
    125 / 192 - 393 / 640, -2187 / 6784 + 92097 / 339200,
    11 / 84 - 187 / 2100, -1 / 40,
])

_SAFETY = 0.9
_MIN_FACTOR = 0.2
_MAX_FACTOR = 5.0


@dataclass
class IntegratorStats:
    steps: int = 0
    rejections: int = 0
    rhs_evals: int = 0


def _rms(v: np.ndarray) -> float:
    return float(np.sqrt(np.mean(np.abs(v) ** 2)))


def _initial_step(rhs, t0, y0, f0, rtol, atol, span):
    scale = atol + rtol * np.abs(y0)
    d0 = _rms(y0 / scale)
    d1 = _rms(f0 / scale)
    h0 = 1e-6 if (d0 < 1e-5 or d1 < 1e-5) else 0.01 * d0 / d1
    h0 = min(h0, span)
    f1 = rhs(t0 + h0, y0 + h0 * f0)
    d2 = _rms((f1 - f0) / scale) / h0
    dm = max(d1, d2)
    h1 = max(1e-6, h0 * 1e-3) if dm <= 1e-15 else (0.01 / dm) ** 0.2
    return min(100.0 * h0, h1, span)


def integrate_adaptive(rhs, y0: np.ndarray, t_samples, *, rtol: float = 1e-8,
                       atol: float = 1e-10, post_accept=None, on_sample=None,
                       max_steps: int = 5_000_000) -> IntegratorStats:
    """Integrate dy/dt = rhs(t, y) and sample at the given times.

    ``t_samples`` must be strictly increasing; integration starts at
    ``t_samples[0]``. ``post_accept(t, y) -> y`` runs after every accepted
    step (state cleanup and sanity checks); ``on_sample(index, t, y)`` is
    called once per sample time. Steps are clamped so samples are hit
    exactly.

    Raises
    ------
    IntegrationError
        On step-size underflow or when the step budget is exhausted.
    """
    t_samples = np.asarray(t_samples, dtype=float)
    if t_samples.ndim != 1 or len(t_samples) < 1:
        raise ValueError("need a non-empty 1-D sample grid")
    if len(t_samples) > 1 and np.any(np.diff(t_samples) <= 0.0):
        raise ValueError("sample times must be strictly increasing")

    stats = IntegratorStats()
    t = float(t_samples[0])
    t_end = float(t_samples[-1])
    y = np.array(y0, dtype=complex).ravel()
    if on_sample is not None:
        on_sample(0, t, y)
    if len(t_samples) == 1:
        return stats

    n = y.size
    k = np.empty((7, n), dtype=complex)
    k[0] = rhs(t, y)
    stats.rhs_evals += 1
    h_ctrl = _initial_step(rhs, t, y, k[0], rtol, atol, t_end - t)
    stats.rhs_evals += 1

    si = 1
    while si < len(t_samples):
        if stats.steps + stats.rejections >= max_steps:
            raise IntegrationError(
                f"step budget of {max_steps} exhausted", t)
        target = float(t_samples[si])
        clamped = t + h_ctrl >= target
        h = target - t if clamped else h_ctrl
        if h < 1e-14 * max(1.0, abs(t)):
            raise IntegrationError("step size underflow", t)

        for i in range(1, 6):
            yi = y + h * (_A[i] @ k[:i])
            k[i] = rhs(t + _C[i] * h, yi)
        y5 = y + h * (_B5 @ k[:6])
        k[6] = rhs(t + h, y5)
        stats.rhs_evals += 6

        err = h * (_ERR @ k)
        scale = atol + rtol * np.maximum(np.abs(y), np.abs(y5))
        enorm = _rms(err / scale)

        if enorm <= 1.0:
            factor = _MAX_FACTOR if enorm == 0.0 else \
                min(_MAX_FACTOR, max(_MIN_FACTOR, _SAFETY * enorm ** -0.2))
            t = target if clamped else t + h
            y = y5
            if post_accept is not None:
                y = post_accept(t, y)
            k[0] = k[6]
            stats.steps += 1
            # artificially short clamped steps must not shrink the controller
            if clamped:
                h_ctrl = max(h_ctrl, h * factor)
            else:
                h_ctrl = h * factor
            while si < len(t_samples) and t >= t_samples[si] - 1e-12:
                if on_sample is not None:
                    on_sample(si, t, y)
                si += 1
        else:
            stats.rejections += 1
            h_ctrl = h * max(_MIN_FACTOR, _SAFETY * enorm ** -0.2)
    return stats
