"""Master-equation time evolution.

Integrates drho/dt = -i[H, rho] + sum_n (1/2)(2 L_n rho L_n^dag
- rho L_n^dag L_n - L_n^dag L_n rho) with the adaptive embedded
Runge-Kutta stepper, recording expectation values at requested times.
The state is re-Hermitized ((rho + rho^dag)/2) after every accepted step
and the trace is checked against drift.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .._kernels import make_lindblad_rhs
from ..errors import IntegrationError
from ..hilbert import DensityMatrix, QuantumOperator
from .hamiltonians import TimeDependentHamiltonian
from .integrate import IntegratorStats, integrate_adaptive

TRACE_DRIFT_TOL = 1e-6


@dataclass
class EvolutionResult:
    """Time grid, named expectation-value traces and the final state."""

    times: np.ndarray
    traces: dict[str, np.ndarray]
    final_state: DensityMatrix
    stats: IntegratorStats = field(default_factory=IntegratorStats)
    states: Optional[list[np.ndarray]] = None


def lindblad_evolve(hamiltonian: Union[QuantumOperator, TimeDependentHamiltonian],
                    rho0: DensityMatrix,
                    collapse: list[QuantumOperator],
                    times,
                    observables: Optional[dict[str, QuantumOperator]] = None,
                    *, rtol: float = 1e-8, atol: float = 1e-10,
                    store_states: bool = False,
                    kernel: str = "auto") -> EvolutionResult:
    """Evolve a density matrix and sample observables.

    Parameters
    ----------
    hamiltonian : QuantumOperator or TimeDependentHamiltonian
        Static operator, or a callable of t returning the matrix, in
        angular units (rad/ns).
    times : array_like
        Strictly increasing sample grid in ns starting at 0.
    observables : dict, optional
        Named operators whose expectation values are recorded at every
        sample time (real parts).
    store_states : bool
        Also keep a copy of rho at every sample time.

    Raises
    ------
    IntegrationError
        On tolerance failure, step underflow, or trace drift beyond 1e-6.
    """
    times = np.asarray(times, dtype=float)
    if times.ndim != 1 or len(times) < 1:
        raise ValueError("need a non-empty 1-D time grid")
    if abs(times[0]) > 1e-12:
        raise ValueError("time grid must start at 0")
    if len(times) > 1 and np.any(np.diff(times) <= 0.0):
        raise ValueError("time grid must be strictly increasing")

    space = rho0.space
    d = space.total_dim
    static = isinstance(hamiltonian, QuantumOperator)
    if static:
        if hamiltonian.space.dims != space.dims:
            raise ValueError("Hamiltonian space does not match the state")
        h_mat = hamiltonian.matrix
    else:
        if hamiltonian.space.dims != space.dims:
            raise ValueError("Hamiltonian space does not match the state")
        h_mat = None

    for op in collapse:
        if op.space.dims != space.dims:
            raise ValueError("collapse operator space does not match the state")
    stacked = np.stack([op.matrix for op in collapse]) if collapse \
        else np.zeros((0, d, d), dtype=complex)
    k_half = 0.5 * np.einsum("nji,njk->ik", stacked.conj(), stacked) \
        if len(stacked) else np.zeros((d, d), dtype=complex)

    observables = observables or {}
    obs_mats = {}
    for name, op in observables.items():
        if op.space.dims != space.dims:
            raise ValueError(f"observable {name!r} space does not match the state")
        obs_mats[name] = np.ascontiguousarray(op.matrix)

    kernel_rhs = make_lindblad_rhs(d, stacked, kernel)
    out = np.empty((d, d), dtype=complex)

    if static:
        e_static = np.ascontiguousarray(-1j * h_mat - k_half)
        ed_static = np.ascontiguousarray(e_static.conj().T)

        def rhs(t, y):
            return kernel_rhs(e_static, ed_static,
                              y.reshape(d, d), out).ravel()
    else:
        e_buf = np.empty((d, d), dtype=complex)
        ed_buf = np.empty((d, d), dtype=complex)

        def rhs(t, y):
            np.multiply(hamiltonian(t), -1j, out=e_buf)
            np.subtract(e_buf, k_half, out=e_buf)
            np.conjugate(e_buf.T, out=ed_buf)
            return kernel_rhs(e_buf, ed_buf, y.reshape(d, d), out).ravel()

    def post_accept(t, y):
        m = y.reshape(d, d)
        herm = 0.5 * (m + m.conj().T)
        drift = abs(float(np.trace(herm).real) - 1.0)
        if drift > TRACE_DRIFT_TOL:
            raise IntegrationError(f"trace drifted by {drift:.2e}", t)
        return herm.ravel()

    traces = {name: np.empty(len(times)) for name in obs_mats}
    states: Optional[list] = [None] * len(times) if store_states else None
    last = {"y": None}

    def on_sample(i, t, y):
        m = y.reshape(d, d)
        for name, mat in obs_mats.items():
            traces[name][i] = np.einsum("ij,ji->", mat, m).real
        if states is not None:
            states[i] = m.copy()
        last["y"] = y

    stats = integrate_adaptive(rhs, rho0.matrix.ravel(), times, rtol=rtol,
                               atol=atol, post_accept=post_accept,
                               on_sample=on_sample)
    final = DensityMatrix(space, last["y"].reshape(d, d), trace_tol=1e-6,
                          herm_tol=1e-9, eig_floor=-1e-6)
    return EvolutionResult(times=times, traces=traces, final_state=final,
                           stats=stats, states=states)
