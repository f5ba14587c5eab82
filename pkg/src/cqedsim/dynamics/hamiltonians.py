"""Hamiltonian builders for the supported system kinds.

Specs carry ordinary frequencies in GHz; the built operators are in
angular units (rad/ns, hbar = 1) for the integrator. Composite spaces put
the qubit on slot 0 and the cavity on slot 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from ..constants import ghz_to_angular
from ..hilbert import (QuantumOperator, SpaceDescriptor, embed_operator,
                       ladder_operator, pauli_operator)
from .pulses import Envelope


@dataclass(frozen=True)
class JaynesCummingsSpec:
    """Qubit exchanging single quanta with one cavity mode."""

    omega_r_GHz: float
    omega_q_GHz: float
    g_GHz: float
    n_max: int = 15

    def __post_init__(self):
        _check_positive_freqs(self, "omega_r_GHz", "omega_q_GHz")
        _check_coupling_and_fock(self)


@dataclass(frozen=True)
class DispersiveSpec:
    """Dispersive-limit qubit-cavity Hamiltonian with self/cross-Kerr."""

    omega_r_GHz: float
    omega_q_GHz: float
    alpha_GHz: float
    chi_GHz: float
    n_max: int = 15

    def __post_init__(self):
        _check_positive_freqs(self, "omega_r_GHz", "omega_q_GHz")
        if self.n_max < 2:
            raise ValueError("n_max must be >= 2")


@dataclass(frozen=True)
class TwoQubitSpec:
    """Two transmons with a sigma_y sigma_y exchange coupling."""

    omega1_GHz: float
    omega2_GHz: float
    g_GHz: float

    def __post_init__(self):
        _check_positive_freqs(self, "omega1_GHz", "omega2_GHz")
        if self.g_GHz < 0.0:
            raise ValueError("coupling must be >= 0")


@dataclass(frozen=True)
class DrivenQubitSpec:
    """Qubit under a microwave drive along sigma_y.

    ``frame="lab"`` keeps the full carrier g S(t) cos(omega_d t) sigma_y;
    ``frame="rotating"`` uses the rotating-wave form
    -(omega_q - omega_d)/2 sigma_z + g S(t)/2 sigma_y.
    """

    omega_q_GHz: float
    g_GHz: float
    omega_d_GHz: float
    envelope: Envelope
    frame: str = "rotating"

    def __post_init__(self):
        _check_positive_freqs(self, "omega_q_GHz", "omega_d_GHz")
        if self.g_GHz < 0.0:
            raise ValueError("coupling must be >= 0")
        if self.frame not in ("lab", "rotating"):
            raise ValueError(f"unknown frame {self.frame!r}")


HamiltonianSpec = Union[JaynesCummingsSpec, DispersiveSpec, TwoQubitSpec,
                        DrivenQubitSpec]


def _check_positive_freqs(spec, *names):
    for name in names:
        if getattr(spec, name) <= 0.0:
            raise ValueError(f"{name} must be positive")


def _check_coupling_and_fock(spec):
    if spec.g_GHz < 0.0:
        raise ValueError("coupling must be >= 0")
    if spec.n_max < 2:
        raise ValueError("n_max must be >= 2")


class TimeDependentHamiltonian:
    """Callable t (ns) -> Hamiltonian matrix in rad/ns."""

    def __init__(self, space: SpaceDescriptor, func):
        self.space = space
        self._func = func

    def __call__(self, t_ns: float) -> np.ndarray:
        return self._func(t_ns)


def qubit_cavity_space(n_max: int) -> SpaceDescriptor:
    """Composite space with the qubit on slot 0 and the cavity on slot 1."""
    return SpaceDescriptor((2, n_max))


def build_hamiltonian(spec: HamiltonianSpec):
    """Construct the Hamiltonian for a system spec.

    Static kinds return a QuantumOperator; the driven qubit returns a
    TimeDependentHamiltonian.
    """
    if isinstance(spec, JaynesCummingsSpec):
        return _jaynes_cummings(spec)
    if isinstance(spec, DispersiveSpec):
        return _dispersive(spec)
    if isinstance(spec, TwoQubitSpec):
        return _two_qubit(spec)
    if isinstance(spec, DrivenQubitSpec):
        return _driven_qubit(spec)
    raise TypeError(f"unsupported spec type {type(spec).__name__}")


def _jaynes_cummings(spec: JaynesCummingsSpec) -> QuantumOperator:
    space = qubit_cavity_space(spec.n_max)
    a = embed_operator(ladder_operator(spec.n_max, "annihilate"), 1, space)
    ad = a.dag()
    sz = embed_operator(pauli_operator("z"), 0, space)
    sp = embed_operator(pauli_operator("plus"), 0, space)
    sm = embed_operator(pauli_operator("minus"), 0, space)
    wr = ghz_to_angular(spec.omega_r_GHz)
    wq = ghz_to_angular(spec.omega_q_GHz)
    g = ghz_to_angular(spec.g_GHz)
    h = wr * (ad @ a) - 0.5 * wq * sz + g * (a @ sp + ad @ sm)
    return QuantumOperator(space, h.matrix, hermitian=True)


def _dispersive(spec: DispersiveSpec) -> QuantumOperator:
    space = qubit_cavity_space(spec.n_max)
    a = embed_operator(ladder_operator(spec.n_max, "annihilate"), 1, space)
    num = a.dag() @ a
    sz = embed_operator(pauli_operator("z"), 0, space)
    eye = QuantumOperator.identity(space)
    wr = ghz_to_angular(spec.omega_r_GHz)
    wq = ghz_to_angular(spec.omega_q_GHz)
    alpha = ghz_to_angular(spec.alpha_GHz)
    chi = ghz_to_angular(spec.chi_GHz)
    h = wr * num - 0.5 * (wq - alpha / 2.0) * sz \
        + chi * ((num + 0.5 * eye) @ sz)
    return QuantumOperator(space, h.matrix, hermitian=True)


def _two_qubit(spec: TwoQubitSpec) -> QuantumOperator:
    space = SpaceDescriptor((2, 2))
    sz1 = embed_operator(pauli_operator("z"), 0, space)
    sz2 = embed_operator(pauli_operator("z"), 1, space)
    sy1 = embed_operator(pauli_operator("y"), 0, space)
    sy2 = embed_operator(pauli_operator("y"), 1, space)
    w1 = ghz_to_angular(spec.omega1_GHz)
    w2 = ghz_to_angular(spec.omega2_GHz)
    g = ghz_to_angular(spec.g_GHz)
    h = -0.5 * w1 * sz1 - 0.5 * w2 * sz2 + g * (sy1 @ sy2)
    return QuantumOperator(space, h.matrix, hermitian=True)


def _driven_qubit(spec: DrivenQubitSpec) -> TimeDependentHamiltonian:
    space = SpaceDescriptor((2,))
    sz = pauli_operator("z").matrix
    sy = pauli_operator("y").matrix
    g = ghz_to_angular(spec.g_GHz)
    wd = ghz_to_angular(spec.omega_d_GHz)
    envelope = spec.envelope
    if spec.frame == "rotating":
        delta = ghz_to_angular(spec.omega_q_GHz - spec.omega_d_GHz)
        h0 = -0.5 * delta * sz

        def func(t_ns):
            return h0 + (0.5 * g * float(envelope.value(t_ns))) * sy
    else:
        wq = ghz_to_angular(spec.omega_q_GHz)
        h0 = -0.5 * wq * sz

        def func(t_ns):
            coef = g * float(envelope.value(t_ns)) * np.cos(wd * t_ns)
            return h0 + coef * sy
    return TimeDependentHamiltonian(space, func)
