from .collapse import build_collapse_operators
from .evolve import EvolutionResult, lindblad_evolve
from .hamiltonians import (DispersiveSpec, DrivenQubitSpec, HamiltonianSpec,
                           JaynesCummingsSpec, TimeDependentHamiltonian,
                           TwoQubitSpec, build_hamiltonian,
                           qubit_cavity_space)
from .integrate import IntegratorStats, integrate_adaptive
from .pulses import (ConstantEnvelope, Envelope, SineEnvelope, TableEnvelope,
                     duration_for_angle, pulse_angle,
                     rabi_probability_analytic)

__all__ = [
    "ConstantEnvelope",
    "DispersiveSpec",
    "DrivenQubitSpec",
    "Envelope",
    "EvolutionResult",
    "HamiltonianSpec",
    "IntegratorStats",
    "JaynesCummingsSpec",
    "SineEnvelope",
    "TableEnvelope",
    "TimeDependentHamiltonian",
    "TwoQubitSpec",
    "build_collapse_operators",
    "build_hamiltonian",
    "duration_for_angle",
    "integrate_adaptive",
    "lindblad_evolve",
    "pulse_angle",
    "qubit_cavity_space",
    "rabi_probability_analytic",
]
