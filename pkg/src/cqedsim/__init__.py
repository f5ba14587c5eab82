"""Simulation toolkit for superconducting qubit-cavity systems.

Converts circuit parameters into quantized Hamiltonians and evolves them
as open quantum systems under realistic dissipation and finite
temperature.
"""

__version__ = "0.1.0"

from . import analysis, cavity, circuit, dynamics, hilbert, thermal
from .hilbert import (DensityMatrix, QuantumOperator, SpaceDescriptor,
                      embed_operator, expectation_value, ladder_operator,
                      partial_trace, pauli_operator, product_density,
                      tensor_product)
from .thermal import BathSpec, ThermalRates, boltzmann_excitation, \
    thermal_occupancy, thermal_rates
from .dynamics import (EvolutionResult, JaynesCummingsSpec,
                       build_collapse_operators, build_hamiltonian,
                       lindblad_evolve)

__all__ = [
    "BathSpec",
    "DensityMatrix",
    "EvolutionResult",
    "JaynesCummingsSpec",
    "QuantumOperator",
    "SpaceDescriptor",
    "ThermalRates",
    "__version__",
    "analysis",
    "boltzmann_excitation",
    "build_collapse_operators",
    "build_hamiltonian",
    "cavity",
    "circuit",
    "dynamics",
    "embed_operator",
    "expectation_value",
    "hilbert",
    "ladder_operator",
    "lindblad_evolve",
    "partial_trace",
    "pauli_operator",
    "product_density",
    "tensor_product",
    "thermal",
    "thermal_occupancy",
    "thermal_rates",
]
