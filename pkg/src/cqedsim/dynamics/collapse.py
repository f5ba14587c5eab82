"""Assembly of thermal collapse operators on a composite space.

Slots of dimension 2 are treated as qubits, larger slots as resonator
modes. The resonator always gets the full thermal split: a downward jump
sqrt((1 + n_th) kappa1) a and an upward jump sqrt(n_th kappa1) a^dag. The
qubit default is the bare downward jump sqrt(Gamma1) sigma_minus;
``qubit_thermal=True`` opts in to the same (1 + n_th)/n_th split at the
qubit frequency.

Dephasing jumps carry a factor sqrt(2) (sqrt(2 kappa_phi) a^dag a and
sqrt(2 Gamma_phi) sigma_plus sigma_minus) so that the off-diagonal decay
rate equals rate/2 + rate_phi, the definition of the transverse rate.

Operators embed sqrt(angular rate) so that |L|^2 is in rad/ns; rates in
the BathSpec stay ordinary frequencies in MHz.
"""

import math

from ..constants import mhz_to_angular
from ..hilbert import (QuantumOperator, SpaceDescriptor, embed_operator,
                       ladder_operator, pauli_operator)
from ..thermal import BathSpec, thermal_occupancy


def build_collapse_operators(bath: BathSpec, space: SpaceDescriptor,
                             cavity_freq_GHz: float, qubit_freq_GHz: float,
                             *, qubit_thermal: bool = False
                             ) -> list[QuantumOperator]:
    """Collapse operators for every slot of the space, zero-rate ones omitted."""
    ops: list[QuantumOperator] = []
    for slot, dim in enumerate(space.dims):
        if dim == 2:
            ops.extend(_qubit_ops(bath, space, slot, qubit_freq_GHz,
                                  qubit_thermal))
        else:
            ops.extend(_cavity_ops(bath, space, slot, cavity_freq_GHz))
    return ops


def _cavity_ops(bath, space, slot, freq_ghz):
    dim = space.dims[slot]
    kappa1 = mhz_to_angular(bath.kappa1_MHz)
    kappa_phi = mhz_to_angular(bath.kappa_phi_MHz)
    ops = []
    if kappa1 > 0.0:
        n_th = thermal_occupancy(freq_ghz, bath.T_mK)
        down = ladder_operator(dim, "annihilate")
        ops.append(embed_operator(math.sqrt((1.0 + n_th) * kappa1) * down,
                                  slot, space))
        if n_th > 0.0:
            up = ladder_operator(dim, "create")
            ops.append(embed_operator(math.sqrt(n_th * kappa1) * up,
                                      slot, space))
    if kappa_phi > 0.0:
        num = ladder_operator(dim, "number")
        ops.append(embed_operator(math.sqrt(2.0 * kappa_phi) * num,
                                  slot, space))
    return ops


def _qubit_ops(bath, space, slot, freq_ghz, qubit_thermal):
    gamma1 = mhz_to_angular(bath.Gamma1_MHz)
    gamma_phi = mhz_to_angular(bath.Gamma_phi_MHz)
    ops = []
    if gamma1 > 0.0:
        sm = pauli_operator("minus")
        if qubit_thermal:
            n_th = thermal_occupancy(freq_ghz, bath.T_mK)
            ops.append(embed_operator(math.sqrt((1.0 + n_th) * gamma1) * sm,
                                      slot, space))
            if n_th > 0.0:
                sp = pauli_operator("plus")
                ops.append(embed_operator(math.sqrt(n_th * gamma1) * sp,
                                          slot, space))
        else:
            ops.append(embed_operator(math.sqrt(gamma1) * sm, slot, space))
    if gamma_phi > 0.0:
        proj = pauli_operator("plus") @ pauli_operator("minus")
        ops.append(embed_operator(math.sqrt(2.0 * gamma_phi) * proj,
                                  slot, space))
    return ops
