"""Operator algebra on truncated composite Hilbert spaces.

Dense complex matrices tagged with an ordered list of subsystem dimensions.
Slot 0 is the leftmost tensor factor and the most significant index of the
row-major composite basis. The qubit convention is |0> = ground listed
first, so sigma_z = diag(1, -1) and sigma_minus lowers |1> -> |0>.

All values are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

HERMITIAN_TOL = 1e-12


@dataclass(frozen=True)
class SpaceDescriptor:
    """An ordered list of subsystem dimensions."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if not dims:
            raise ValueError("a space needs at least one subsystem")
        for d in dims:
            if d < 2:
                raise ValueError(f"subsystem dimensions must be >= 2, got {d}")
        object.__setattr__(self, "dims", dims)

    @property
    def total_dim(self) -> int:
        return int(np.prod(self.dims))

    @property
    def n_slots(self) -> int:
        return len(self.dims)


def _frozen(matrix: np.ndarray) -> np.ndarray:
    out = np.array(matrix, dtype=complex, order="C")
    out.setflags(write=False)
    return out


class QuantumOperator:
    """A dense operator on a composite space.

    Parameters
    ----------
    space : SpaceDescriptor
        The composite space the operator acts on.
    matrix : array_like
        Square complex matrix of size ``space.total_dim``.
    hermitian : bool
        If True the constructor verifies max|M - M^dag| < 1e-12.
    """

    __slots__ = ("space", "matrix", "hermitian")

    def __init__(self, space: SpaceDescriptor, matrix, hermitian: bool = False):
        matrix = _frozen(matrix)
        d = space.total_dim
        if matrix.shape != (d, d):
            raise ValueError(
                f"matrix shape {matrix.shape} does not match space dimension {d}"
            )
        if hermitian:
            dev = np.max(np.abs(matrix - matrix.conj().T))
            if dev >= HERMITIAN_TOL:
                raise ValueError(
                    f"operator flagged Hermitian deviates by {dev:.3e}"
                )
        self.space = space
        self.matrix = matrix
        self.hermitian = bool(hermitian)

    @classmethod
    def identity(cls, space: SpaceDescriptor) -> "QuantumOperator":
        return cls(space, np.eye(space.total_dim), hermitian=True)

    def dag(self) -> "QuantumOperator":
        return QuantumOperator(self.space, self.matrix.conj().T,
                               hermitian=self.hermitian)

    def _check_space(self, other: "QuantumOperator"):
        if self.space.dims != other.space.dims:
            raise ValueError(
                f"space mismatch: {self.space.dims} vs {other.space.dims}"
            )

    def __matmul__(self, other: "QuantumOperator") -> "QuantumOperator":
        self._check_space(other)
        return QuantumOperator(self.space, self.matrix @ other.matrix)

    def __add__(self, other: "QuantumOperator") -> "QuantumOperator":
        self._check_space(other)
        return QuantumOperator(self.space, self.matrix + other.matrix)

    def __sub__(self, other: "QuantumOperator") -> "QuantumOperator":
        self._check_space(other)
        return QuantumOperator(self.space, self.matrix - other.matrix)

    def __mul__(self, scalar) -> "QuantumOperator":
        return QuantumOperator(self.space, scalar * self.matrix)

    __rmul__ = __mul__

    def __neg__(self) -> "QuantumOperator":
        return QuantumOperator(self.space, -self.matrix)

    def __repr__(self):
        return f"QuantumOperator(dims={self.space.dims})"


class DensityMatrix:
    """A Hermitian, unit-trace, positive-semidefinite state.

    The constructor validates trace within ``trace_tol``, Hermiticity within
    ``herm_tol`` and all eigenvalues >= ``eig_floor``.
    """

    __slots__ = ("space", "matrix")

    def __init__(self, space: SpaceDescriptor, matrix, *,
                 trace_tol: float = 1e-9, herm_tol: float = 1e-10,
                 eig_floor: float = -1e-8):
        matrix = _frozen(matrix)
        d = space.total_dim
        if matrix.shape != (d, d):
            raise ValueError(
                f"matrix shape {matrix.shape} does not match space dimension {d}"
            )
        tr = np.trace(matrix)
        if abs(tr - 1.0) > trace_tol:
            raise ValueError(f"trace deviates from 1 by {abs(tr - 1.0):.3e}")
        herm_dev = np.max(np.abs(matrix - matrix.conj().T))
        if herm_dev > herm_tol:
            raise ValueError(f"not Hermitian, deviation {herm_dev:.3e}")
        lo = float(np.min(np.linalg.eigvalsh(matrix)))
        if lo < eig_floor:
            raise ValueError(f"negative eigenvalue {lo:.3e} below {eig_floor:g}")
        self.space = space
        self.matrix = matrix

    def __repr__(self):
        return f"DensityMatrix(dims={self.space.dims})"


def ladder_operator(dim: int, kind: str) -> QuantumOperator:
    """Ladder operator on a single truncated oscillator.

    ``annihilate`` has entries a[n-1, n] = sqrt(n), ``create`` is its
    adjoint, ``number`` is diag(0 .. dim-1).
    """
    if dim < 2:
        raise ValueError(f"invalid dimension {dim}, need >= 2")
    space = SpaceDescriptor((dim,))
    if kind == "annihilate":
        m = np.diag(np.sqrt(np.arange(1, dim)), 1)
        return QuantumOperator(space, m)
    if kind == "create":
        m = np.diag(np.sqrt(np.arange(1, dim)), -1)
        return QuantumOperator(space, m)
    if kind == "number":
        return QuantumOperator(space, np.diag(np.arange(dim, dtype=float)),
                               hermitian=True)
    raise ValueError(f"unknown ladder kind {kind!r}")


_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
    "plus": np.array([[0, 0], [1, 0]], dtype=complex),
    "minus": np.array([[0, 1], [0, 0]], dtype=complex),
    "identity": np.eye(2, dtype=complex),
}


def pauli_operator(kind: str) -> QuantumOperator:
    """Standard 2x2 qubit operators; sigma_minus lowers |1> -> |0>."""
    if kind not in _PAULI:
        raise ValueError(f"unknown Pauli kind {kind!r}")
    hermitian = kind in ("x", "y", "z", "identity")
    return QuantumOperator(SpaceDescriptor((2,)), _PAULI[kind], hermitian=hermitian)


def tensor_product(ops: Sequence[QuantumOperator]) -> QuantumOperator:
    """Kronecker product in list order; dims concatenate."""
    if not ops:
        raise ValueError("tensor_product needs a non-empty operator list")
    dims = tuple(d for op in ops for d in op.space.dims)
    matrix = reduce(np.kron, (op.matrix for op in ops))
    return QuantumOperator(SpaceDescriptor(dims), matrix)


def embed_operator(op: QuantumOperator, slot: int,
                   space: SpaceDescriptor) -> QuantumOperator:
    """Place ``op`` on one slot of a larger space, identity elsewhere."""
    if not 0 <= slot < space.n_slots:
        raise ValueError(f"slot {slot} out of range for {space.n_slots} slots")
    if op.space.total_dim != space.dims[slot]:
        raise ValueError(
            f"operator dimension {op.space.total_dim} does not match "
            f"slot {slot} dimension {space.dims[slot]}"
        )
    factors = [np.eye(d, dtype=complex) for d in space.dims]
    factors[slot] = op.matrix
    return QuantumOperator(space, reduce(np.kron, factors))


def partial_trace(rho: DensityMatrix, keep: Iterable[int]) -> DensityMatrix:
    """Reduced density matrix over the kept slots (in original order)."""
    keep = sorted(set(int(k) for k in keep))
    n = rho.space.n_slots
    if not keep:
        raise ValueError("keep set must not be empty")
    if keep[0] < 0 or keep[-1] >= n:
        raise ValueError(f"keep slots {keep} out of range for {n} slots")
    dims = rho.space.dims
    tensor = rho.matrix.reshape(dims + dims)
    ket = string.ascii_lowercase[:n]
    bra = "".join(c.upper() if i in keep else c for i, c in enumerate(ket))
    out = "".join(ket[i] for i in keep) + "".join(ket[i].upper() for i in keep)
    reduced = np.einsum(f"{ket + bra}->{out}", tensor)
    kept_dims = tuple(dims[i] for i in keep)
    d = int(np.prod(kept_dims))
    return DensityMatrix(SpaceDescriptor(kept_dims), reduced.reshape(d, d))


def expectation_value(op: QuantumOperator, rho: DensityMatrix) -> complex:
    """Tr(op . rho); real to ~1e-9 for Hermitian operators."""
    if op.space.dims != rho.space.dims:
        raise ValueError(
            f"space mismatch: {op.space.dims} vs {rho.space.dims}"
        )
    return complex(np.einsum("ij,ji->", op.matrix, rho.matrix))


def basis_ket(dim: int, n: int) -> np.ndarray:
    """Column vector |n> in a dim-level system."""
    if not 0 <= n < dim:
        raise ValueError(f"level {n} out of range for dimension {dim}")
    ket = np.zeros(dim, dtype=complex)
    ket[n] = 1.0
    return ket


def product_density(space: SpaceDescriptor, occupations: Sequence[int]) -> DensityMatrix:
    """Projector onto the product basis state |n_0, n_1, ...>."""
    if len(occupations) != space.n_slots:
        raise ValueError(
            f"need {space.n_slots} occupation numbers, got {len(occupations)}"
        )
    ket = reduce(np.kron, (basis_ket(d, n) for d, n in zip(space.dims, occupations)))
    return DensityMatrix(space, np.outer(ket, ket.conj()))
