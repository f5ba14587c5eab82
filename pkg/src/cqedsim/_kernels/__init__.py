"""Right-hand-side kernels for the master-equation integrator.

A compiled BLAS-backed kernel is used when the extension module built at
install time is importable; otherwise the pure-numpy implementation takes
over. Set ``CQEDSIM_KERNEL=numpy`` (or ``compiled``) to force a backend.
"""

import os

import numpy as np

from .numpy_kernel import NumpyLindbladRHS

try:
    from . import _lindblad as _compiled
except ImportError:
    _compiled = None

HAVE_COMPILED = _compiled is not None


class CompiledLindbladRHS:
    """Wrapper binding per-run scratch buffers to the compiled kernel."""

    backend = "compiled"

    def __init__(self, dim: int, collapse: np.ndarray):
        self.dim = dim
        self.Ls = np.ascontiguousarray(collapse, dtype=complex)
        if self.Ls.shape != (len(self.Ls), dim, dim):
            raise ValueError("collapse array must have shape (N, dim, dim)")
        self.Lsd = np.ascontiguousarray(np.conj(np.transpose(self.Ls, (0, 2, 1))))
        self._scratch = np.empty((dim, dim), dtype=complex)

    def __call__(self, E, Ed, rho, out):
        _compiled.rhs(E, Ed, self.Ls, self.Lsd, rho, out, self._scratch)
        return out


def available_backends() -> tuple[str, ...]:
    return ("compiled", "numpy") if HAVE_COMPILED else ("numpy",)


def make_lindblad_rhs(dim: int, collapse: np.ndarray, backend: str = "auto"):
    """Construct the RHS evaluator for one evolution run.

    ``backend`` is ``"auto"`` (compiled when available), ``"compiled"`` or
    ``"numpy"``; the CQEDSIM_KERNEL environment variable overrides
    ``"auto"``.
    """
    if backend == "auto":
        backend = os.environ.get("CQEDSIM_KERNEL", "auto")
    if backend == "auto":
        backend = "compiled" if HAVE_COMPILED else "numpy"
    if backend == "compiled":
        if not HAVE_COMPILED:
            raise ValueError("compiled kernel requested but not built")
        return CompiledLindbladRHS(dim, collapse)
    if backend == "numpy":
        return NumpyLindbladRHS(dim, collapse)
    raise ValueError(f"unknown kernel backend {backend!r}")
