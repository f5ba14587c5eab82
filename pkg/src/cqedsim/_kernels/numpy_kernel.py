"""Pure-numpy evaluation of the master-equation right-hand side."""

import numpy as np


class NumpyLindbladRHS:
    """Computes E rho + rho E^dag + sum_n L_n rho L_n^dag.

    ``collapse`` is a (N, d, d) complex array (N may be 0). Buffers are
    owned by the instance, so each concurrent evolution needs its own
    instance.
    """

    backend = "numpy"

    def __init__(self, dim: int, collapse: np.ndarray):
        self.dim = dim
        self.Ls = np.ascontiguousarray(collapse, dtype=complex)
        if self.Ls.shape != (len(self.Ls), dim, dim):
            raise ValueError("collapse array must have shape (N, dim, dim)")
        self.Lsd = np.ascontiguousarray(np.conj(np.transpose(self.Ls, (0, 2, 1))))
        n = len(self.Ls)
        self._b1 = np.empty((n, dim, dim), dtype=complex)
        self._b2 = np.empty((n, dim, dim), dtype=complex)
        self._acc = np.empty((dim, dim), dtype=complex)

    def __call__(self, E: np.ndarray, Ed: np.ndarray, rho: np.ndarray,
                 out: np.ndarray) -> np.ndarray:
        np.matmul(E, rho, out=out)
        out += rho @ Ed
        if len(self.Ls):
            np.matmul(self.Ls, rho, out=self._b1)
            np.matmul(self._b1, self.Lsd, out=self._b2)
            out += np.sum(self._b2, axis=0, out=self._acc)
        return out
