import numpy as np
import pytest

from cqedsim._kernels import (HAVE_COMPILED, available_backends,
                              make_lindblad_rhs)


def _random_problem(rng, dim, n_collapse):
    e = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    ls = rng.standard_normal((n_collapse, dim, dim)) \
        + 1j * rng.standard_normal((n_collapse, dim, dim))
    rho = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = rho + rho.conj().T
    return np.ascontiguousarray(e), np.ascontiguousarray(ls), \
        np.ascontiguousarray(rho)


def _reference(e, ls, rho):
    out = e @ rho + rho @ e.conj().T
    for l_op in ls:
        out = out + l_op @ rho @ l_op.conj().T
    return out


@pytest.mark.parametrize("dim,n_collapse", [(2, 0), (2, 1), (5, 3), (30, 3),
                                            (13, 6)])
def test_numpy_kernel_matches_reference(dim, n_collapse):
    rng = np.random.default_rng(dim * 10 + n_collapse)
    e, ls, rho = _random_problem(rng, dim, n_collapse)
    kernel = make_lindblad_rhs(dim, ls, backend="numpy")
    out = np.empty((dim, dim), dtype=complex)
    kernel(e, np.ascontiguousarray(e.conj().T), rho, out)
    assert np.max(np.abs(out - _reference(e, ls, rho))) < 1e-12


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernel not built")
@pytest.mark.parametrize("dim,n_collapse", [(2, 0), (2, 1), (5, 3), (30, 3),
                                            (13, 6)])
def test_compiled_kernel_matches_numpy(dim, n_collapse):
    rng = np.random.default_rng(dim * 100 + n_collapse)
    e, ls, rho = _random_problem(rng, dim, n_collapse)
    ed = np.ascontiguousarray(e.conj().T)
    out_np = np.empty((dim, dim), dtype=complex)
    out_cy = np.empty((dim, dim), dtype=complex)
    make_lindblad_rhs(dim, ls, backend="numpy")(e, ed, rho, out_np)
    make_lindblad_rhs(dim, ls, backend="compiled")(e, ed, rho, out_cy)
    assert np.max(np.abs(out_np - out_cy)) < 1e-12


def test_kernel_repeated_calls_are_pure():
    rng = np.random.default_rng(0)
    e, ls, rho = _random_problem(rng, 6, 2)
    ed = np.ascontiguousarray(e.conj().T)
    for backend in available_backends():
        kernel = make_lindblad_rhs(6, ls, backend=backend)
        out = np.empty((6, 6), dtype=complex)
        first = kernel(e, ed, rho, out).copy()
        second = kernel(e, ed, rho, out).copy()
        assert np.array_equal(first, second)


def test_backend_selection():
    ls = np.zeros((0, 3, 3), dtype=complex)
    assert make_lindblad_rhs(3, ls, backend="numpy").backend == "numpy"
    auto = make_lindblad_rhs(3, ls, backend="auto")
    assert auto.backend == ("compiled" if HAVE_COMPILED else "numpy")
    with pytest.raises(ValueError):
        make_lindblad_rhs(3, ls, backend="fortran")
    with pytest.raises(ValueError):
        make_lindblad_rhs(4, np.zeros((1, 3, 3), dtype=complex),
                          backend="numpy")


def test_env_var_override(monkeypatch):
    ls = np.zeros((0, 3, 3), dtype=complex)
    monkeypatch.setenv("CQEDSIM_KERNEL", "numpy")
    assert make_lindblad_rhs(3, ls, backend="auto").backend == "numpy"
