import numpy as np
import pytest

from cqedsim.hilbert import (DensityMatrix, QuantumOperator, SpaceDescriptor,
                             basis_ket, embed_operator, expectation_value,
                             ladder_operator, partial_trace, pauli_operator,
                             product_density, tensor_product)


def test_space_descriptor_validation():
    s = SpaceDescriptor((2, 5))
    assert s.total_dim == 10
    assert s.n_slots == 2
    with pytest.raises(ValueError):
        SpaceDescriptor((1, 4))
    with pytest.raises(ValueError):
        SpaceDescriptor(())


def test_ladder_annihilate_2():
    a = ladder_operator(2, "annihilate")
    assert np.allclose(a.matrix, [[0, 1], [0, 0]])


def test_ladder_number_3():
    n = ladder_operator(3, "number")
    assert np.allclose(n.matrix, np.diag([0.0, 1.0, 2.0]))


def test_ladder_sqrt_entries():
    a = ladder_operator(4, "annihilate")
    assert a.matrix[2, 3] == pytest.approx(np.sqrt(3.0), abs=1e-12)
    assert np.allclose(ladder_operator(4, "create").matrix,
                       a.matrix.conj().T)


def test_ladder_invalid_dimension():
    with pytest.raises(ValueError):
        ladder_operator(1, "annihilate")
    with pytest.raises(ValueError):
        ladder_operator(4, "destroy")


@pytest.mark.parametrize("dim", [2, 3, 7, 12])
def test_truncated_commutator(dim):
    a = ladder_operator(dim, "annihilate").matrix
    comm = a @ a.conj().T - a.conj().T @ a
    expected = np.eye(dim)
    expected[-1, -1] = -(dim - 1)
    assert np.max(np.abs(comm - expected)) < 1e-12


def test_pauli_z_convention():
    assert np.allclose(pauli_operator("z").matrix, np.diag([1.0, -1.0]))


def test_pauli_excited_projector():
    proj = pauli_operator("plus") @ pauli_operator("minus")
    assert np.allclose(proj.matrix, np.diag([0.0, 1.0]))


def test_pauli_y():
    assert np.allclose(pauli_operator("y").matrix, [[0, -1j], [1j, 0]])


def test_pauli_minus_lowers():
    sm = pauli_operator("minus").matrix
    excited = basis_ket(2, 1)
    assert np.allclose(sm @ excited, basis_ket(2, 0))


def test_tensor_product_identities():
    i2 = QuantumOperator.identity(SpaceDescriptor((2,)))
    i3 = QuantumOperator.identity(SpaceDescriptor((3,)))
    out = tensor_product([i2, i3])
    assert out.space.dims == (2, 3)
    assert np.allclose(out.matrix, np.eye(6))


def test_tensor_product_eigenvalue():
    sz = pauli_operator("z")
    i2 = QuantumOperator.identity(SpaceDescriptor((2,)))
    op = tensor_product([sz, i2])
    ket = np.kron(basis_ket(2, 1), basis_ket(2, 0))
    assert np.allclose(op.matrix @ ket, -ket)


def test_tensor_product_dims_bookkeeping():
    a = ladder_operator(2, "annihilate")
    b = ladder_operator(5, "annihilate")
    out = tensor_product([a, b])
    assert out.space.dims == (2, 5)
    assert out.space.total_dim == 10


def test_tensor_product_empty():
    with pytest.raises(ValueError):
        tensor_product([])


def test_tensor_product_mixed_product_property():
    rng = np.random.default_rng(7)
    for _ in range(5):
        mats = [rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
                for d in (2, 3, 2, 3)]
        sa, sb = SpaceDescriptor((2,)), SpaceDescriptor((3,))
        a, b, c, d = (QuantumOperator(s, m)
                      for s, m in zip((sa, sb, sa, sb), mats))
        lhs = tensor_product([a, b]) @ tensor_product([c, d])
        rhs = tensor_product([a @ c, b @ d])
        assert np.max(np.abs(lhs.matrix - rhs.matrix)) < 1e-12


def test_embed_operator():
    space = SpaceDescriptor((2, 5))
    sz = embed_operator(pauli_operator("z"), 0, space)
    assert np.allclose(sz.matrix, np.kron(np.diag([1.0, -1.0]), np.eye(5)))
    num = embed_operator(ladder_operator(5, "number"), 1, space)
    assert num.space.dims == (2, 5)
    comm = sz @ num - num @ sz
    assert np.max(np.abs(comm.matrix)) < 1e-12


def test_embed_dimension_mismatch():
    space = SpaceDescriptor((2, 5))
    with pytest.raises(ValueError):
        embed_operator(ladder_operator(3, "number"), 1, space)
    with pytest.raises(ValueError):
        embed_operator(pauli_operator("z"), 2, space)


def _random_density(rng, dim):
    m = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = m @ m.conj().T
    return rho / np.trace(rho)


def test_partial_trace_product_state():
    rng = np.random.default_rng(3)
    rho_a = _random_density(rng, 2)
    rho_b = _random_density(rng, 3)
    space = SpaceDescriptor((2, 3))
    rho = DensityMatrix(space, np.kron(rho_a, rho_b))
    reduced = partial_trace(rho, {0})
    assert np.max(np.abs(reduced.matrix - rho_a)) < 1e-12


def test_partial_trace_bell_state():
    ket = (np.kron(basis_ket(2, 0), basis_ket(2, 0))
           + np.kron(basis_ket(2, 1), basis_ket(2, 1))) / np.sqrt(2.0)
    rho = DensityMatrix(SpaceDescriptor((2, 2)), np.outer(ket, ket.conj()))
    reduced = partial_trace(rho, {0})
    assert np.max(np.abs(reduced.matrix - np.eye(2) / 2.0)) < 1e-12


def test_partial_trace_keep_all():
    rng = np.random.default_rng(5)
    space = SpaceDescriptor((2, 3))
    rho = DensityMatrix(space, _random_density(rng, 6))
    out = partial_trace(rho, {0, 1})
    assert np.max(np.abs(out.matrix - rho.matrix)) < 1e-12


def test_partial_trace_preserves_trace_and_hermiticity():
    rng = np.random.default_rng(11)
    space = SpaceDescriptor((2, 3, 2))
    for _ in range(5):
        rho = DensityMatrix(space, _random_density(rng, 12))
        for keep in ({0}, {1}, {2}, {0, 2}, {1, 2}):
            red = partial_trace(rho, keep)
            assert abs(np.trace(red.matrix) - 1.0) < 1e-12
            assert np.max(np.abs(red.matrix - red.matrix.conj().T)) < 1e-12


def test_partial_trace_empty_keep():
    rho = product_density(SpaceDescriptor((2, 2)), (0, 0))
    with pytest.raises(ValueError):
        partial_trace(rho, set())


def test_expectation_values():
    space = SpaceDescriptor((4,))
    rho = product_density(space, (3,))
    num = ladder_operator(4, "number")
    assert expectation_value(num, rho) == pytest.approx(3.0, abs=1e-12)
    eye = QuantumOperator.identity(space)
    assert expectation_value(eye, rho) == pytest.approx(1.0, abs=1e-12)


def test_expectation_sigma_z_mixed():
    space = SpaceDescriptor((2,))
    rho = DensityMatrix(space, np.eye(2) / 2.0)
    assert expectation_value(pauli_operator("z"), rho) == \
        pytest.approx(0.0, abs=1e-12)


def test_expectation_space_mismatch():
    rho = product_density(SpaceDescriptor((2, 2)), (0, 0))
    with pytest.raises(ValueError):
        expectation_value(pauli_operator("z"), rho)


def test_expectation_hermitian_real():
    rng = np.random.default_rng(13)
    space = SpaceDescriptor((5,))
    for _ in range(10):
        m = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
        herm = QuantumOperator(space, 0.5 * (m + m.conj().T), hermitian=True)
        rho = DensityMatrix(space, _random_density(rng, 5))
        assert abs(expectation_value(herm, rho).imag) < 1e-9


def test_density_matrix_validation():
    space = SpaceDescriptor((2,))
    with pytest.raises(ValueError):
        DensityMatrix(space, np.eye(2))          # trace 2
    with pytest.raises(ValueError):
        DensityMatrix(space, [[0.5, 0.5], [0.1, 0.5]])   # not Hermitian
    with pytest.raises(ValueError):
        DensityMatrix(space, [[1.5, 0.0], [0.0, -0.5]])  # negative eigenvalue


def test_hermitian_flag_check():
    space = SpaceDescriptor((2,))
    with pytest.raises(ValueError):
        QuantumOperator(space, [[0, 1], [0, 0]], hermitian=True)


def test_operators_are_immutable():
    op = pauli_operator("z")
    with pytest.raises(ValueError):
        op.matrix[0, 0] = 5.0
