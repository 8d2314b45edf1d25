import math

import numpy as np
import pytest

import entmeas


def plus_state(d):
    return np.full((d, d), 1.0 / d, dtype=complex)


def test_qubit_spectrum_census():
    rep = entmeas.spectral_report(entmeas.entangling_measurement(entmeas.qubit_family(0.5)))
    assert rep["unit_eigenspace_dim"] == 2
    assert rep["zero_algebraic_dim"] == 14
    assert rep["zero_geometric_dim"] == 12
    assert rep["defective"]
    assert len(rep["jordan_chain_witnesses"]) == 2


def test_square_is_standard():
    r = np.array([[1, 0.4j], [-0.4j, 1]])
    m = entmeas.entangling_measurement(r)
    std = entmeas.standard_measurement(2)
    assert np.abs(entmeas.compose(m, m).matrix - std.matrix).max() < 1e-12


def test_measure_product_closed_form():
    r = entmeas.qubit_family(0.5)
    out = entmeas.measure_product(r, plus_state(2), np.diag([1.0, 0.0]).astype(complex))
    expected = np.zeros((4, 4), dtype=complex)
    expected[0, 0] = expected[3, 3] = 0.5
    expected[0, 3] = expected[3, 0] = 0.25
    assert np.abs(out - expected).max() < 1e-14


def test_duplication_entropy():
    for d in range(2, 7):
        e = entmeas.entanglement_after_measurement(np.ones((d, d)), plus_state(d))
        assert abs(e - math.log2(d)) < 1e-9


def test_two_time_coherent_information():
    n = entmeas.two_time_channel(entmeas.qubit_family(0.7), np.eye(2) / 2)
    rho = np.array([[0.6, 0.2 + 0.1j], [0.2 - 0.1j, 0.4]])
    assert abs(entmeas.coherent_information(n, rho)) < 1e-9


def test_decomposition_weights():
    comps = entmeas.joint_output_decomposition(entmeas.qubit_family(0.5), np.array([1, 1]) / math.sqrt(2))
    assert [round(w, 12) for w, _, _ in comps] == [0.75, 0.25]


def test_transfer_bell():
    bell = np.zeros((4, 4), dtype=complex)
    bell[np.ix_([0, 3], [0, 3])] = 0.5
    pointer = np.diag([1.0, 0.0]).astype(complex)
    for conv in ("prose", "printed"):
        rep = entmeas.run_transfer(bell, [2, 2], np.ones((2, 2)), np.ones((2, 2)), pointer, pointer, conv)
        assert rep["negativity"] < 1e-9
    with pytest.raises(ValueError):
        entmeas.run_transfer(bell, [2, 2], np.ones((2, 2)), np.ones((2, 2)), pointer, pointer, "sideways")


def test_validation_errors_are_value_errors():
    with pytest.raises(entmeas.ValidationError):
        entmeas.validate_entanglement_matrix(np.array([[0.9, 0], [0, 1]]))
    with pytest.raises(ValueError):
        entmeas.qubit_family(1.3)
    with pytest.raises(entmeas.DimensionError):
        entmeas.entangling_measurement(np.ones((7, 7)))
    # non-PSD matrices are accepted only when validation is switched off
    m = entmeas.entangling_measurement(np.array([[1, 1.3], [1.3, 1]]), validate=False)
    assert not entmeas.is_completely_positive(m)


def test_canonical_matrix_pattern():
    q = 0.3 + 0.4j
    c = entmeas.matrix_in_eigen_basis(entmeas.entangling_measurement(entmeas.qubit_family(q)),
                                      entmeas.canonical_qubit_basis())
    expected = np.zeros((16, 16), dtype=complex)
    expected[0, 0] = expected[1, 1] = 1
    expected[12, 14] = q
    expected[13, 15] = np.conj(q)
    assert np.abs(c - expected).max() < 1e-10
