import math

import numpy as np
import pytest

import spinlab

K = spinlab.HamiltonianSpec.photon_graviton()


def test_hamiltonian_is_hermitian_and_traceless():
    h = spinlab.hamiltonian(K)
    assert h.shape == (45, 45)
    assert np.allclose(h, h.conj().T, atol=0)
    assert abs(np.trace(h)) < 1e-12
    assert abs(np.trace(h @ h).real - 120) < 1e-10


def test_spectrum_against_numpy():
    clusters = spinlab.spectrum(K)
    assert [m for _, m in clusters] == [3, 6, 1, 3, 6, 7, 6, 3, 1, 6, 3]
    reference = np.linalg.eigvalsh(spinlab.hamiltonian(K))
    assert np.allclose(spinlab.eigenvalues(K), reference, atol=1e-10)
    outer = math.sqrt((9 + math.sqrt(33)) / 2)
    assert abs(clusters[-1][0] - outer) < 1e-10


def test_charpoly_and_bound():
    coeffs = spinlab.charpoly(K)
    assert len(coeffs) == 46
    assert coeffs[0] == "1" and coeffs[2] == "-60"
    assert spinlab.charpoly_string(spinlab.HamiltonianSpec.spin_half_photon()).startswith("lambda^12")
    exact, value = spinlab.row_sum_bound(K)
    assert exact == "(4)*sqrt3"
    assert abs(value - 4 * math.sqrt(3)) < 1e-12


def test_schmidt_of_sqrt3_eigenvector():
    w = np.array(spinlab.simple_eigenvector(K, math.sqrt(3)))
    ref = np.array(spinlab.reference_eigenvector(+1))
    phase = np.vdot(ref, w)
    assert np.max(np.abs(w - phase / abs(phase) * ref)) < 1e-10
    for left in ([0, 2], [0], [0, 1]):
        r = spinlab.schmidt(w, [3, 5, 3], left)
        assert r["rank"] == 3
        assert np.allclose(r["coefficients"][:3], 1 / math.sqrt(3), atol=1e-10)
        assert abs(r["entropy"] - math.log(3)) < 1e-10
        assert r["reconstruction_error"] < 1e-12


def test_symmetry_and_commutant():
    assert spinlab.is_symmetry(K, "not x id x not")
    assert not spinlab.is_symmetry(K, "not x not x not")
    assert spinlab.commutant_dimension(K) == 231
    assert spinlab.commutant_dimension(spinlab.HamiltonianSpec.spin_half_graviton()) == 80


def test_errors_are_reported():
    with pytest.raises(spinlab.SpinlabError, match="malformed"):
        spinlab.HamiltonianSpec.from_json('{"factors": ["1"], "terms": [["x", "y"]]}')
    with pytest.raises(spinlab.SpinlabError):
        spinlab.simple_eigenvector(K, 0.0)
    spec = spinlab.HamiltonianSpec.from_json('{"factors": ["1/2", "1/2"], "terms": [["z", "z"]]}')
    assert spec.dims == [2, 2]
