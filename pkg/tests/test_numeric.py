import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mergedsub.errors import AsymmetricMatrixError, ParameterError
from mergedsub.graph import cycle, laplacian, petersen
from mergedsub.numeric import cluster, compare_spectra, eigen_symmetric, spectrum_of


def test_c4_laplacian_spectrum():
    s = spectrum_of(cycle(4))
    assert [k for _, k in s.entries] == [1, 2, 1]
    assert [v for v, _ in s.entries] == pytest.approx([0, 2, 4], abs=1e-12)
    assert s.to_json()[1]["mult"] == 2


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 9), st.integers(0, 10**6))
def test_jacobi_agrees_with_lapack(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n))
    a = a + a.T
    w1, _ = eigen_symmetric(a)
    w2, v2 = eigen_symmetric(a, method="jacobi")
    assert np.allclose(w1, w2, atol=1e-10 * max(1, np.abs(w1).max()))
    assert np.allclose(v2.T @ v2, np.identity(n), atol=1e-10)


def test_jacobi_on_graph():
    w, _ = eigen_symmetric(laplacian(petersen()), method="jacobi")
    assert np.allclose(w, [0] + [2] * 5 + [5] * 4)


def test_rejects_asymmetric_and_unknown_method():
    with pytest.raises(AsymmetricMatrixError):
        eigen_symmetric([[0, 1], [0, 0]])
    with pytest.raises(ParameterError):
        eigen_symmetric([[1]], method="qr")


def test_cluster_and_compare():
    s = cluster([1.0, 1.0 + 1e-12, 3.0])
    assert s.entries[0][1] == 2 and s.order == 3
    assert compare_spectra([0, 1, 2], [2, 1, 1e-12]).matched
    rep = compare_spectra([0, 1, 2], [0, 1, 2.1])
    assert not rep.matched and rep.max_abs_residual == pytest.approx(0.1)
    with pytest.raises(ParameterError):
        compare_spectra([0, 1], [0])
