import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixent import CapacityError, DomainError, ValidationError
from mixent.linalg import (
    clip_psd,
    embed_at_site,
    kron,
    kron_power,
    matrix_function,
    max_norm,
    spectral_decompose,
)
from mixent.probes import random_hermitian

from conftest import P


class TestSpectralDecompose:
    def test_identity(self):
        dec = spectral_decompose(np.eye(2))
        np.testing.assert_allclose(dec.eigenvalues, [1.0, 1.0])

    def test_diagonal_already(self):
        dec = spectral_decompose(np.diag([0.0, 1.0]))
        np.testing.assert_allclose(dec.eigenvalues, [0.0, 1.0])
        np.testing.assert_allclose(np.abs(dec.eigenvectors), np.eye(2), atol=1e-12)

    def test_eigenvalues_ascending(self):
        rng = np.random.default_rng(3)
        for _ in range(5):
            dec = spectral_decompose(random_hermitian(5, rng))
            assert np.all(np.diff(dec.eigenvalues) >= 0)

    def test_columns_orthonormal(self):
        rng = np.random.default_rng(4)
        dec = spectral_decompose(random_hermitian(6, rng))
        gram = dec.eigenvectors.conj().T @ dec.eigenvectors
        assert max_norm(gram - np.eye(6)) < 1e-10

    def test_reconstruction(self):
        rng = np.random.default_rng(5)
        for d in (2, 4, 7):
            A = random_hermitian(d, rng)
            dec = spectral_decompose(A)
            rebuilt = (dec.eigenvectors * dec.eigenvalues) @ dec.eigenvectors.conj().T
            assert max_norm(rebuilt - A) < 1e-9 * d

    def test_ratio_operator_eigenvalue_product(self):
        # the running-example ratio operator in closed form; det sigma = det rho,
        # so the eigenvalue product must be 1
        c = (P - 0.5) / np.sqrt(P * (1 - P))
        X = np.array([[1 / (2 * P), c], [c, 1 / (2 * (1 - P))]])
        det_from_entries = X[0, 0] * X[1, 1] - X[0, 1] * X[1, 0]
        vals = spectral_decompose(X).eigenvalues
        assert abs(vals[0] * vals[1] - det_from_entries) < 1e-9
        assert abs(vals[0] * vals[1] - 1.0) < 1e-9
        assert np.all(vals > 0)

    def test_non_hermitian_rejected(self):
        with pytest.raises(ValidationError, match="Hermitian"):
            spectral_decompose(np.array([[0.0, 1.0], [0.0, 0.0]]))


class TestMatrixFunction:
    def test_identity_function_roundtrip(self):
        rng = np.random.default_rng(6)
        for d in (2, 3, 5):
            A = random_hermitian(d, rng)
            rebuilt = matrix_function(spectral_decompose(A), lambda t: t)
            assert max_norm(rebuilt - A) < 1e-9 * d

    def test_xlogx_of_identity_is_zero(self):
        out = matrix_function(spectral_decompose(np.eye(3)), lambda t: t * np.log(t))
        assert max_norm(out) < 1e-12

    def test_inverse_sqrt_frozen_values(self):
        # oracle: scalar arithmetic, p**-0.5 and (1-p)**-0.5 with p = 1/(1+e^{-1})
        out = matrix_function(spectral_decompose(np.diag([1 - P, P])), lambda t: t**-0.5)
        np.testing.assert_allclose(
            np.sort(np.diag(out).real)[::-1],
            [1.9282846855324671, 1.169563782429775],
            atol=1e-12,
        )

    def test_composition(self):
        rng = np.random.default_rng(7)
        A = random_hermitian(4, rng)
        step1 = matrix_function(spectral_decompose(A), np.exp)
        composed = matrix_function(spectral_decompose(step1), np.log)
        direct = matrix_function(spectral_decompose(A), lambda t: np.log(np.exp(t)))
        assert max_norm(composed - direct) < 1e-8

    def test_log_of_negative_eigenvalue_raises(self):
        dec = spectral_decompose(np.diag([-1.0, 1.0]))
        with pytest.raises(DomainError):
            matrix_function(dec, np.log)


class TestClipPolicy:
    def test_roundoff_negatives_clipped(self):
        out = clip_psd(np.array([-5e-11, 0.3, 0.7]))
        assert out[0] == 0.0
        np.testing.assert_allclose(out[1:], [0.3, 0.7])

    def test_genuine_negative_raises(self):
        with pytest.raises(ValidationError, match="positive semidefinite"):
            clip_psd(np.array([-1e-8, 1.0]))


class TestEmbedding:
    def test_single_site_is_identity_operation(self):
        X = np.array([[1.0, 2.0], [2.0, -1.0]], dtype=complex)
        np.testing.assert_allclose(embed_at_site(X, 0, 1, 2), X)

    def test_identity_embeds_to_identity(self):
        for site in range(3):
            out = embed_at_site(np.eye(2), site, 3, 2)
            np.testing.assert_allclose(out, np.eye(8))

    def test_trace_multiplicativity(self):
        X = np.array([[1.0, 1j], [-1j, 3.0]])
        for site in range(4):
            out = embed_at_site(X, site, 4, 2)
            assert abs(np.trace(out) - 2**3 * np.trace(X)) < 1e-12

    def test_distinct_sites_commute(self):
        rng = np.random.default_rng(8)
        X = random_hermitian(2, rng)
        A = embed_at_site(X, 0, 3, 2)
        B = embed_at_site(X, 2, 3, 2)
        assert max_norm(A @ B - B @ A) < 1e-10

    def test_site_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            embed_at_site(np.eye(2), 3, 3, 2)

    def test_capacity_error(self):
        with pytest.raises(CapacityError):
            embed_at_site(np.eye(2), 0, 20, 2, cap=2**10)


class TestKron:
    def test_identity(self):
        np.testing.assert_allclose(kron(np.eye(2), np.eye(3)), np.eye(6))

    def test_trace_product(self):
        rng = np.random.default_rng(9)
        A = random_hermitian(2, rng)
        B = random_hermitian(3, rng)
        assert abs(np.trace(kron(A, B)) - np.trace(A) * np.trace(B)) < 1e-12

    def test_diagonal_case(self):
        out = kron(np.diag([1.0, 2.0]), np.diag([3.0, 4.0]))
        np.testing.assert_allclose(np.diag(out), [3.0, 4.0, 6.0, 8.0])

    def test_associativity(self):
        rng = np.random.default_rng(10)
        A, B, C = (random_hermitian(2, rng) for _ in range(3))
        assert max_norm(kron(kron(A, B), C) - kron(A, kron(B, C))) < 1e-12

    def test_mixed_product_property(self):
        rng = np.random.default_rng(11)
        A, B, C, D = (random_hermitian(2, rng) for _ in range(4))
        left = kron(A, B) @ kron(C, D)
        right = kron(A @ C, B @ D)
        assert max_norm(left - right) < 1e-12

    def test_kron_power_cap(self):
        with pytest.raises(CapacityError):
            kron_power(np.eye(2), 15)  # 2^15 over the default 2^14 cap


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), d=st.integers(2, 6))
def test_spectral_roundtrip_property(seed, d):
    A = random_hermitian(d, np.random.default_rng(seed))
    dec = spectral_decompose(A)
    rebuilt = matrix_function(dec, lambda t: t)
    assert max_norm(rebuilt - A) < 1e-9 * d
