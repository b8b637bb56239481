import numpy as np
import pytest
from scipy.linalg import logm

from mixent import (
    bs_entropy,
    energy_change,
    free_energy_gap,
    gibbs_state,
    kron,
    kron_power,
    perturb_unitary,
    relative_entropy,
    von_neumann,
)
from mixent.linalg import hermitize
from mixent.probes import random_density, random_hermitian, random_unitary

from conftest import H_QUBIT, P

# frozen oracles for the running example (scalar arithmetic / scipy.linalg.logm)
VN_RHO = 0.5822031088882179          # -p ln p - (1-p) ln(1-p)
REL_ENT = 0.2310585786300049         # p - 1/2
BS_PAIR = 0.2493545520517928         # Tr(rho X ln X), X the closed-form ratio


class TestVonNeumann:
    def test_pure_state(self):
        assert abs(von_neumann(np.diag([1.0, 0.0, 0.0]))) < 1e-12

    def test_maximally_mixed(self):
        for d in (2, 3, 5):
            assert abs(von_neumann(np.eye(d) / d) - np.log(d)) < 1e-12

    def test_running_example_frozen(self, rho_qubit):
        assert abs(von_neumann(rho_qubit) - VN_RHO) < 1e-12

    def test_unitary_invariance(self):
        rng = np.random.default_rng(17)
        for _ in range(10):
            d = int(rng.integers(2, 5))
            rho = random_density(d, rng)
            sigma = perturb_unitary(rho, random_unitary(d, rng))
            assert abs(von_neumann(sigma) - von_neumann(rho)) < 1e-10

    def test_bounded_by_log_dim(self):
        rng = np.random.default_rng(18)
        for _ in range(10):
            d = int(rng.integers(2, 6))
            value = von_neumann(random_density(d, rng))
            assert -1e-12 <= value <= np.log(d) + 1e-9


class TestRelativeEntropy:
    def test_self_is_zero(self):
        rng = np.random.default_rng(19)
        for _ in range(5):
            rho = random_density(3, rng)
            assert abs(relative_entropy(rho, rho)) < 1e-10

    def test_running_example_frozen(self, rho_qubit, sigma_qubit):
        value = relative_entropy(sigma_qubit, rho_qubit)
        assert abs(value - REL_ENT) < 1e-12
        # cross-check against an independent dense route
        dense = np.trace(sigma_qubit @ (logm(sigma_qubit) - logm(rho_qubit))).real
        assert abs(value - dense) < 1e-10

    def test_disjoint_supports_infinite(self):
        sigma = np.diag([1.0, 0.0])
        rho = np.diag([0.0, 1.0])
        assert relative_entropy(sigma, rho) == float("inf")

    def test_support_inside_is_finite(self):
        sigma = np.diag([1.0, 0.0])
        rho = np.diag([0.5, 0.5])
        assert np.isfinite(relative_entropy(sigma, rho))

    def test_additivity_over_tensor_factor(self, rho_qubit, sigma_qubit):
        lhs = relative_entropy(kron(sigma_qubit, rho_qubit), kron(rho_qubit, rho_qubit))
        assert abs(lhs - relative_entropy(sigma_qubit, rho_qubit)) < 1e-10

    def test_additivity_powers(self, rho_qubit, sigma_qubit):
        base = relative_entropy(sigma_qubit, rho_qubit)
        for k in (2, 3, 4):
            lhs = relative_entropy(kron_power(sigma_qubit, k), kron_power(rho_qubit, k))
            assert abs(lhs - k * base) < 1e-9 * k

    def test_klein_inequality_both_directions(self):
        rng = np.random.default_rng(20)
        for _ in range(10):
            d = int(rng.integers(2, 5))
            rho = random_density(d, rng)
            # near-identical pair: tiny value and tiny distance
            bump = hermitize(1e-8 * random_hermitian(d, rng))
            bump -= np.trace(bump) / d * np.eye(d)
            near = hermitize(rho + bump)
            value = relative_entropy(near, rho)
            assert -1e-9 <= value <= 1e-9
            assert np.max(np.abs(near - rho)) <= 1e-7
            # clearly distinct pair: distance above 1e-7 forces value above 1e-9
            far = random_density(d, rng)
            if np.max(np.abs(far - rho)) > 1e-3:
                assert relative_entropy(far, rho) > 1e-9

    def test_nonnegative_on_random_pairs(self):
        rng = np.random.default_rng(21)
        for _ in range(20):
            d = int(rng.integers(2, 5))
            value = relative_entropy(random_density(d, rng), random_density(d, rng))
            assert value >= -1e-9


class TestBsEntropy:
    def test_self_is_zero(self, rho_qubit):
        assert abs(bs_entropy(rho_qubit, rho_qubit)) < 1e-12

    def test_commuting_pair_equals_relative_entropy(self):
        sigma = np.diag([0.2, 0.3, 0.5])
        rho = np.diag([0.4, 0.4, 0.2])
        assert abs(bs_entropy(sigma, rho) - relative_entropy(sigma, rho)) < 1e-10

    def test_running_example_frozen(self, rho_qubit, sigma_qubit):
        value = bs_entropy(sigma_qubit, rho_qubit)
        assert abs(value - BS_PAIR) < 1e-9
        assert value >= REL_ENT

    def test_sandwich_on_random_pairs(self):
        rng = np.random.default_rng(22)
        for _ in range(20):
            d = int(rng.integers(2, 5))
            rho = random_density(d, rng)
            sigma = random_density(d, rng)
            assert relative_entropy(sigma, rho) <= bs_entropy(sigma, rho) + 1e-9


class TestEnergyChange:
    def test_equal_states(self, rho_qubit):
        assert energy_change(H_QUBIT, rho_qubit, rho_qubit) == 0.0

    def test_running_example_frozen(self, rho_qubit, sigma_qubit):
        # both sides computed independently: Tr(H sigma) - Tr(H rho) vs p - 1/2
        value = energy_change(H_QUBIT, rho_qubit, sigma_qubit)
        assert abs(value - (0.5 - (1 - P))) < 1e-12
        assert abs(value - relative_entropy(sigma_qubit, rho_qubit)) < 1e-10

    def test_commuting_kick_gives_zero(self, rho_qubit):
        U = np.diag([1.0, np.exp(0.9j)])
        sigma = perturb_unitary(rho_qubit, U)
        assert abs(energy_change(H_QUBIT, rho_qubit, sigma)) < 1e-12

    def test_identity_on_random_probes(self):
        rng = np.random.default_rng(23)
        for _ in range(10):
            d = int(rng.integers(2, 5))
            H = random_hermitian(d, rng)
            beta = float(rng.uniform(0.2, 3.0))
            rho = gibbs_state(H, beta)
            sigma = perturb_unitary(rho, random_unitary(d, rng))
            lhs = energy_change(H, rho, sigma)
            rhs = relative_entropy(sigma, rho) / beta
            assert abs(lhs - rhs) < 1e-10


class TestFreeEnergyGap:
    def test_product_state_gap_zero(self, rho_qubit):
        gap = free_energy_gap(kron_power(rho_qubit, 3), rho_qubit, 3, 1.0)
        assert abs(gap) < 1e-10

    def test_single_site_equals_relative_entropy(self, rho_qubit, sigma_qubit):
        gap = free_energy_gap(sigma_qubit, rho_qubit, 1, 1.0)
        assert abs(gap - REL_ENT) < 1e-10

    def test_one_perturbed_site_additivity(self, rho_qubit, sigma_qubit):
        # sigma on site 1 of three: the gap collapses to S(sigma||rho)/beta
        state = kron(sigma_qubit, kron_power(rho_qubit, 2))
        gap = free_energy_gap(state, rho_qubit, 3, 2.0)
        assert abs(gap - REL_ENT / 2.0) < 1e-10

    def test_dimension_mismatch(self, rho_qubit, sigma_qubit):
        with pytest.raises(ValueError, match="dimension"):
            free_energy_gap(sigma_qubit, rho_qubit, 2, 1.0)

    def test_infinite_propagates(self):
        # reference state with a kernel the perturbed state leaks into
        gap = free_energy_gap(np.diag([0.0, 1.0]), np.diag([1.0, 0.0]), 1, 1.0)
        assert gap == float("inf")
