import numpy as np
import pytest

from mixent import gibbs_state, perturb_unitary

# Running example used throughout: d = 2, H = diag(0, 1), beta = 1, Hadamard kick.
P = 1.0 / (1.0 + np.exp(-1.0))  # 0.7310585786300049

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
H_QUBIT = np.diag([0.0, 1.0]).astype(complex)


@pytest.fixture(scope="session")
def rho_qubit():
    return gibbs_state(H_QUBIT, 1.0)


@pytest.fixture(scope="session")
def sigma_qubit(rho_qubit):
    return perturb_unitary(rho_qubit, HADAMARD)
