#!/usr/bin/env python3
"""Energy balance of a single thermal particle kicked by a unitary.

Builds the qubit thermal state at inverse temperature beta, kicks it with a
Hadamard, and verifies the bookkeeping numerically:

  - the kick leaves the von Neumann entropy unchanged,
  - the mean energy rises by exactly S(sigma||rho)/beta,
  - the same quantity is the Helmholtz free-energy gap of the kicked state.
"""

import numpy as np

from mixent import (
    energy_change,
    free_energy_gap,
    gibbs_state,
    perturb_unitary,
    relative_entropy,
    von_neumann,
)

beta = 1.0
H = np.diag([0.0, 1.0])
hadamard = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)

rho = gibbs_state(H, beta)
sigma = perturb_unitary(rho, hadamard)

print("thermal qubit, H = diag(0, 1), beta =", beta)
print("rho  =", np.round(rho.real, 6).tolist())
print("sigma = U rho U* =", np.round(sigma.real, 6).tolist())
print()

S_rho = von_neumann(rho)
S_sigma = von_neumann(sigma)
print(f"entropy before / after the kick: {S_rho:.9f} / {S_sigma:.9f}")
print(f"  informatic entropy production: {S_sigma - S_rho:+.2e} (zero up to round-off)")
print()

dE = energy_change(H, rho, sigma)
S_rel = relative_entropy(sigma, rho)
print(f"mean energy change  dE          = {dE:.9f}")
print(f"relative entropy    S(sigma||rho) = {S_rel:.9f}")
print(f"identity dE = S/beta holds to   {abs(dE - S_rel / beta):.2e}")
print()

gap = free_energy_gap(sigma, rho, 1, beta)
print(f"free-energy gap F(sigma) - F(rho) = {gap:.9f} (= S/beta again)")
print()

# a kick commuting with H does nothing: same identity, trivially zero
U_commuting = np.diag([1.0, np.exp(0.7j)])
sigma_c = perturb_unitary(rho, U_commuting)
print(f"commuting kick: dE = {energy_change(H, rho, sigma_c):.2e}, "
      f"S = {relative_entropy(sigma_c, rho):.2e} (state unchanged)")
