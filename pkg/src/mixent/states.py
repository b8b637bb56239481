"""Physical states: thermal equilibrium states, unitary kicks, density ratios.

rho denotes the reference (thermal) state and sigma the perturbed one
throughout the package.
"""

from __future__ import annotations

import numpy as np

from .errors import ValidationError
from .linalg import (
    PSD_CLIP_TOL,
    SpectralDecomposition,
    clip_psd,
    hermitize,
    inv_sqrt_psd,
    matrix_function,
    require_hermitian,
    require_unitary,
    spectral_decompose,
)

DENSITY_TRACE_TOL = 1e-10
FULL_RANK_TOL = 1e-12


def require_density(rho: np.ndarray, name: str = "density matrix") -> np.ndarray:
    """Validate the density-matrix invariants: Hermitian, PSD, unit trace."""
    rho = require_hermitian(rho, name)
    tr = float(np.trace(rho).real)
    if abs(tr - 1.0) > DENSITY_TRACE_TOL:
        raise ValidationError(f"{name} violates the trace invariant: trace = {tr!r}, expected 1")
    clip_psd(np.linalg.eigvalsh(rho), PSD_CLIP_TOL, name)
    return rho


def gibbs_state(hamiltonian: np.ndarray, beta: float) -> np.ndarray:
    """Thermal state exp(-beta H)/Tr exp(-beta H).

    Computed through the spectrum with the exponent shifted by the ground
    energy, so any finite (H, beta) is safe from overflow; the shift cancels
    in the quotient. beta = 0 gives the maximally mixed state.
    """
    H = require_hermitian(hamiltonian, "hamiltonian")
    if not np.isfinite(beta) or beta < 0:
        raise ValidationError(f"beta must be a finite nonnegative real, got {beta!r}")
    vals, vecs = np.linalg.eigh(H)
    w = np.exp(-beta * (vals - vals.min()))
    w /= w.sum()
    return hermitize((vecs * w) @ vecs.conj().T)


def perturb_unitary(rho: np.ndarray, unitary: np.ndarray) -> np.ndarray:
    """Conjugated state U rho U*; preserves the spectrum, so entropy too."""
    rho = require_density(rho)
    U = require_unitary(unitary, "perturbation")
    if U.shape != rho.shape:
        raise ValueError(f"dimension mismatch: state {rho.shape} vs perturbation {U.shape}")
    return hermitize(U @ rho @ U.conj().T)


def density_ratio(rho: np.ndarray, sigma: np.ndarray, rank_tol: float = FULL_RANK_TOL) -> np.ndarray:
    """Symmetrized density ratio rho^{-1/2} sigma rho^{-1/2}.

    The noncommutative analogue of the likelihood ratio d sigma / d rho: it is
    Hermitian PSD and satisfies Tr(rho * ratio) = Tr(sigma) = 1. Requires rho
    full rank (eigenvalues above rank_tol).
    """
    rho = require_hermitian(rho, "rho")
    sigma = require_hermitian(sigma, "sigma")
    if rho.shape != sigma.shape:
        raise ValueError(f"dimension mismatch: rho {rho.shape} vs sigma {sigma.shape}")
    inv_half = inv_sqrt_psd(rho, rank_tol, "rho")
    ratio = hermitize(inv_half @ sigma @ inv_half)
    # scrub round-off negatives so downstream spectral calls see a clean PSD operator
    decomp = spectral_decompose(ratio, "density ratio")
    vals = clip_psd(decomp.eigenvalues, name="density ratio")
    return matrix_function(SpectralDecomposition(vals, decomp.eigenvectors), lambda t: t)
