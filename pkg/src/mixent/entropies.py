"""Entropy and thermodynamic functionals, all in nats.

Relative-type quantities return float('inf') when the support condition
fails; that is a value, not an error.
"""

from __future__ import annotations

import numpy as np
from scipy.special import xlogy

from .errors import ValidationError
from .linalg import clip_psd, kron_power, psd_function, require_hermitian, spectral_decompose
from .states import DENSITY_TRACE_TOL, FULL_RANK_TOL, density_ratio

#: sigma-weight on rho's numerical kernel above this means "support violated"
SUPPORT_WEIGHT_TOL = 1e-10

INFINITE = float("inf")


def xlogx(t):
    """t * ln t with the entropy convention 0 * ln 0 = 0."""
    return xlogy(t, t)


def _density_spectrum(rho: np.ndarray, name: str):
    """Decompose, clip round-off negatives, enforce unit trace."""
    decomp = spectral_decompose(rho, name)
    vals = clip_psd(decomp.eigenvalues, name=name)
    tr = float(vals.sum())
    if abs(tr - 1.0) > DENSITY_TRACE_TOL:
        raise ValidationError(f"{name} violates the trace invariant: trace = {tr!r}, expected 1")
    return vals, decomp.eigenvectors


def von_neumann(rho: np.ndarray) -> float:
    """-Tr rho ln rho."""
    vals, _ = _density_spectrum(rho, "rho")
    return float(-np.sum(xlogx(vals)))


def relative_entropy(sigma: np.ndarray, rho: np.ndarray) -> float:
    """Tr sigma (ln sigma - ln rho); inf when supp(sigma) is not inside supp(rho).

    Evaluated in the two eigenbases: with overlaps O_ij = |<v_i|w_j>|^2 between
    the eigenvectors of sigma (values s) and rho (values r),

        S = sum_i s_i ln s_i - sum_ij s_i O_ij ln r_j.

    Columns of O belonging to rho's numerical kernel (r_j <= 1e-12) carry
    sigma-weight either above SUPPORT_WEIGHT_TOL (then S = inf) or below it
    (round-off; dropped).
    """
    s_vals, s_vecs = _density_spectrum(sigma, "sigma")
    r_vals, r_vecs = _density_spectrum(rho, "rho")
    if s_vals.shape != r_vals.shape:
        raise ValueError(f"dimension mismatch: sigma dim {len(s_vals)} vs rho dim {len(r_vals)}")

    overlaps = np.abs(s_vecs.conj().T @ r_vecs) ** 2
    kernel = r_vals <= FULL_RANK_TOL
    if kernel.any():
        kernel_weight = float(s_vals @ overlaps[:, kernel].sum(axis=1))
        if kernel_weight > SUPPORT_WEIGHT_TOL:
            return INFINITE

    support = ~kernel
    own_term = float(np.sum(xlogx(s_vals)))
    cross_term = float(s_vals @ overlaps[:, support] @ np.log(r_vals[support]))
    return own_term - cross_term


def bs_entropy(sigma: np.ndarray, rho: np.ndarray) -> float:
    """Belavkin-Staszewski divergence Tr(rho * phi(ratio)), phi(t) = t ln t.

    ratio = rho^{-1/2} sigma rho^{-1/2} is Hermitian PSD, so the evaluation
    stays inside Hermitian spectral calculus. Upper-bounds relative_entropy,
    with equality when sigma and rho commute. Requires rho full rank.
    """
    ratio = density_ratio(rho, sigma)
    phi = psd_function(ratio, xlogx, name="density ratio")
    return float(np.trace(rho @ phi).real)


def energy_change(hamiltonian: np.ndarray, rho: np.ndarray, sigma: np.ndarray) -> float:
    """Mean-energy difference Tr(H sigma) - Tr(H rho), in energy units.

    For rho thermal at inverse temperature beta this equals
    beta^{-1} [S(sigma||rho) - (S(sigma) - S(rho))]; the entropy term vanishes
    when sigma is a unitary kick of rho. The sign is reported as computed.
    """
    H = require_hermitian(hamiltonian, "hamiltonian")
    if H.shape != np.shape(rho) or H.shape != np.shape(sigma):
        raise ValueError("dimension mismatch between hamiltonian and states")
    return float(np.trace(H @ sigma).real - np.trace(H @ rho).real)


def free_energy_gap(rho_n: np.ndarray, rho: np.ndarray, n: int, beta: float, cap: int | None = None) -> float:
    """Helmholtz free-energy difference beta^{-1} S(rho_n || rho^{⊗n}).

    rho_n lives on n sites of the single-site state rho. inf propagates from
    the relative entropy.
    """
    if beta <= 0 or not np.isfinite(beta):
        raise ValidationError(f"free energy gap needs beta > 0, got {beta!r}")
    rho_n = np.asarray(rho_n)
    d = np.shape(rho)[0]
    if rho_n.shape[0] != d**n:
        raise ValueError(
            f"dimension mismatch: rho_n has dim {rho_n.shape[0]}, expected {d}^{n} = {d**n}"
        )
    return relative_entropy(rho_n, kron_power(rho, n, cap)) / beta
