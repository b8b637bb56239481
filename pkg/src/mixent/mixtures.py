"""Dense construction of weighted mixture states and their exact entropies.

The mixture on n sites replaces a sliding block of k sites of rho^{⊗n} by
sigma^{⊗k}, weighted by a row of n-k+1 scheme weights:

    mix = sum_i a_i  rho^{⊗(i-1)} ⊗ sigma^{⊗k} ⊗ rho^{⊗(n-k-i+1)}.

Everything here is exact dense linear algebra and subject to the dense cap;
large n belongs to the reduction module.
"""

from __future__ import annotations

import numpy as np

from . import weights as wt
from .entropies import relative_entropy, xlogx
from .linalg import check_capacity, clip_psd, hermitize, kron_power, spectral_decompose
from .states import density_ratio, require_density


def _validate_sites(n: int, block: int) -> None:
    if block < 1 or n < block:
        raise ValueError(f"need n >= block >= 1, got n={n}, block={block}")


def mixture_state(
    rho: np.ndarray,
    sigma: np.ndarray,
    scheme: wt.WeightScheme,
    n: int,
    block: int = 1,
    cap: int | None = None,
) -> np.ndarray:
    """Build the weighted mixture state on n sites (dense, dim d^n)."""
    _validate_sites(n, block)
    rho = require_density(rho, "rho")
    sigma = require_density(sigma, "sigma")
    d = rho.shape[0]
    check_capacity(d**n, cap)
    a = wt.row(scheme, n - block + 1)
    sig_block = kron_power(sigma, block, cap)
    out = np.zeros((d**n, d**n), dtype=complex)
    left = np.eye(1, dtype=complex)
    for i, a_i in enumerate(a):
        right = kron_power(rho, n - block - i, cap)
        out += a_i * np.kron(left, np.kron(sig_block, right))
        left = np.kron(left, rho)
    return hermitize(out)


def weighted_site_sum(
    op: np.ndarray,
    scheme: wt.WeightScheme,
    n: int,
    block: int = 1,
    cap: int | None = None,
) -> np.ndarray:
    """sum_i a_i * (op embedded at sites i..i+block-1) on n sites.

    op has dim d^block. Sandwiching this sum between (rho^{1/2})^{⊗n} factors,
    with op the density ratio of (rho, sigma^{⊗block}), reproduces
    mixture_state; that reconstruction identity is part of the test contract.
    """
    _validate_sites(n, block)
    op = np.asarray(op, dtype=complex)
    d = round(op.shape[0] ** (1.0 / block))
    if d**block != op.shape[0]:
        raise ValueError(f"operator dim {op.shape[0]} is not a {block}-th power of an integer")
    check_capacity(d**n, cap)
    a = wt.row(scheme, n - block + 1)
    dim = d**n
    out = np.zeros((dim, dim), dtype=complex)
    for i, a_i in enumerate(a):
        left = np.eye(d**i, dtype=complex)
        right = np.eye(d ** (n - block - i), dtype=complex)
        out += a_i * np.kron(left, np.kron(op, right))
    return hermitize(out)


def dense_relative_entropy(
    rho: np.ndarray,
    sigma: np.ndarray,
    scheme: wt.WeightScheme,
    n: int,
    block: int = 1,
    cap: int | None = None,
) -> float:
    """S(mixture || rho^{⊗n}) by full eigendecomposition."""
    mix = mixture_state(rho, sigma, scheme, n, block, cap)
    return relative_entropy(mix, kron_power(rho, n, cap))


def dense_bs_bound(
    rho: np.ndarray,
    sigma: np.ndarray,
    scheme: wt.WeightScheme,
    n: int,
    block: int = 1,
    cap: int | None = None,
) -> float:
    """The BS upper bound Tr(rho^{⊗n} phi(Y)) with Y the weighted ratio sum.

    Y = weighted_site_sum of the block density ratio; phi(t) = t ln t. Always
    >= dense_relative_entropy up to round-off, with both vanishing at
    sigma = rho.
    """
    _validate_sites(n, block)
    rho = require_density(rho, "rho")
    sigma = require_density(sigma, "sigma")
    check_capacity(rho.shape[0] ** n, cap)
    ratio = density_ratio(rho, sigma)
    ratio_block = kron_power(ratio, block, cap)
    Y = weighted_site_sum(ratio_block, scheme, n, block, cap)
    decomp = spectral_decompose(Y, "weighted ratio sum")
    yvals = clip_psd(decomp.eigenvalues, name="weighted ratio sum")
    ref = kron_power(rho, n, cap)
    # diagonal of V* ref V without forming the conjugated matrix
    probs = np.real(np.sum(decomp.eigenvectors.conj() * (ref @ decomp.eigenvectors), axis=0))
    return float(probs @ xlogx(yvals))


__all__ = [
    "mixture_state",
    "weighted_site_sum",
    "dense_relative_entropy",
    "dense_bs_bound",
]
