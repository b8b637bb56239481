"""Dense Hermitian spectral calculus and tensor-product embeddings.

All operators are plain complex numpy arrays. Functions here are pure; nothing
is mutated in place.
"""

from __future__ import annotations

import os
from typing import Callable, NamedTuple

import numpy as np

from .errors import CapacityError, DomainError, RankError, ValidationError

#: Largest dense dimension built by default; override per call or via the
#: MIXENT_DENSE_CAP environment variable.
DEFAULT_DENSE_CAP = 2**14
DENSE_CAP_ENV = "MIXENT_DENSE_CAP"

HERMITICITY_RTOL = 1e-10
PSD_CLIP_TOL = 1e-10
UNITARITY_TOL = 1e-10


def dense_cap(cap: int | None = None) -> int:
    """Resolve the dense dimension cap: explicit value, environment, default."""
    if cap is not None:
        return int(cap)
    env = os.environ.get(DENSE_CAP_ENV)
    return int(env) if env else DEFAULT_DENSE_CAP


def check_capacity(dim: int, cap: int | None = None) -> None:
    limit = dense_cap(cap)
    if dim > limit:
        raise CapacityError(
            f"dense dimension {dim} exceeds the cap {limit}; "
            f"use the reduction evaluators or raise the cap"
        )


def max_norm(A: np.ndarray) -> float:
    """Entrywise max norm ||A||_max."""
    return float(np.max(np.abs(A))) if A.size else 0.0


def hermitize(A: np.ndarray) -> np.ndarray:
    """Hermitian part (A + A*)/2; used to scrub round-off after products."""
    return (A + A.conj().T) / 2


def is_hermitian(A: np.ndarray, rtol: float = HERMITICITY_RTOL) -> bool:
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        return False
    return max_norm(A - A.conj().T) <= rtol * max_norm(A)


def require_hermitian(A: np.ndarray, name: str = "operator") -> np.ndarray:
    """Validate the Hermiticity invariant and return the array as complex."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise ValidationError(f"{name} must be a square matrix of dim >= 1, got shape {A.shape}")
    dev = max_norm(A - A.conj().T)
    if dev > HERMITICITY_RTOL * max_norm(A):
        raise ValidationError(
            f"{name} is not Hermitian: ||A - A*||_max = {dev:.3e} "
            f"exceeds {HERMITICITY_RTOL:.0e} * ||A||_max"
        )
    return A


def require_unitary(U: np.ndarray, name: str = "unitary") -> np.ndarray:
    U = np.asarray(U, dtype=complex)
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        raise ValidationError(f"{name} must be a square matrix, got shape {U.shape}")
    dev = max_norm(U @ U.conj().T - np.eye(U.shape[0]))
    if dev > UNITARITY_TOL:
        raise ValidationError(f"{name} fails the unitarity check: ||UU* - I||_max = {dev:.3e}")
    return U


class SpectralDecomposition(NamedTuple):
    """Eigenvalues ascending, eigenvectors as orthonormal columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)


def spectral_decompose(A: np.ndarray, name: str = "operator") -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian matrix (validates Hermiticity first)."""
    A = require_hermitian(A, name)
    vals, vecs = np.linalg.eigh(A)
    return SpectralDecomposition(vals, vecs)


def clip_psd(values: np.ndarray, tol: float = PSD_CLIP_TOL, name: str = "operator") -> np.ndarray:
    """Clip round-off negatives of a nominally PSD spectrum to zero.

    Values in [-tol, 0) are treated as round-off; anything below -tol means the
    operator is genuinely indefinite and raises.
    """
    values = np.asarray(values, dtype=float)
    lowest = float(values.min())
    if lowest < -tol:
        raise ValidationError(
            f"{name} has eigenvalue {lowest:.3e} below -{tol:.0e}; not positive semidefinite"
        )
    return np.clip(values, 0.0, None)


def matrix_function(decomp: SpectralDecomposition, f: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """Apply a real scalar function through the spectral decomposition.

    Returns U diag(f(lambda)) U*. Raises DomainError if f is undefined
    (non-finite) at any eigenvalue.
    """
    with np.errstate(invalid="ignore", divide="ignore"):
        fvals = np.asarray(f(np.asarray(decomp.eigenvalues, dtype=float)), dtype=float)
    if fvals.shape != decomp.eigenvalues.shape:
        raise ValueError("scalar function must map the eigenvalue vector elementwise")
    if not np.all(np.isfinite(fvals)):
        bad = decomp.eigenvalues[~np.isfinite(fvals)]
        raise DomainError(f"scalar function undefined at eigenvalue(s) {bad}")
    vecs = decomp.eigenvectors
    return hermitize((vecs * fvals) @ vecs.conj().T)


def psd_function(
    A: np.ndarray,
    f: Callable[[np.ndarray], np.ndarray],
    clip_tol: float = PSD_CLIP_TOL,
    name: str = "operator",
) -> np.ndarray:
    """matrix_function for a nominally PSD matrix, with the clipping policy applied."""
    decomp = spectral_decompose(A, name)
    vals = clip_psd(decomp.eigenvalues, clip_tol, name)
    return matrix_function(SpectralDecomposition(vals, decomp.eigenvectors), f)


def inv_sqrt_psd(A: np.ndarray, rank_tol: float = 1e-12, name: str = "operator") -> np.ndarray:
    """A^{-1/2} for a Hermitian positive definite matrix.

    Eigenvalues at or below rank_tol raise RankError: inverting across a
    numerical kernel would amplify noise past every stated tolerance.
    """
    decomp = spectral_decompose(A, name)
    if float(decomp.eigenvalues.min()) <= rank_tol:
        raise RankError(
            f"{name} is singular at tolerance {rank_tol:.0e} "
            f"(min eigenvalue {decomp.eigenvalues.min():.3e})"
        )
    return matrix_function(decomp, lambda t: t**-0.5)


def kron(A: np.ndarray, B: np.ndarray, cap: int | None = None) -> np.ndarray:
    """Kronecker product with the dense-cap guard."""
    A = np.asarray(A)
    B = np.asarray(B)
    check_capacity(A.shape[0] * B.shape[0], cap)
    return np.kron(A, B)


def kron_power(A: np.ndarray, n: int, cap: int | None = None) -> np.ndarray:
    """n-fold Kronecker power A^{⊗n}; n = 0 gives the 1x1 identity."""
    if n < 0:
        raise ValueError(f"kron power needs n >= 0, got {n}")
    A = np.asarray(A, dtype=complex)
    check_capacity(A.shape[0] ** n, cap)
    out = np.eye(1, dtype=complex)
    for _ in range(n):
        out = np.kron(out, A)
    return out


def embed_at_site(
    X: np.ndarray, site: int, n: int, d: int, cap: int | None = None
) -> np.ndarray:
    """Embed X into n sites of local dimension d, acting from position `site`.

    For a single-site X (dim d) this is I^{⊗site} ⊗ X ⊗ I^{⊗(n-1-site)}.
    X may also span k consecutive sites (dim d^k), occupying sites
    site..site+k-1.
    """
    X = np.asarray(X, dtype=complex)
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    span = round(np.log(X.shape[0]) / np.log(d)) if d > 1 else 1
    if d**span != X.shape[0]:
        raise ValueError(f"operator dim {X.shape[0]} is not a power of the site dim {d}")
    if not 0 <= site <= n - span:
        raise ValueError(f"site {site} out of range for {span}-site operator on {n} sites")
    check_capacity(d**n, cap)
    left = np.eye(d**site, dtype=complex)
    right = np.eye(d ** (n - site - span), dtype=complex)
    return np.kron(left, np.kron(X, right))
