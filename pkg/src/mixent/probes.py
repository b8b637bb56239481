"""Seeded random operators for property tests and the verification suite."""

from __future__ import annotations

import numpy as np

from .linalg import hermitize


def random_hermitian(d: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    G = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return hermitize(scale * G)


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR of a Ginibre matrix with phase fixing."""
    G = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    Q, R = np.linalg.qr(G)
    phases = np.diagonal(R) / np.abs(np.diagonal(R))
    return Q * phases


def random_density(d: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    """Random density matrix G G*/Tr(G G*) from a d x rank Ginibre block."""
    r = d if rank is None else rank
    G = rng.normal(size=(d, r)) + 1j * rng.normal(size=(d, r))
    rho = G @ G.conj().T
    return hermitize(rho / np.trace(rho).real)
