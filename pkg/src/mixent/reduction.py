"""Large-n evaluation of the BS bound through a classical surrogate.

Key identity: diagonalize the d x d density ratio as U diag(x) U*. Conjugating
the weighted site sum Y = sum_i a_i (ratio at site i) by U^{⊗n} makes every
term diagonal simultaneously, and the diagonal of rho^{⊗n} in that product
basis factorizes into per-site weights q_k = (U* rho U)_{kk}. Hence

    Tr(rho^{⊗n} phi(Y)) = E[phi(sum_i a_i Z_i)],   phi(t) = t ln t,

with Z_1..Z_n i.i.d. taking value x_k with probability q_k. The identity is
exact; it turns a d^n eigenproblem into a d-outcome expectation, evaluated by
multinomial compression (equal weights), full enumeration (small n), or Monte
Carlo (general weights). It is cross-validated against the dense evaluator by
run_self_check before any large-n number is reported.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln, xlogy
from scipy.stats import binom

from . import weights as wt
from .entropies import xlogx
from .errors import ValidationError
from .linalg import clip_psd, spectral_decompose
from .states import require_density

#: eigenvalue gaps at or below this are treated as degenerate and merged
MERGE_TOL = 1e-10

#: uniform doubles consumed per chunk of the counter-based sample stream
_CHUNK_BUDGET = 2**20


@dataclass(frozen=True)
class ReducedEnsemble:
    """Classical surrogate: ratio eigenvalues with their rho-weights.

    Invariants: probs sum to 1 and sum(probs * values) = Tr(rho * ratio) = 1.
    """

    values: np.ndarray
    probs: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        q = np.asarray(self.probs, dtype=float)
        if v.shape != q.shape or v.ndim != 1 or v.size < 1:
            raise ValidationError("ensemble needs matching 1-d values and probs")
        if abs(q.sum() - 1.0) > 1e-12:
            raise ValidationError(f"ensemble probs sum to {q.sum()!r}, expected 1")
        if abs(q @ v - 1.0) > 1e-10:
            raise ValidationError(f"ensemble mean is {q @ v!r}, expected 1 (Tr rho*ratio)")
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "probs", q)

    @property
    def dim(self) -> int:
        return self.values.size

    def moment(self, k: int) -> float:
        return float(self.probs @ self.values**k)


@dataclass(frozen=True)
class McEstimate:
    """Monte Carlo mean with its standard error (sample std / sqrt(samples))."""

    mean: float
    std_error: float
    samples: int
    seed: int


def reduce_to_ensemble(rho: np.ndarray, ratio_op: np.ndarray, merge_tol: float = MERGE_TOL) -> ReducedEnsemble:
    """Eigenvalues of the ratio operator paired with rho's diagonal in its basis.

    Degenerate eigenvalues (gap <= merge_tol) are merged by summing their
    weights; any orthonormal basis of a degenerate eigenspace induces the same
    merged distribution.
    """
    rho = require_density(rho, "rho")
    decomp = spectral_decompose(ratio_op, "ratio operator")
    vals = clip_psd(decomp.eigenvalues, name="ratio operator")
    q = np.real(np.sum(decomp.eigenvectors.conj() * (rho @ decomp.eigenvectors), axis=0))
    q = np.clip(q, 0.0, None)

    merged_vals, merged_q = [], []
    for x, qk in zip(vals, q):
        if merged_vals and x - merged_vals[-1] <= merge_tol:
            merged_q[-1] += qk
        else:
            merged_vals.append(x)
            merged_q.append(qk)
    return ReducedEnsemble(np.asarray(merged_vals), np.asarray(merged_q))


def _compositions(n: int, d: int) -> np.ndarray:
    """All count vectors (c_1..c_d) with sum n, as an array of shape (#, d)."""
    if d == 1:
        return np.array([[n]], dtype=np.int64)
    bars = np.asarray(list(itertools.combinations(range(n + d - 1), d - 1)), dtype=np.int64)
    ext = np.hstack(
        [
            np.full((len(bars), 1), -1, dtype=np.int64),
            bars,
            np.full((len(bars), 1), n + d - 1, dtype=np.int64),
        ]
    )
    return np.diff(ext, axis=1) - 1


def bs_exchangeable_exact(ens: ReducedEnsemble, n: int) -> float:
    """E[phi(mean of n i.i.d. draws)] summed exactly over multinomial counts.

    Valid for equal weights a_i = 1/n only. Cost is O(n^{d-1}) terms, which is
    comfortable for d <= 4.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if ens.dim == 1:
        return float(xlogx(ens.values[0]))
    counts = _compositions(n, ens.dim)
    log_pmf = (
        gammaln(n + 1)
        - gammaln(counts + 1.0).sum(axis=1)
        + xlogy(counts, ens.probs).sum(axis=1)
    )
    means = (counts @ ens.values) / n
    return float(np.exp(log_pmf) @ xlogx(means))


def bs_enumerated(ens: ReducedEnsemble, weight_row: np.ndarray, n: int, block: int = 1) -> float:
    """E[phi(weighted sum)] by brute-force enumeration of all d^n site tuples.

    Supports arbitrary weight rows and k-site blocks (the block value at
    position i is the product of the k consecutive site draws). Intended for
    small n; this is the cross-validation oracle for the other evaluators.
    """
    weight_row = np.asarray(weight_row, dtype=float)
    if block < 1 or n < block:
        raise ValueError(f"need n >= block >= 1, got n={n}, block={block}")
    if len(weight_row) != n - block + 1:
        raise ValueError(f"weight row has length {len(weight_row)}, expected {n - block + 1}")
    d = ens.dim
    if d**n > 2**22:
        raise ValueError(f"enumeration over {d}^{n} tuples is not practical")

    def site_axis(values: np.ndarray, s: int) -> np.ndarray:
        shape = [1] * n
        shape[s] = d
        return values.reshape(shape)

    total = np.zeros((d,) * n)
    for i, a_i in enumerate(weight_row):
        term = np.ones((1,) * n)
        for s in range(i, i + block):
            term = term * site_axis(ens.values, s)
        total = total + a_i * term
    prob = np.ones((1,) * n)
    for s in range(n):
        prob = prob * site_axis(ens.probs, s)
    return float(np.sum(prob * xlogx(total)))


def _stream_uniforms(seed: int, n: int, first_sample: int, count: int, stride: int) -> np.ndarray:
    """Uniforms for samples [first_sample, first_sample + count) of the (seed, n) stream.

    Sample j owns a fixed window of the Philox output stream keyed by
    (seed, n): raw positions [j * stride_raw, (j+1) * stride_raw) with
    stride_raw the stride rounded up to the 4-output counter block. The
    window is reached by setting the counter directly, so the result is a
    pure function of (seed, n, j) and independent of chunking.
    """
    blocks_per_sample = -(-stride // 4)
    counter = np.zeros(4, dtype=np.uint64)
    counter[0] = np.uint64(first_sample * blocks_per_sample)
    key = np.array([seed & 0xFFFFFFFFFFFFFFFF, n & 0xFFFFFFFFFFFFFFFF], dtype=np.uint64)
    g = np.random.Generator(np.random.Philox(key=key, counter=counter))
    u = g.random(count * 4 * blocks_per_sample)
    return u.reshape(count, 4 * blocks_per_sample)[:, :stride]


def _iter_weighted_sums(
    ens: ReducedEnsemble, weight_row: np.ndarray, n: int, samples: int, seed: int
):
    """Yield chunks of i.i.d. realizations of W = sum_i a_i Z_i.

    Equal rows compress to multinomial counts drawn by inverse-CDF conditional
    binomials (d - 1 uniforms per sample); general rows draw one categorical
    per site (n uniforms per sample).
    """
    d = ens.dim
    exchangeable = wt.is_exchangeable(weight_row)
    stride = (d - 1) if exchangeable else n
    per_chunk = max(1, _CHUNK_BUDGET // max(stride, 1))
    cdf_first = binom.cdf(np.arange(n + 1), n, ens.probs[0]) if exchangeable else None
    cumq = np.cumsum(ens.probs)

    produced = 0
    while produced < samples:
        m = min(per_chunk, samples - produced)
        u = _stream_uniforms(seed, n, produced, m, stride)
        if exchangeable:
            counts = np.empty((m, d), dtype=np.int64)
            counts[:, 0] = np.minimum(np.searchsorted(cdf_first, u[:, 0], side="left"), n)
            remaining = n - counts[:, 0]
            tail_prob = 1.0 - ens.probs[0]
            for k in range(1, d - 1):
                p = np.clip(ens.probs[k] / tail_prob, 0.0, 1.0) if tail_prob > 0 else 0.0
                counts[:, k] = binom.ppf(u[:, k], remaining, p).astype(np.int64)
                remaining = remaining - counts[:, k]
                tail_prob -= ens.probs[k]
            counts[:, d - 1] = remaining
            yield (counts @ ens.values) / n
        else:
            idx = np.searchsorted(cumq, u, side="left")
            yield ens.values[np.minimum(idx, d - 1)] @ weight_row
        produced += m


def sample_weighted_sums(
    ens: ReducedEnsemble, scheme: wt.WeightScheme, n: int, samples: int, seed: int
) -> np.ndarray:
    """Materialize `samples` draws of the weighted sum W (for diagnostics)."""
    weight_row = wt.row(scheme, n)
    if ens.dim == 1:
        return np.full(samples, float(ens.values[0]))
    return np.concatenate(list(_iter_weighted_sums(ens, weight_row, n, samples, seed)))


def bs_monte_carlo(
    ens: ReducedEnsemble, scheme: wt.WeightScheme, n: int, samples: int, seed: int
) -> McEstimate:
    """Monte Carlo estimate of E[phi(W)] with reproducible seeded streams.

    Deterministic for fixed (seed, samples, scheme, n), independent of how
    samples are partitioned into chunks.
    """
    if samples < 100:
        raise ValueError(f"need samples >= 100, got {samples}")
    weight_row = wt.row(scheme, n)
    if ens.dim == 1:
        return McEstimate(float(xlogx(ens.values[0])), 0.0, samples, seed)
    # exact (fsum) accumulation: the totals depend only on the sample multiset,
    # so any partitioning of sample indices reproduces bit-identically
    chunks = [xlogx(sums) for sums in _iter_weighted_sums(ens, weight_row, n, samples, seed)]
    total = math.fsum(itertools.chain.from_iterable(c.tolist() for c in chunks))
    total_sq = math.fsum(itertools.chain.from_iterable((c * c).tolist() for c in chunks))
    mean = total / samples
    var = max(total_sq - samples * mean * mean, 0.0) / (samples - 1)
    return McEstimate(mean, float(np.sqrt(var / samples)), samples, seed)


_SELF_CHECK_CACHE: list | None = None


def run_self_check() -> list[tuple[str, float, float]]:
    """Cross-validate the reduction identity against the dense evaluator.

    Returns (name, residual, tolerance) triples; residual <= tolerance means
    pass. Cached per process after the first call.
    """
    global _SELF_CHECK_CACHE
    if _SELF_CHECK_CACHE is not None:
        return _SELF_CHECK_CACHE

    from . import mixtures
    from .probes import random_density
    from .states import density_ratio, gibbs_state, perturb_unitary

    checks = []
    rng = np.random.default_rng(515301)

    hadamard = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
    rho2 = gibbs_state(np.diag([0.0, 1.0]), 1.0)
    sig2 = perturb_unitary(rho2, hadamard)
    rho3 = random_density(3, rng)
    sig3 = random_density(3, rng)

    for label, rho, sigma, ns in (("qubit", rho2, sig2, (2, 4, 6)), ("qutrit", rho3, sig3, (2, 3))):
        ens = reduce_to_ensemble(rho, density_ratio(rho, sigma))
        checks.append(
            (f"ensemble probs sum ({label})", abs(float(ens.probs.sum()) - 1.0), 1e-12)
        )
        checks.append((f"ensemble mean ({label})", abs(ens.moment(1) - 1.0), 1e-10))
        for n in ns:
            dense = mixtures.dense_bs_bound(rho, sigma, wt.uniform(), n)
            checks.append(
                (
                    f"exchangeable vs dense ({label}, n={n})",
                    abs(bs_exchangeable_exact(ens, n) - dense),
                    1e-10,
                )
            )
        for scheme in (wt.triangular(), wt.window(2)):
            n = ns[-1]
            dense = mixtures.dense_bs_bound(rho, sigma, scheme, n)
            enum = bs_enumerated(ens, wt.row(scheme, n), n)
            checks.append(
                (f"enumeration vs dense ({label}, {scheme.family}, n={n})", abs(enum - dense), 1e-9)
            )

    _SELF_CHECK_CACHE = checks
    return checks


def require_validated() -> None:
    """Gate for large-n reporting: raise unless the self-check battery passes."""
    failures = [(name, res, tol) for name, res, tol in run_self_check() if res > tol]
    if failures:
        detail = "; ".join(f"{name}: residual {res:.3e} > {tol:.0e}" for name, res, tol in failures)
        raise ValidationError(f"reduction self-check failed: {detail}")
