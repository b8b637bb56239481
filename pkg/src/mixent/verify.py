"""Built-in verification suite: measured residuals against stated tolerances.

Deterministic (fixed probe seeds); the CLI `verify` subcommand renders the
report and fails the process when any check exceeds its tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import mixtures, reduction
from . import weights as wt
from .entropies import bs_entropy, energy_change, relative_entropy, von_neumann
from .linalg import kron_power, max_norm, psd_function
from .probes import random_density, random_hermitian, random_unitary
from .states import density_ratio, gibbs_state, perturb_unitary

PROBE_SEED = 424243


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _running_example():
    rho = gibbs_state(np.diag([0.0, 1.0]), 1.0)
    hadamard = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
    return rho, perturb_unitary(rho, hadamard)


def run_verify(probes: int = 8) -> VerifyReport:
    rng = np.random.default_rng(PROBE_SEED)
    checks: list[Check] = []

    # thermodynamic identity: Delta E = S(sigma||rho)/beta for unitary kicks
    worst_de = 0.0
    worst_vn = 0.0
    pairs = [(np.diag([0.0, 1.0]), 1.0, np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2))]
    for _ in range(probes):
        d = int(rng.integers(2, 5))
        pairs.append((random_hermitian(d, rng), float(rng.uniform(0.2, 3.0)), random_unitary(d, rng)))
    for H, beta, U in pairs:
        rho = gibbs_state(H, beta)
        sigma = perturb_unitary(rho, U)
        worst_de = max(worst_de, abs(energy_change(H, rho, sigma) - relative_entropy(sigma, rho) / beta))
        worst_vn = max(worst_vn, abs(von_neumann(sigma) - von_neumann(rho)))
    checks.append(Check("energy change equals relative entropy / beta", worst_de, 1e-10))
    checks.append(Check("von Neumann entropy unitarily invariant", worst_vn, 1e-10))

    # sandwich: relative entropy below the BS divergence on random pairs
    worst_gap = 0.0
    for _ in range(probes):
        d = int(rng.integers(2, 5))
        rho = random_density(d, rng)
        sigma = random_density(d, rng)
        worst_gap = max(worst_gap, relative_entropy(sigma, rho) - bs_entropy(sigma, rho))
    checks.append(Check("relative entropy <= BS divergence", max(worst_gap, 0.0), 1e-9))

    # reconstruction: sandwiching the weighted ratio sum rebuilds the mixture
    rho, sigma = _running_example()
    worst_rec = 0.0
    for scheme, n in ((wt.uniform(), 3), (wt.triangular(), 4)):
        ratio = density_ratio(rho, sigma)
        Y = mixtures.weighted_site_sum(ratio, scheme, n)
        half = kron_power(psd_function(rho, np.sqrt), n)
        rebuilt = half @ Y @ half
        mix = mixtures.mixture_state(rho, sigma, scheme, n)
        worst_rec = max(worst_rec, max_norm(rebuilt - mix))
    checks.append(Check("weighted ratio sum reconstructs the mixture", worst_rec, 1e-9))

    # reduction cross-oracle battery
    for name, residual, tol in reduction.run_self_check():
        checks.append(Check(name, residual, tol))

    return VerifyReport(tuple(checks))


def render_report(report: VerifyReport) -> str:
    lines = []
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(f"[{status}] {c.name}: residual {c.residual:.3e} (tolerance {c.tolerance:.0e})")
    lines.append(f"{'OK' if report.passed else 'FAILED'}: {sum(c.passed for c in report.checks)}"
                 f"/{len(report.checks)} checks passed")
    return "\n".join(lines)
