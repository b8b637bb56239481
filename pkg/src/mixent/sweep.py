"""Sweep execution: route each n to an evaluator and emit ordered records.

Records are sorted by (n, quantity, method) so output is deterministic no
matter how sweep points are scheduled. CSV/JSON rendering uses 12 significant
digits and the literal token "inf" for infinite values.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import mixtures, reduction
from . import weights as wt
from .config import ExperimentConfig
from .errors import CapacityError, ValidationError
from .linalg import dense_cap
from .states import density_ratio, gibbs_state, perturb_unitary

CSV_HEADER = "n,method,quantity,value,std_error,runtime_ms"


@dataclass(frozen=True)
class ConvergenceRecord:
    n: int
    method: str
    quantity: str  # "S" or "S_BS"
    value: float
    std_error: float | None = None
    runtime_ms: float | None = None


def _prepare_states(config: ExperimentConfig):
    rho = gibbs_state(config.hamiltonian, config.beta)
    if config.unitary is not None:
        sigma = perturb_unitary(rho, config.unitary)
    else:
        sigma = config.sigma
    return rho, sigma


def _plan(config: ExperimentConfig) -> list[tuple[int, str]]:
    """One (n, method) task per requested record; auto emits S and S_BS."""
    cap = dense_cap(config.dense_cap)
    tasks: list[tuple[int, str]] = []
    for n in config.n_values:
        if config.method == "auto":
            if config.d**n <= cap:
                tasks.append((n, "dense_exact"))
                tasks.append((n, "dense_bs"))
            elif config.k != 1:
                raise CapacityError(
                    f"n={n}: dim {config.d}^{n} exceeds the cap {cap} and the reduction "
                    f"path supports k = 1 only"
                )
            elif config.scheme.family == "uniform":
                tasks.append((n, "reduction_exact"))
            else:
                tasks.append((n, "reduction_mc"))
        else:
            tasks.append((n, config.method))
    return tasks


def _run_task(config: ExperimentConfig, rho, sigma, ens, n: int, method: str, timings: bool) -> ConvergenceRecord:
    start = time.perf_counter() if timings else 0.0
    std_error = None
    if method == "dense_exact":
        quantity = "S"
        value = mixtures.dense_relative_entropy(
            rho, sigma, config.scheme, n, config.k, config.dense_cap
        )
    elif method == "dense_bs":
        quantity = "S_BS"
        value = mixtures.dense_bs_bound(rho, sigma, config.scheme, n, config.k, config.dense_cap)
    elif method == "reduction_exact":
        quantity = "S_BS"
        if not wt.is_exchangeable(wt.row(config.scheme, n)):
            raise ValidationError(f"reduction_exact requires an exchangeable row at n={n}")
        value = reduction.bs_exchangeable_exact(ens, n)
    elif method == "reduction_mc":
        quantity = "S_BS"
        est = reduction.bs_monte_carlo(ens, config.scheme, n, config.samples, config.seed)
        value = est.mean
        std_error = est.std_error
    else:
        raise ValidationError(f"unknown method {method!r}")
    runtime_ms = (time.perf_counter() - start) * 1e3 if timings else None
    return ConvergenceRecord(n, method, quantity, value, std_error, runtime_ms)


def run_sweep(config: ExperimentConfig, workers: int = 1, timings: bool = False) -> list[ConvergenceRecord]:
    """Evaluate every sweep point; reduction methods are gated by the self-check."""
    rho, sigma = _prepare_states(config)
    tasks = _plan(config)

    ens = None
    if any(method.startswith("reduction") for _, method in tasks):
        if config.k != 1:
            raise ValidationError("reduction methods support k = 1 only")
        reduction.require_validated()
        ens = reduction.reduce_to_ensemble(rho, density_ratio(rho, sigma))

    def job(task):
        n, method = task
        return _run_task(config, rho, sigma, ens, n, method, timings)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(job, tasks))
    else:
        records = [job(t) for t in tasks]
    return sorted(records, key=lambda r: (r.n, r.quantity, r.method))


def _fmt(value: float | None) -> str:
    if value is None:
        return ""
    if math.isinf(value):
        return "inf"
    return f"{value:.12g}"


def records_to_csv(records: list[ConvergenceRecord]) -> str:
    lines = [CSV_HEADER]
    for r in records:
        lines.append(
            f"{r.n},{r.method},{r.quantity},{_fmt(r.value)},{_fmt(r.std_error)},{_fmt(r.runtime_ms)}"
        )
    return "\n".join(lines) + "\n"


def records_to_json(records: list[ConvergenceRecord]) -> str:
    def jsonable(value):
        if value is None:
            return None
        if math.isinf(value):
            return "inf"
        return float(f"{value:.12g}")

    payload = [
        {
            "n": r.n,
            "method": r.method,
            "quantity": r.quantity,
            "value": jsonable(r.value),
            "std_error": jsonable(r.std_error),
            "runtime_ms": jsonable(r.runtime_ms),
        }
        for r in records
    ]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
