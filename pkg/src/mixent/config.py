"""Experiment configuration: JSON document with matrix interchange lists.

Matrices travel as flat lists of 2*d^2 reals, row-major, interleaved
(re, im). The perturbation is either {"unitary": [...]} applied to the Gibbs
state or an explicit {"sigma": [...]} density matrix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import weights as wt
from .errors import ConfigError, ValidationError
from .linalg import require_unitary
from .states import require_density

METHODS = ("auto", "dense_exact", "dense_bs", "reduction_exact", "reduction_mc")

DEFAULT_SAMPLES = 100_000
DEFAULT_SEED = 0


def decode_matrix(values, d: int, field_name: str) -> np.ndarray:
    """Flat interleaved (re, im) row-major list -> complex d x d array."""
    try:
        arr = np.asarray([float(v) for v in values], dtype=float)
    except (TypeError, ValueError):
        raise ConfigError(field_name, "expected a flat list of reals") from None
    if arr.size != 2 * d * d:
        raise ConfigError(field_name, f"expected {2 * d * d} reals (2*d^2 for d={d}), got {arr.size}")
    return (arr[0::2] + 1j * arr[1::2]).reshape(d, d)


def encode_matrix(mat: np.ndarray) -> list[float]:
    """Inverse of decode_matrix."""
    mat = np.asarray(mat, dtype=complex)
    flat = np.empty(2 * mat.size)
    flat[0::2] = mat.real.ravel()
    flat[1::2] = mat.imag.ravel()
    return flat.tolist()


@dataclass
class ExperimentConfig:
    d: int
    hamiltonian: np.ndarray
    beta: float
    unitary: np.ndarray | None
    sigma: np.ndarray | None
    scheme: wt.WeightScheme
    n_values: list[int]
    k: int = 1
    method: str = "auto"
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    dense_cap: int | None = None
    raw: dict = field(default_factory=dict, repr=False)


def _require(raw: dict, key: str):
    if key not in raw:
        raise ConfigError(key, "missing required field")
    return raw[key]


def _as_int(value, field_name: str, minimum: int | None = None) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ConfigError(field_name, f"expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ConfigError(field_name, f"must be >= {minimum}, got {value}")
    return value


def scheme_from_spec(spec, field_name: str = "scheme") -> wt.WeightScheme:
    """Build a WeightScheme from {"family": ..., <params>}."""
    if not isinstance(spec, dict):
        raise ConfigError(field_name, "expected an object with a 'family' key")
    family = spec.get("family")
    try:
        if family == "uniform":
            return wt.uniform()
        if family == "triangular":
            return wt.triangular()
        if family == "window":
            return wt.window(_as_int(_require(spec, "width"), f"{field_name}.width", 1))
        if family == "growing_window":
            return wt.growing_window()
        if family == "fixed_site":
            return wt.fixed_site()
        if family == "geometric":
            return wt.geometric(float(_require(spec, "ratio")))
        if family == "custom":
            return wt.custom(_require(spec, "rows"), _require(spec, "analytic_class"))
    except ConfigError:
        raise
    except (ValidationError, ValueError, TypeError) as exc:
        raise ConfigError(field_name, str(exc)) from None
    raise ConfigError(f"{field_name}.family", f"unknown family {family!r}; known: {wt.FAMILIES}")


def parse_config(raw: dict) -> ExperimentConfig:
    """Validate a config dict; errors carry the offending field path."""
    if not isinstance(raw, dict):
        raise ConfigError("<root>", "config must be a JSON object")

    d = _as_int(_require(raw, "d"), "d", 1)
    hamiltonian = decode_matrix(_require(raw, "hamiltonian"), d, "hamiltonian")

    beta = _require(raw, "beta")
    if not isinstance(beta, (int, float)) or isinstance(beta, bool) or beta < 0:
        raise ConfigError("beta", f"expected a nonnegative real, got {beta!r}")

    pert = _require(raw, "perturbation")
    if not isinstance(pert, dict) or len(set(pert) & {"unitary", "sigma"}) != 1:
        raise ConfigError("perturbation", "expected exactly one of 'unitary' or 'sigma'")
    unitary = sigma = None
    if "unitary" in pert:
        mat = decode_matrix(pert["unitary"], d, "perturbation.unitary")
        try:
            unitary = require_unitary(mat, "perturbation.unitary")
        except ValidationError as exc:
            raise ConfigError("perturbation.unitary", str(exc)) from None
    else:
        mat = decode_matrix(pert["sigma"], d, "perturbation.sigma")
        try:
            sigma = require_density(mat, "perturbation.sigma")
        except ValidationError as exc:
            raise ConfigError("perturbation.sigma", str(exc)) from None

    scheme = scheme_from_spec(_require(raw, "scheme"))

    k = _as_int(raw.get("k", 1), "k", 1)

    n_values = _require(raw, "n_values")
    if not isinstance(n_values, list) or not n_values:
        raise ConfigError("n_values", "expected a nonempty list of integers")
    n_values = [_as_int(n, f"n_values[{i}]", 1) for i, n in enumerate(n_values)]
    if any(b <= a for a, b in zip(n_values, n_values[1:])):
        raise ConfigError("n_values", "values must be strictly ascending")
    if n_values[0] < k:
        raise ConfigError("n_values", f"smallest n ({n_values[0]}) must be >= block size k ({k})")

    method = raw.get("method", "auto")
    if method not in METHODS:
        raise ConfigError("method", f"unknown method {method!r}; known: {METHODS}")
    if method == "reduction_exact" and scheme.family != "uniform":
        raise ConfigError("method", "reduction_exact requires an exchangeable (uniform) scheme")
    if method.startswith("reduction") and k != 1:
        raise ConfigError("method", "reduction methods support k = 1 only")

    samples = _as_int(raw.get("samples", DEFAULT_SAMPLES), "samples", 100)
    seed = _as_int(raw.get("seed", DEFAULT_SEED), "seed")
    dense_cap = raw.get("dense_cap")
    if dense_cap is not None:
        dense_cap = _as_int(dense_cap, "dense_cap", 1)

    return ExperimentConfig(
        d=d,
        hamiltonian=hamiltonian,
        beta=float(beta),
        unitary=unitary,
        sigma=sigma,
        scheme=scheme,
        n_values=n_values,
        k=k,
        method=method,
        samples=samples,
        seed=seed,
        dense_cap=dense_cap,
        raw=raw,
    )


def load_config(path: str) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError("<root>", f"invalid JSON: {exc}") from None
    return parse_config(raw)
