"""Weight rows a_{n,1..n} over sites and finite-horizon regularity diagnostics.

A scheme produces, for each n, a row of n nonnegative weights summing to 1.
Whether a scheme is (strongly) regular is an asymptotic statement that finite
data cannot decide, so every family carries a declared analytic class; the
diagnostics expose the finite-n sequences (row sums, max entries, variation
sums) as evidence for or against that declaration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

STRONGLY_REGULAR = "strongly_regular"
REGULAR_NOT_STRONGLY = "regular_not_strongly"
NOT_REGULAR = "not_regular"
ANALYTIC_CLASSES = (STRONGLY_REGULAR, REGULAR_NOT_STRONGLY, NOT_REGULAR)

ROW_SUM_TOL = 1e-12

FAMILIES = (
    "uniform",
    "triangular",
    "window",
    "growing_window",
    "fixed_site",
    "geometric",
    "custom",
)


@dataclass(frozen=True)
class WeightScheme:
    """A rule producing the weight row for each n, plus its declared class."""

    family: str
    width: int | None = None
    ratio: float | None = None
    rows: tuple[tuple[float, ...], ...] | None = None
    analytic_class: str = STRONGLY_REGULAR


def uniform() -> WeightScheme:
    """a_{n,i} = 1/n."""
    return WeightScheme("uniform", analytic_class=STRONGLY_REGULAR)


def triangular() -> WeightScheme:
    """a_{n,i} = 2i/(n(n+1)); linearly increasing rows."""
    return WeightScheme("triangular", analytic_class=STRONGLY_REGULAR)


def window(width: int) -> WeightScheme:
    """1/w on the last w sites. The fixed width keeps the row variation at
    2/w, which does not vanish, so the scheme is regular but not strongly so."""
    if not isinstance(width, int) or width < 1:
        raise ValidationError(f"window width must be a positive integer, got {width!r}")
    return WeightScheme("window", width=width, analytic_class=REGULAR_NOT_STRONGLY)


def growing_window() -> WeightScheme:
    """1/w(n) on w(n) = ceil(sqrt(n)) centered sites; variation 2/w(n) -> 0.

    A strongly regular family whose rows are not monotone in the site index.
    """
    return WeightScheme("growing_window", analytic_class=STRONGLY_REGULAR)


def fixed_site() -> WeightScheme:
    """All weight on site 1 for every n; the first column never decays."""
    return WeightScheme("fixed_site", analytic_class=NOT_REGULAR)


def geometric(ratio: float) -> WeightScheme:
    """a_{n,i} proportional to ratio^{i-1}; the first column tends to 1-ratio != 0."""
    if not 0.0 < ratio < 1.0:
        raise ValidationError(f"geometric ratio must lie in (0, 1), got {ratio!r}")
    return WeightScheme("geometric", ratio=float(ratio), analytic_class=NOT_REGULAR)


def custom(rows, analytic_class: str) -> WeightScheme:
    """Explicit rows; rows[i] is the row of length i+1. The analytic class
    must be declared by the caller, since it cannot be inferred."""
    if analytic_class not in ANALYTIC_CLASSES:
        raise ValidationError(
            f"analytic_class must be one of {ANALYTIC_CLASSES}, got {analytic_class!r}"
        )
    frozen = []
    for idx, r in enumerate(rows):
        r = tuple(float(v) for v in r)
        if len(r) != idx + 1:
            raise ValidationError(f"custom row {idx} must have length {idx + 1}, got {len(r)}")
        _check_row(np.asarray(r), len(r))
        frozen.append(r)
    return WeightScheme("custom", rows=tuple(frozen), analytic_class=analytic_class)


def _check_row(values: np.ndarray, n: int) -> np.ndarray:
    if values.min(initial=0.0) < 0.0 or values.max(initial=0.0) > 1.0:
        raise ValidationError(f"row of length {n} has entries outside [0, 1]")
    total = math.fsum(values.tolist())
    if abs(total - 1.0) > ROW_SUM_TOL:
        raise ValidationError(f"row of length {n} sums to {total!r}, expected 1")
    return values


def row(scheme: WeightScheme, n: int) -> np.ndarray:
    """The weight row of length n (block callers pass n - k + 1 here)."""
    if n < 1:
        raise ValueError(f"row length must be >= 1, got {n}")
    fam = scheme.family
    if fam == "uniform":
        return np.full(n, 1.0 / n)
    if fam == "triangular":
        return 2.0 * np.arange(1, n + 1) / (n * (n + 1))
    if fam == "window":
        return _window_row(n, min(scheme.width, n), n - min(scheme.width, n))
    if fam == "growing_window":
        w = min(math.isqrt(n - 1) + 1, n)  # ceil(sqrt(n))
        return _window_row(n, w, (n - w) // 2)
    if fam == "fixed_site":
        out = np.zeros(n)
        out[0] = 1.0
        return out
    if fam == "geometric":
        r = scheme.ratio
        with np.errstate(under="ignore"):
            terms = (1.0 - r) * r ** np.arange(n)
            return terms / -math.expm1(n * math.log(r))
    if fam == "custom":
        if scheme.rows is None or n > len(scheme.rows):
            raise ValueError(f"custom scheme has no row of length {n}")
        return np.asarray(scheme.rows[n - 1], dtype=float)
    raise ValueError(f"unknown weight family {fam!r}")


def _window_row(n: int, width: int, start: int) -> np.ndarray:
    out = np.zeros(n)
    out[start : start + width] = 1.0 / width
    return out


def is_exchangeable(values: np.ndarray) -> bool:
    """True when the row is invariant under permuting sites (all entries equal)."""
    values = np.asarray(values)
    return bool(np.all(values == values[0]))


def variation_sum(values: np.ndarray) -> float:
    """sum_j |a_{n,j+1} - a_{n,j}| over j = 1..n with the convention a_{n,n+1} = 0."""
    values = np.asarray(values, dtype=float)
    return float(np.abs(np.diff(values)).sum() + abs(values[-1]))


@dataclass(frozen=True)
class RegularityReport:
    """Finite-horizon evidence: one entry per n = 1..horizon."""

    horizon: int
    row_sums: np.ndarray
    max_entries: np.ndarray
    variation_sums: np.ndarray
    analytic_class: str


def regularity_diagnostics(scheme: WeightScheme, horizon: int) -> RegularityReport:
    """Exact finite-n diagnostic sequences for rows 1..horizon.

    The report echoes the scheme's declared analytic class; it does not claim
    to decide the limit from finite data.
    """
    if horizon < 2:
        raise ValueError(f"horizon must be >= 2, got {horizon}")
    sums, maxima, variations = [], [], []
    for n in range(1, horizon + 1):
        r = row(scheme, n)
        sums.append(math.fsum(r.tolist()))
        maxima.append(float(r.max()))
        variations.append(variation_sum(r))
    return RegularityReport(
        horizon=horizon,
        row_sums=np.asarray(sums),
        max_entries=np.asarray(maxima),
        variation_sums=np.asarray(variations),
        analytic_class=scheme.analytic_class,
    )
