"""Symmetric logistic S-curve of a single technology.

The curve is ``value(t) = k / (1 + exp(a - b*t))``: it saturates at the
carrying capacity k, grows at rate b > 0, and passes through its
inflection point k/2 at t = a/b.  Equivalently, the log-odds transform
``log((k - v) / v)`` of any point on the curve equals ``a - b*t``, which
is what makes fitting linear once k is known.

Fitting strategy: k is not observable, so it is searched.  For each
candidate k the series is linearized and a straight line is fitted by
least squares; the candidate minimizing the line's SSE wins.  The search
runs a geometric grid above the observed maximum and refines every local
basin the grid reveals by golden-section search.  All logarithms are
natural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import KTooSmall, LevelOutOfRange, NotSShaped
from .series import FmtSeries
from .stats import line_fit

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class LogisticParams:
    """Parameters (a, b, k) of value(t) = k / (1 + exp(a - b*t))."""

    a: float
    b: float
    k: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.b) and math.isfinite(self.k)):
            raise ValueError("logistic parameters must be finite")
        if self.b <= 0.0:
            raise ValueError(f"growth rate b must be positive, got {self.b!r}")
        if self.k <= 0.0:
            raise ValueError(f"saturation level k must be positive, got {self.k!r}")

    @property
    def inflection_time(self) -> float:
        return self.a / self.b


@dataclass(frozen=True)
class KSearchConfig:
    """Search domain and stopping rule for the saturation-level search.

    The grid has ``n_grid`` geometric candidates over
    ``(max_value * floor_factor, max_value * factor_max]``; each traced
    local minimum is refined by golden-section search until the bracket's
    relative width drops below ``rel_tol``.  The interval between the
    observed maximum and the grid floor is always refined too, so a true
    saturation level closer than ``floor_factor`` to the data is still
    reachable.
    """

    factor_max: float = 10.0
    n_grid: int = 64
    floor_factor: float = 1.001
    rel_tol: float = 1e-9

    def __post_init__(self) -> None:
        if self.factor_max <= 1.0:
            raise ValueError(f"factor_max must exceed 1, got {self.factor_max!r}")
        if self.n_grid < 2:
            raise ValueError(f"n_grid must be >= 2, got {self.n_grid!r}")
        if not 1.0 < self.floor_factor < self.factor_max:
            raise ValueError("floor_factor must lie in (1, factor_max)")
        if self.rel_tol <= 0.0:
            raise ValueError("rel_tol must be positive")


@dataclass(frozen=True)
class LogisticFit:
    """Fitted parameters plus linearized-regression diagnostics.

    ``k_search_trace`` records (k candidate, SSE) for every grid candidate
    and, last, the refined optimum actually returned.
    """

    params: LogisticParams
    sse_linearized: float
    r2_linearized: float
    k_search_trace: tuple[tuple[float, float], ...] = field(repr=False)


def logistic_value(params: LogisticParams, t: float) -> float:
    """Evaluate the S-curve at time t; strictly increasing in t."""
    x = params.a - params.b * t
    # Evaluate through exp of a non-positive argument so no finite t overflows.
    if x > 0.0:
        e = math.exp(-x)
        return params.k * e / (1.0 + e)
    return params.k / (1.0 + math.exp(x))


def solve_time(params: LogisticParams, level: float) -> float:
    """Invert the S-curve: the time at which it reaches ``level``.

    t = a/b - (1/b) * log((k - level) / level), defined for 0 < level < k.
    """
    if not (0.0 < level < params.k):
        raise LevelOutOfRange(
            f"level {level!r} outside (0, {params.k!r})"
        )
    return (params.a - math.log((params.k - level) / level)) / params.b


def linearize(series: FmtSeries, k: float) -> tuple[tuple[float, float], ...]:
    """Log-odds transform: rows of (t, log((k - v) / v)).

    On data exactly following the curve with saturation k, the output lies
    on the line y = a - b*t.
    """
    if k <= series.max_value:
        raise KTooSmall(
            f"k={k!r} must exceed the maximum observed value {series.max_value!r}"
        )
    return tuple((t, math.log((k - v) / v)) for t, v in series.points)


def _sse_for_k(series: FmtSeries, k: float) -> tuple[float, float, float, float]:
    """(sse, slope, intercept, sst) of the linearized line fit at candidate k.

    Candidates not exceeding every observed value are infeasible (infinite
    SSE) rather than silently dropping the offending points.
    """
    if k <= series.max_value:
        return math.inf, math.nan, math.nan, math.nan
    ts = series.ts
    ys = tuple(math.log((k - v) / v) for v in series.values)
    slope, intercept, sse, sst = line_fit(ts, ys)
    return sse, slope, intercept, sst


def fit_logistic(series: FmtSeries, search: KSearchConfig | None = None) -> LogisticFit:
    """Fit (a, b, k) to a series by linearized least squares with k-search.

    The slope of the best linearized fit is -b and its intercept is a;
    a non-positive b means the series does not rise like an S-curve.

    The SSE landscape in k is not globally unimodal: it diverges just
    above the observed maximum, dips at the physical saturation level,
    and decays toward a plateau as k grows (the exponential limit).  The
    grid therefore only locates candidate basins; each traced local
    minimum is refined by golden-section search, as is the leading
    interval below the grid floor, where a saturation level within
    ``floor_factor`` of the data would otherwise be invisible.
    """
    cfg = KSearchConfig() if search is None else search
    vmax = series.max_value
    k_lo = vmax * cfg.floor_factor
    k_hi = vmax * cfg.factor_max
    ratio = k_hi / k_lo
    edge = math.nextafter(vmax, math.inf)

    trace: list[tuple[float, float]] = []
    best_k = math.nan
    best = (math.inf, math.nan, math.nan, math.nan)

    def evaluate(k: float) -> float:
        nonlocal best_k, best
        res = _sse_for_k(series, k)
        if res[0] < best[0]:
            best_k, best = k, res
        return res[0]

    grid = [k_lo * ratio ** (i / cfg.n_grid) for i in range(1, cfg.n_grid + 1)]
    for k in grid:
        trace.append((k, evaluate(k)))
    sses = [s for _, s in trace]
    last = len(grid) - 1

    def refine(lo: float, hi: float) -> None:
        c = hi - _INV_PHI * (hi - lo)
        d = lo + _INV_PHI * (hi - lo)
        fc = evaluate(c)
        fd = evaluate(d)
        while hi - lo > cfg.rel_tol * hi:
            if fc <= fd:
                hi, d, fd = d, c, fc
                c = hi - _INV_PHI * (hi - lo)
                fc = evaluate(c)
            else:
                lo, c, fc = c, d, fd
                d = lo + _INV_PHI * (hi - lo)
                fd = evaluate(d)

    refine(edge, grid[0])
    for i in range(len(grid)):
        left_higher = i == 0 or sses[i - 1] >= sses[i]
        right_higher = i == last or sses[i + 1] >= sses[i]
        if left_higher and right_higher:
            refine(grid[i - 1] if i > 0 else edge, grid[i + 1] if i < last else k_hi)

    sse, slope, intercept, sst = best
    trace.append((best_k, sse))
    b = -slope
    if not b > 0.0:
        raise NotSShaped(
            f"series {series.name!r}: best linearized slope {slope!r} implies "
            f"non-positive growth rate"
        )
    if sst > 0.0:
        r2 = min(1.0, max(0.0, 1.0 - sse / sst))
    else:
        r2 = 1.0 if sse == 0.0 else 0.0
    return LogisticFit(
        params=LogisticParams(a=intercept, b=b, k=best_k),
        sse_linearized=sse,
        r2_linearized=r2,
        k_search_trace=tuple(trace),
    )
