"""Descriptive statistics, histograms, and normal QQ machinery.

Just enough to run the log-normality diagnostics: moment summaries with
the bias-corrected sample formulas, equal-width histograms, an inverse
standard-normal CDF, and QQ data against the normal.  Deliberately no
hypothesis tests and no plotting; callers get data, not figures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SampleSummary:
    n: int
    mean: float
    variance: float | None
    skewness: float | None
    excess_kurtosis: float | None
    min: float
    max: float


def summarize(values) -> SampleSummary:
    """Moment summary; variance is the unbiased estimator, skewness and
    kurtosis the bias-corrected sample versions (0 for constant samples)."""
    v = np.asarray(values, dtype=np.float64)
    n = int(v.size)
    if n == 0:
        raise ValueError("empty sample")
    mean = math.fsum(v) / n
    d = v - mean
    if n < 2:
        return SampleSummary(n, mean, None, None, None, float(v.min()), float(v.max()))
    m2 = math.fsum(d * d) / n
    variance = m2 * n / (n - 1)
    skewness = None
    kurtosis = None
    if n >= 3:
        if m2 == 0.0:
            skewness = 0.0
        else:
            g1 = (math.fsum(d**3) / n) / m2**1.5
            skewness = g1 * math.sqrt(n * (n - 1)) / (n - 2)
    if n >= 4:
        if m2 == 0.0:
            kurtosis = 0.0
        else:
            g2 = (math.fsum(d**4) / n) / (m2 * m2) - 3.0
            kurtosis = ((n + 1) * g2 + 6.0) * (n - 1) / ((n - 2) * (n - 3))
    return SampleSummary(n, mean, variance, skewness, kurtosis, float(v.min()), float(v.max()))


@dataclass(frozen=True)
class Histogram:
    bin_edges: tuple[float, ...]
    counts: tuple[int, ...]


def histogram(values, bins: int) -> Histogram:
    """Equal-width histogram over [min, max].

    A value exactly on an interior edge counts in the lower bin (and the
    minimum in the first), so the counts always sum to the sample size.
    """
    v = np.asarray(values, dtype=np.float64)
    if v.size == 0:
        raise ValueError("empty sample")
    if bins < 1:
        raise ValueError("bins must be >= 1")
    lo, hi = float(v.min()), float(v.max())
    if lo == hi:
        lo, hi = lo - 0.5, hi + 0.5
    edges = np.linspace(lo, hi, bins + 1)
    idx = np.clip(np.searchsorted(edges, v, side="left") - 1, 0, bins - 1)
    counts = np.bincount(idx, minlength=bins)
    return Histogram(tuple(float(e) for e in edges), tuple(int(c) for c in counts))


# Acklam's rational approximation to the inverse normal CDF (~1.15e-9
# relative before refinement), split at the 2.425% tails.
_ACK_A = (-3.969683028665376e01, 2.209460984245205e02, -2.759285104469687e02,
          1.383577518672690e02, -3.066479806614716e01, 2.506628277459239e00)
_ACK_B = (-5.447609879822406e01, 1.615858368580409e02, -1.556989798598866e02,
          6.680131188771972e01, -1.328068155288572e01)
_ACK_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e00,
          -2.549732539343734e00, 4.374664141464968e00, 2.938163982698783e00)
_ACK_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e00,
          3.754408661907416e00)
_ACK_SPLIT = 0.02425


def _normal_cdf(x: float) -> float:
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def normal_quantile(q: float) -> float:
    """Inverse standard normal CDF.

    Rational approximation plus one Halley step against the erfc-based
    CDF; absolute error is far below the 1e-6 contract across
    q in [1e-9, 1 - 1e-9].
    """
    if not 0.0 < q < 1.0:
        raise ValueError("quantile argument must be strictly inside (0, 1)")
    a, b, c, d = _ACK_A, _ACK_B, _ACK_C, _ACK_D
    if q < _ACK_SPLIT:
        u = math.sqrt(-2.0 * math.log(q))
        x = (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) / (
            (((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0
        )
    elif q <= 1.0 - _ACK_SPLIT:
        u = q - 0.5
        t = u * u
        x = (
            u
            * (((((a[0] * t + a[1]) * t + a[2]) * t + a[3]) * t + a[4]) * t + a[5])
            / (((((b[0] * t + b[1]) * t + b[2]) * t + b[3]) * t + b[4]) * t + 1.0)
        )
    else:
        u = math.sqrt(-2.0 * math.log(1.0 - q))
        x = -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) / (
            (((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0
        )
    # one Halley refinement
    e = _normal_cdf(x) - q
    u = e * math.sqrt(2.0 * math.pi) * math.exp(x * x / 2.0)
    return x - u / (1.0 + x * u / 2.0)


@dataclass(frozen=True, eq=False)
class QQData:
    theoretical: np.ndarray
    empirical: np.ndarray
    correlation: float

    @property
    def pairs(self):
        return tuple(zip(self.theoretical.tolist(), self.empirical.tolist()))


def qq_against_normal(values) -> QQData:
    """Order statistics of the standardized sample against normal
    quantiles at plotting positions (i - 0.5)/n; Pearson correlation of
    the pairs is the normality diagnostic."""
    v = np.asarray(values, dtype=np.float64)
    n = int(v.size)
    if n < 3:
        raise ValueError("need at least 3 values")
    mean = math.fsum(v) / n
    d = v - mean
    var = math.fsum(d * d) / (n - 1)
    if var == 0.0:
        raise ValueError("zero variance sample")
    emp = np.sort(d / math.sqrt(var))
    theo = np.array([normal_quantile((i + 0.5) / n) for i in range(n)])
    corr = float(np.corrcoef(theo, emp)[0, 1])
    return QQData(theo, emp, corr)
