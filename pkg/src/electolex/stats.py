"""Nonparametric and classical statistics: tie-aware ranking, Spearman
rank correlation, Shapiro-Wilk normality and one-way ANOVA.

Spearman p-values switch method by sample size: an exact permutation
distribution up to n = 10, and the usual t approximation beyond. The
Shapiro-Wilk statistic and p-value follow Royston's polynomial
approximations, valid for 3 <= n <= 5000.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    ConstantSample,
    DegenerateInput,
    InsufficientGroups,
    NaNInput,
    SampleTooLarge,
    SampleTooSmall,
    ZeroWithinVariance,
)
from .special import f_sf, norm_ppf, norm_sf, t_sf_two_sided

SPEARMAN_EXACT_MAX_N = 10


@dataclass(frozen=True)
class TestResult:
    """A test statistic with its p-value and size descriptors."""

    statistic: float
    p_value: float
    df: object
    n: int
    method: str

    def to_dict(self) -> dict:
        df = self.df
        if isinstance(df, tuple):
            df = list(df)
        return {
            "statistic": self.statistic,
            "p_value": self.p_value,
            "df": df,
            "n": self.n,
            "method": self.method,
        }


@dataclass(frozen=True)
class GroupedSamples:
    """Observations split into labeled groups (e.g. the six pair classes)."""

    groups: Mapping[object, Sequence[float]]


def _check_finite(x: np.ndarray, where: str) -> None:
    if np.isnan(x).any():
        raise NaNInput(where)


def rank_with_ties(x: Sequence[float]) -> np.ndarray:
    """Ranks 1..n with ties sharing the average of their positions."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.size == 0:
        raise ValueError("cannot rank an empty sequence")
    _check_finite(arr, "rank input")
    order = np.argsort(arr, kind="stable")
    ranks = np.empty(arr.size, dtype=np.float64)
    i = 0
    while i < arr.size:
        j = i
        while j + 1 < arr.size and arr[order[j + 1]] == arr[order[i]]:
            j += 1
        avg = (i + j + 2) / 2.0  # positions are 0-based, ranks 1-based
        ranks[order[i:j + 1]] = avg
        i = j + 1
    return ranks


def _pearson(x: np.ndarray, y: np.ndarray) -> float:
    xd = x - x.mean()
    yd = y - y.mean()
    denom = math.sqrt(float(xd @ xd) * float(yd @ yd))
    return float(xd @ yd) / denom


def _spearman_exact_p(rx: np.ndarray, ry: np.ndarray, rho_obs: float) -> float:
    """Two-sided exact permutation p-value over all n! arrangements.

    rho is monotone in S = rx . ry(perm) because permuting preserves the
    rank means and variances, so the tail count reduces to threshold
    checks on S.
    """
    n = rx.size
    center = n * rx.mean() * ry.mean()
    scale = math.sqrt(float(((rx - rx.mean()) ** 2).sum())
                      * float(((ry - ry.mean()) ** 2).sum()))
    s_obs_dev = abs(float(rx @ ry) - center)
    count = 0
    total = 0
    perms = itertools.permutations(range(n))
    while True:
        chunk = list(itertools.islice(perms, 200_000))
        if not chunk:
            break
        sums = ry[np.array(chunk)] @ rx
        count += int((np.abs(sums - center) >= s_obs_dev - 1e-9 * scale).sum())
        total += len(chunk)
    return count / total


def spearman(x: Sequence[float], y: Sequence[float]) -> TestResult:
    """Spearman rank correlation with a two-sided p-value.

    Ties get average ranks and rho is the Pearson correlation of the rank
    vectors (the d-squared shortcut is biased under ties). A constant
    input leaves rho undefined and is reported as an error.
    """
    xa = np.asarray(x, dtype=np.float64)
    ya = np.asarray(y, dtype=np.float64)
    if xa.shape != ya.shape:
        raise ValueError(f"length mismatch: {xa.size} vs {ya.size}")
    n = xa.size
    if n < 3:
        raise SampleTooSmall(n, 3)
    _check_finite(xa, "spearman x")
    _check_finite(ya, "spearman y")
    if np.all(xa == xa[0]) or np.all(ya == ya[0]):
        raise DegenerateInput("constant sequence: rank correlation undefined")
    rx = rank_with_ties(xa)
    ry = rank_with_ties(ya)
    rho = _pearson(rx, ry)
    rho = max(-1.0, min(1.0, rho))
    if n <= SPEARMAN_EXACT_MAX_N:
        p = _spearman_exact_p(rx, ry, rho)
        return TestResult(statistic=rho, p_value=p, df=None, n=n,
                          method="spearman-exact-permutation")
    if abs(rho) == 1.0:
        p = 0.0
    else:
        t = rho * math.sqrt((n - 2) / (1.0 - rho * rho))
        p = t_sf_two_sided(t, n - 2)
    return TestResult(statistic=rho, p_value=p, df=n - 2, n=n,
                      method="spearman-t")


def shapiro_wilk(x: Sequence[float]) -> TestResult:
    """Shapiro-Wilk W and p-value (Royston's approximation).

    The df field mirrors n, which is how the result is conventionally
    quoted alongside the other tests in the report.
    """
    arr = np.asarray(x, dtype=np.float64)
    n = arr.size
    if n < 3:
        raise SampleTooSmall(n, 3)
    if n > 5000:
        raise SampleTooLarge(n, 5000)
    _check_finite(arr, "shapiro-wilk input")
    xs = np.sort(arr)
    if xs[0] == xs[-1]:
        raise ConstantSample()

    if n == 3:
        a = np.array([-math.sqrt(0.5), 0.0, math.sqrt(0.5)])
    else:
        m = np.array([norm_ppf((i - 0.375) / (n + 0.25))
                      for i in range(1, n + 1)])
        ssq = float(m @ m)
        c = m / math.sqrt(ssq)
        u = 1.0 / math.sqrt(n)
        a_n = (-2.706056 * u**5 + 4.434685 * u**4 - 2.071190 * u**3
               - 0.147981 * u**2 + 0.221157 * u + c[-1])
        if n > 5:
            a_n1 = (-3.582633 * u**5 + 5.682633 * u**4 - 1.752461 * u**3
                    - 0.293762 * u**2 + 0.042981 * u + c[-2])
            phi = ((ssq - 2.0 * m[-1]**2 - 2.0 * m[-2]**2)
                   / (1.0 - 2.0 * a_n**2 - 2.0 * a_n1**2))
            a = m / math.sqrt(phi)
            a[-2], a[1] = a_n1, -a_n1
        else:
            phi = (ssq - 2.0 * m[-1]**2) / (1.0 - 2.0 * a_n**2)
            a = m / math.sqrt(phi)
        a[-1], a[0] = a_n, -a_n

    ssd = float(((xs - xs.mean()) ** 2).sum())
    w = float(a @ xs) ** 2 / ssd
    w = min(w, 1.0)

    if n == 3:
        p = 1.909859 * (math.asin(math.sqrt(w)) - 1.047198)
        p = min(max(p, 0.0), 1.0)
    elif n <= 11:
        gamma = -2.273 + 0.459 * n
        y = -math.log(gamma - math.log1p(-w))
        mu = 0.5440 - 0.39978 * n + 0.025054 * n**2 - 0.0006714 * n**3
        sigma = math.exp(1.3822 - 0.77857 * n + 0.062767 * n**2
                         - 0.0020322 * n**3)
        p = norm_sf((y - mu) / sigma)
    else:
        y = math.log1p(-w)
        ln_n = math.log(n)
        mu = -1.5861 - 0.31082 * ln_n - 0.083751 * ln_n**2 + 0.0038915 * ln_n**3
        sigma = math.exp(-0.4803 - 0.082676 * ln_n + 0.0030302 * ln_n**2)
        p = norm_sf((y - mu) / sigma)
    p = min(max(p, 0.0), 1.0)
    return TestResult(statistic=w, p_value=p, df=n, n=n, method="shapiro-wilk")


def one_way_anova(groups: GroupedSamples | Mapping[object, Sequence[float]]) -> TestResult:
    """One-way fixed-effects ANOVA F test across the groups."""
    mapping = groups.groups if isinstance(groups, GroupedSamples) else groups
    arrays = {k: np.asarray(v, dtype=np.float64)
              for k, v in mapping.items() if len(v) > 0}
    k = len(arrays)
    if k < 2:
        raise InsufficientGroups(k)
    for key, arr in arrays.items():
        _check_finite(arr, f"anova group {key}")
    n = sum(a.size for a in arrays.values())
    if n <= k:
        raise InsufficientGroups(k)
    grand = sum(float(a.sum()) for a in arrays.values()) / n
    ssb = sum(a.size * (float(a.mean()) - grand) ** 2 for a in arrays.values())
    ssw = sum(float(((a - a.mean()) ** 2).sum()) for a in arrays.values())
    if ssw == 0.0:
        raise ZeroWithinVariance()
    df_between = k - 1
    df_within = n - k
    f = (ssb / df_between) / (ssw / df_within)
    p = f_sf(f, df_between, df_within)
    return TestResult(statistic=f, p_value=p, df=(df_between, df_within),
                      n=n, method="one-way-anova")
