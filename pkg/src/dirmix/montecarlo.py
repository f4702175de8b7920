"""Seeded Monte Carlo cross-validation of the exact moment theory.

Weight vectors are sampled literally as uniform order-statistic spacings
(sort n-1 uniforms, take consecutive differences), component variates from
the catalog laws, and the weighted sums are compared against the exact
theory twice over: a Kolmogorov-Smirnov test against the predicted law
(when the input is arcsin or generalized arcsin), and empirical moments
against exact moments with standard errors derived from exact variances.

Reproducibility contract: all randomness flows through :class:`RngStream`,
a Philox 4x64 counter-based generator keyed by (seed, stream index), so
the draw sequence is a pure function of those two integers and distinct
stream indices give independent streams.  :func:`simulate` partitions work
into fixed-size chunks, one stream per chunk, and reduces in chunk order;
reports are bit-identical across runs regardless of scheduling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from .catalog import (
    Arcsin,
    Beta4,
    Distribution,
    GenArcsin,
    PointMass,
    PowerSemicircle,
    Uniform,
)
from .mixture import weighted_sum_moment
from .rationals import format_rational

__all__ = [
    "KS_CRITICAL_COEFF_1PCT",
    "RngStream",
    "sample_spacings",
    "sample_variates",
    "ks_statistic",
    "MomentCheck",
    "SimReport",
    "simulate",
]

# asymptotic 1% point of the Kolmogorov distribution, 4 significant digits;
# the critical value for a sample of size N is this over sqrt(N)
KS_CRITICAL_COEFF_1PCT = 1.628

# float-roundoff allowance added to the 5*SE moment verdict so that
# zero-variance checks (point-mass inputs) are decidable in float64
_ROUNDOFF_TOL = 1e-12

_CHUNK = 1 << 16

_U64_MAX = (1 << 64) - 1


class RngStream:
    """Counter-based random stream: a pure function of (seed, stream index)."""

    def __init__(self, seed: int, stream: int = 0):
        if not 0 <= int(seed) <= _U64_MAX:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        if not 0 <= int(stream) <= _U64_MAX:
            raise ValueError("stream index must fit in an unsigned 64-bit integer")
        self.seed = int(seed)
        self.stream = int(stream)
        self._generator: Optional[np.random.Generator] = None

    @property
    def generator(self) -> np.random.Generator:
        if self._generator is None:
            key = np.array([self.seed, self.stream], dtype=np.uint64)
            self._generator = np.random.Generator(np.random.Philox(key=key))
        return self._generator

    def uniforms(self, size=None) -> np.ndarray:
        return self.generator.random(size)

    def standard_gamma(self, shape: float, size=None) -> np.ndarray:
        return self.generator.standard_gamma(shape, size)

    def __repr__(self):
        return f"RngStream(seed={self.seed}, stream={self.stream})"


def sample_spacings(n: int, rng: RngStream, size: Optional[int] = None) -> np.ndarray:
    """Spacings of n-1 sorted uniforms: nonnegative weights summing to 1.

    Returns shape (n,) for ``size=None``, else (size, n).  The last entry is
    computed as one minus the partial sum (clamped at zero), so each row sums
    to 1 up to a final rounding.
    """
    if n < 1:
        raise ValueError("need at least one spacing")
    m = 1 if size is None else int(size)
    if m < 0:
        raise ValueError("size must be nonnegative")
    out = np.empty((m, n))
    if n == 1:
        out[:] = 1.0
    else:
        u = np.sort(rng.uniforms((m, n - 1)), axis=1)
        out[:, 0] = u[:, 0]
        out[:, 1 : n - 1] = u[:, 1:] - u[:, :-1]
        out[:, n - 1] = np.maximum(0.0, 1.0 - out[:, : n - 1].sum(axis=1))
    return out[0] if size is None else out


def _johnk_beta(rng: RngStream, p: float, q: float, count: int) -> np.ndarray:
    """Johnk's rejection sampler for Beta(p, q); intended for shapes <= 1."""
    out = np.empty(count)
    pending = np.arange(count)
    inv_p, inv_q = 1.0 / p, 1.0 / q
    while pending.size:
        u = rng.uniforms(pending.size)
        v = rng.uniforms(pending.size)
        x = u**inv_p
        y = v**inv_q
        s = x + y
        ok = (s <= 1.0) & (s > 0.0)
        out[pending[ok]] = x[ok] / s[ok]
        pending = pending[~ok]
    return out


def _beta_variates(rng: RngStream, p: float, q: float, count: int) -> np.ndarray:
    if p <= 1.0 and q <= 1.0:
        return _johnk_beta(rng, p, q, count)
    ga = rng.standard_gamma(p, count)
    gb = rng.standard_gamma(q, count)
    return ga / (ga + gb)


def sample_variates(dist: Distribution, rng: RngStream, size=None) -> np.ndarray:
    """Draw variates from a catalog law; scalar for ``size=None``.

    Arcsin uses the cosine map -a*cos(pi*U); beta-shaped laws use Johnk's
    rejection method when both shapes are <= 1 and a two-gamma ratio
    otherwise.  Outputs always lie in the closed support.
    """
    shape = () if size is None else (size if isinstance(size, tuple) else (int(size),))
    count = int(np.prod(shape)) if shape else 1

    if isinstance(dist, PointMass):
        flat = np.full(count, float(dist.c))
    elif isinstance(dist, Uniform):
        lo, hi = float(dist.lo), float(dist.hi)
        flat = lo + (hi - lo) * rng.uniforms(count)
    elif isinstance(dist, Arcsin):
        a = float(dist.a)
        flat = -a * np.cos(math.pi * rng.uniforms(count))
    elif isinstance(dist, GenArcsin):
        a = float(dist.a)
        b = _johnk_beta(rng, float(dist.alpha), float(1 - dist.alpha), count)
        flat = -a + 2.0 * a * b
    elif isinstance(dist, PowerSemicircle):
        a = float(dist.a)
        half = float(dist.lam) + 0.5
        b = _beta_variates(rng, half, half, count)
        flat = -a + 2.0 * a * b
    elif isinstance(dist, Beta4):
        b = _beta_variates(rng, float(dist.p), float(dist.q), count)
        flat = float(dist.loc) + float(dist.scale) * b
    else:
        raise TypeError(f"no sampler for {type(dist).__name__}")

    if size is None:
        return float(flat[0])
    return flat.reshape(shape)


def ks_statistic(samples: np.ndarray, cdf: Callable[[np.ndarray], np.ndarray]) -> float:
    """One-sample Kolmogorov-Smirnov statistic for sorted samples.

    D = max_i max(i/N - F(x_i), F(x_i) - (i-1)/N).
    """
    samples = np.asarray(samples, dtype=float)
    if samples.size == 0:
        raise ValueError("KS statistic needs at least one sample")
    if np.any(np.diff(samples) < 0):
        raise ValueError("samples must be sorted ascending")
    n = samples.size
    f = np.asarray(cdf(samples), dtype=float)
    steps = np.arange(1, n + 1) / n
    return float(max(np.max(steps - f), np.max(f - (steps - 1.0 / n))))


@dataclass(frozen=True)
class MomentCheck:
    """One empirical-vs-exact moment comparison."""

    order: int
    empirical: float
    exact: Fraction
    std_error: float
    passed: bool

    @property
    def exact_float(self) -> float:
        return float(self.exact)

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "empirical": self.empirical,
            "exact": format_rational(self.exact),
            "exact_decimal": self.exact_float,
            "std_error": self.std_error,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class SimReport:
    """Monte Carlo comparison record for one simulation run.

    The verdict requires the KS statistic (when a target law applies) to sit
    below the asymptotic 1% critical value 1.628/sqrt(N) and every empirical
    moment to lie within 5 standard errors of its exact value, the standard
    error being computed from exact variances (plus a 1e-12-scale roundoff
    allowance so zero-variance checks are decidable).
    """

    dist: Distribution
    n: int
    n_samples: int
    seed: int
    target: Optional[Distribution]
    ks_statistic: Optional[float]
    ks_critical_1pct: float
    checks: tuple[MomentCheck, ...]
    passed: bool

    @property
    def ks_passed(self) -> Optional[bool]:
        if self.ks_statistic is None:
            return None
        return self.ks_statistic <= self.ks_critical_1pct

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "command": "simulate",
            "dist": str(self.dist),
            "n": self.n,
            "samples": self.n_samples,
            "seed": self.seed,
            "target": None if self.target is None else str(self.target),
            "ks": None
            if self.ks_statistic is None
            else {
                "statistic": self.ks_statistic,
                "critical_1pct": self.ks_critical_1pct,
                "passed": self.ks_passed,
            },
            "moments": [c.to_json_dict() for c in self.checks],
            "passed": self.passed,
        }

    def to_csv_rows(self) -> list[dict]:
        dec = "{:.17g}".format
        rows = []
        if self.ks_statistic is not None:
            rows.append(
                {
                    "check": "ks",
                    "order": "",
                    "observed": dec(self.ks_statistic),
                    "exact": "",
                    "exact_decimal": "",
                    "bound": dec(self.ks_critical_1pct),
                    "passed": self.ks_passed,
                }
            )
        for c in self.checks:
            rows.append(
                {
                    "check": "moment",
                    "order": c.order,
                    "observed": dec(c.empirical),
                    "exact": format_rational(c.exact),
                    "exact_decimal": dec(c.exact_float),
                    "bound": dec(5.0 * c.std_error),
                    "passed": c.passed,
                }
            )
        return rows


def _target_law(dist: Distribution, n: int) -> Optional[Distribution]:
    if isinstance(dist, Arcsin):
        return PowerSemicircle(Fraction(n - 1, 2), dist.a)
    if isinstance(dist, GenArcsin):
        return Beta4(n * dist.alpha, n * (1 - dist.alpha), -dist.a, 2 * dist.a)
    return None


def _draw_sums(dist: Distribution, n: int, n_samples: int, seed: int) -> np.ndarray:
    if isinstance(dist, PointMass):
        # the weights sum to 1, so every weighted sum equals c identically
        return np.full(n_samples, float(dist.c))
    sums = np.empty(n_samples)
    for chunk_index, start in enumerate(range(0, n_samples, _CHUNK)):
        m = min(_CHUNK, n_samples - start)
        rng = RngStream(seed, chunk_index)
        weights = sample_spacings(n, rng, size=m)
        variates = sample_variates(dist, rng, size=(m, n))
        sums[start : start + m] = (weights * variates).sum(axis=1)
    return sums


def simulate(
    dist: Distribution,
    n: int,
    n_samples: int,
    seed: int,
    max_moment_order: int = 8,
) -> SimReport:
    """Simulate N weighted sums of n iid components and test them against theory.

    Deterministic for fixed (dist, n, n_samples, seed): the sampler is
    chunked over counter-based streams and reduced in chunk order.
    """
    if n < 1:
        raise ValueError("need at least one summand")
    if n_samples < 1000:
        raise ValueError("need at least 1000 samples for the asymptotic KS regime")

    sums = np.sort(_draw_sums(dist, n, n_samples, seed))
    target = _target_law(dist, n)
    crit = KS_CRITICAL_COEFF_1PCT / math.sqrt(n_samples)
    ks = None if target is None else ks_statistic(sums, target.cdf)

    checks = []
    for r in range(1, max_moment_order + 1):
        empirical = float(np.mean(sums**r))
        exact = weighted_sum_moment(dist, n, r)
        variance = weighted_sum_moment(dist, n, 2 * r) - exact * exact
        se = math.sqrt(float(variance) / n_samples)
        tol = 5.0 * se + _ROUNDOFF_TOL * (1.0 + abs(float(exact)))
        checks.append(MomentCheck(r, empirical, exact, se, abs(empirical - float(exact)) <= tol))

    passed = all(c.passed for c in checks) and (ks is None or ks <= crit)
    return SimReport(dist, n, n_samples, seed, target, ks, crit, tuple(checks), passed)
