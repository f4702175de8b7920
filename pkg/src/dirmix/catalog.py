"""Catalog of bounded-support distributions with exact moments.

Members
-------
Arcsin(a)             density 1/(pi sqrt(a^2 - x^2)) on (-a, a)
GenArcsin(alpha, a)   Beta(alpha, 1-alpha) mapped affinely onto (-a, a);
                      alpha = 1/2 recovers Arcsin(a)
PowerSemicircle(lam, a)
                      density proportional to (a^2 - x^2)^(lam - 1/2) on
                      (-a, a); lam = 1/2 is Uniform(-a, a), lam = 1 is the
                      semicircle law
Beta4(p, q, loc, scale)
                      loc + scale * B with B ~ Beta(p, q) on (0, 1)
Uniform(lo, hi), PointMass(c)

All parameters are exact rationals and every raw moment about the origin
is an exact rational:

* Beta(p, q) on (0, 1):     E B^r = (p)_r / (p+q)_r
* Arcsin(a):                E X^(2k) = C(2k, k) / 4^k * a^(2k), odd zero
* PowerSemicircle(lam, a):  E X^(2k) = (1/2)_k / (lam+1)_k * a^(2k), odd zero

where (x)_k is the rising factorial.  The power-semicircle family and the
symmetric four-parameter Beta describe the same laws,
PowerSemicircle(lam, a) == Beta4(lam + 1/2, lam + 1/2, -a, 2a), which the
test suite checks as an exact moment identity.

Densities and CDFs are floating point (log-gamma normalization, regularized
incomplete beta), vectorized over x.  Moments are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .combinatorics import binomial, pochhammer
from .rationals import Rational, as_rational, format_rational
from .special import log_beta, regularized_incomplete_beta

__all__ = [
    "UnsupportedOperationError",
    "Distribution",
    "Arcsin",
    "GenArcsin",
    "PowerSemicircle",
    "Beta4",
    "Uniform",
    "PointMass",
    "MomentSequence",
    "moment_sequence",
    "parse_distribution",
]


class UnsupportedOperationError(Exception):
    """Operation not defined for this distribution (e.g. density of a point mass)."""


def _beta_raw_moment(p: Fraction, q: Fraction, r: int) -> Fraction:
    """E[B^r] for B ~ Beta(p, q) on (0, 1)."""
    return pochhammer(p, r) / pochhammer(p + q, r)


def _affine_beta_moment(p: Fraction, q: Fraction, loc: Fraction, scale: Fraction, r: int) -> Fraction:
    """E[(loc + scale*B)^r] by exact binomial expansion."""
    total = Fraction(0)
    for j in range(r + 1):
        total += binomial(r, j) * scale**j * loc ** (r - j) * _beta_raw_moment(p, q, j)
    return total


def _beta_density(p: float, q: float, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Beta(p, q) density u^(p-1) v^(q-1) / B(p, q) with v = 1 - u.

    Takes both endpoint distances, each computed directly from x by the
    caller, to avoid cancellation near the support boundary.
    """
    out = np.zeros_like(u)
    inside = (u > 0.0) & (v > 0.0)
    if np.any(inside):
        out[inside] = np.exp(
            (p - 1.0) * np.log(u[inside]) + (q - 1.0) * np.log(v[inside]) - log_beta(p, q)
        )
    return out


def _as_float_array(x) -> tuple[np.ndarray, bool]:
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    return np.atleast_1d(arr), scalar


def _ret(out: np.ndarray, scalar: bool):
    return float(out[0]) if scalar else out


class Distribution:
    """Base interface: exact moments plus floating-point density and CDF."""

    _family_rank: int = 99

    # exact side -----------------------------------------------------------
    def support(self) -> tuple[Fraction, Fraction]:
        raise NotImplementedError

    def moment(self, r: int) -> Fraction:
        """Exact r-th raw moment about the origin."""
        raise NotImplementedError

    def standardize(self) -> tuple["Distribution", Fraction, Fraction]:
        """Return (canonical, sigma, xi) with self distributed as sigma*canonical + xi.

        Canonical supports: (-1, 1) for the symmetric families (arcsin,
        power semicircle, uniform), (0, 1) for the beta shapes.
        """
        raise NotImplementedError

    def affine(self, scale, shift) -> "Distribution":
        """Catalog member distributed as scale*X + shift, for scale != 0."""
        raise NotImplementedError

    # float side -----------------------------------------------------------
    def density(self, x):
        raise NotImplementedError

    def cdf(self, x):
        raise NotImplementedError

    # plumbing --------------------------------------------------------------
    def _params(self) -> tuple[Fraction, ...]:
        raise NotImplementedError

    def sort_key(self) -> tuple:
        return (self._family_rank,) + self._params()

    def moments(self, max_order: int) -> "MomentSequence":
        return moment_sequence(self, max_order)


def _check_affine_scale(scale, shift) -> tuple[Fraction, Fraction]:
    scale = as_rational(scale)
    shift = as_rational(shift)
    if scale == 0:
        raise ValueError("affine scale must be nonzero")
    return scale, shift


@dataclass(frozen=True)
class Arcsin(Distribution):
    """Arcsin law on (-a, a): the Beta(1/2, 1/2) shape, symmetric about 0."""

    a: Rational = Fraction(1)
    _family_rank = 0

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        if self.a <= 0:
            raise ValueError("arcsin half-width must be positive")

    def support(self):
        return (-self.a, self.a)

    def moment(self, r: int) -> Fraction:
        if r < 0:
            raise ValueError("moment order must be nonnegative")
        if r % 2 == 1:
            return Fraction(0)
        k = r // 2
        return Fraction(binomial(r, k), 4**k) * self.a**r

    def standardize(self):
        return (Arcsin(1), self.a, Fraction(0))

    def affine(self, scale, shift):
        scale, shift = _check_affine_scale(scale, shift)
        if shift == 0:
            return Arcsin(abs(scale) * self.a)
        return Beta4(Fraction(1, 2), Fraction(1, 2), -self.a, 2 * self.a).affine(scale, shift)

    def density(self, x):
        arr, scalar = _as_float_array(x)
        af = float(self.a)
        out = np.zeros_like(arr)
        inside = np.abs(arr) < af
        xi = arr[inside]
        # factored form (a-x)(a+x) stays accurate near the endpoints
        out[inside] = 1.0 / (math.pi * np.sqrt((af - xi) * (af + xi)))
        return _ret(out, scalar)

    def cdf(self, x):
        arr, scalar = _as_float_array(x)
        u = np.clip(arr / float(self.a), -1.0, 1.0)
        return _ret(0.5 + np.arcsin(u) / math.pi, scalar)

    def _params(self):
        return (self.a,)

    def __str__(self):
        return f"arcsin:{format_rational(self.a)}"


@dataclass(frozen=True)
class GenArcsin(Distribution):
    """Generalized arcsin: Beta(alpha, 1-alpha) carried onto (-a, a)."""

    alpha: Rational
    a: Rational = Fraction(1)
    _family_rank = 1

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "a", as_rational(self.a))
        if not (0 < self.alpha < 1):
            raise ValueError("genarcsin alpha must lie in (0, 1)")
        if self.a <= 0:
            raise ValueError("genarcsin half-width must be positive")

    def _loc_scale(self) -> tuple[Fraction, Fraction]:
        return (-self.a, 2 * self.a)

    def support(self):
        return (-self.a, self.a)

    def moment(self, r: int) -> Fraction:
        if r < 0:
            raise ValueError("moment order must be nonnegative")
        loc, scale = self._loc_scale()
        return _affine_beta_moment(self.alpha, 1 - self.alpha, loc, scale, r)

    def standardize(self):
        return (Beta4(self.alpha, 1 - self.alpha, 0, 1), 2 * self.a, -self.a)

    def affine(self, scale, shift):
        scale, shift = _check_affine_scale(scale, shift)
        if shift == 0:
            alpha = self.alpha if scale > 0 else 1 - self.alpha
            return GenArcsin(alpha, abs(scale) * self.a)
        loc, sc = self._loc_scale()
        return Beta4(self.alpha, 1 - self.alpha, loc, sc).affine(scale, shift)

    def density(self, x):
        arr, scalar = _as_float_array(x)
        af = float(self.a)
        u = (arr + af) / (2.0 * af)
        v = (af - arr) / (2.0 * af)
        out = _beta_density(float(self.alpha), float(1 - self.alpha), u, v)
        return _ret(out / (2.0 * af), scalar)

    def cdf(self, x):
        arr, scalar = _as_float_array(x)
        af = float(self.a)
        u = np.clip((arr + af) / (2.0 * af), 0.0, 1.0)
        out = regularized_incomplete_beta(float(self.alpha), float(1 - self.alpha), u)
        return _ret(np.atleast_1d(out), scalar)

    def _params(self):
        return (self.alpha, self.a)

    def __str__(self):
        return f"genarcsin:{format_rational(self.alpha)},{format_rational(self.a)}"


@dataclass(frozen=True)
class PowerSemicircle(Distribution):
    """Power semicircle on (-a, a): density ~ (a^2 - x^2)^(lam - 1/2), lam > -1/2."""

    lam: Rational
    a: Rational = Fraction(1)
    _family_rank = 2

    def __post_init__(self):
        object.__setattr__(self, "lam", as_rational(self.lam))
        object.__setattr__(self, "a", as_rational(self.a))
        if self.lam <= Fraction(-1, 2):
            raise ValueError("power-semicircle exponent must exceed -1/2")
        if self.a <= 0:
            raise ValueError("power-semicircle half-width must be positive")

    def support(self):
        return (-self.a, self.a)

    def moment(self, r: int) -> Fraction:
        if r < 0:
            raise ValueError("moment order must be nonnegative")
        if r % 2 == 1:
            return Fraction(0)
        k = r // 2
        return pochhammer(Fraction(1, 2), k) / pochhammer(self.lam + 1, k) * self.a**r

    def standardize(self):
        return (PowerSemicircle(self.lam, 1), self.a, Fraction(0))

    def affine(self, scale, shift):
        scale, shift = _check_affine_scale(scale, shift)
        if shift == 0:
            return PowerSemicircle(self.lam, abs(scale) * self.a)
        half = self.lam + Fraction(1, 2)
        return Beta4(half, half, -self.a, 2 * self.a).affine(scale, shift)

    def density(self, x):
        arr, scalar = _as_float_array(x)
        af = float(self.a)
        lam = float(self.lam)
        lognorm = math.lgamma(lam + 1.0) - math.lgamma(lam + 0.5) - 0.5 * math.log(math.pi) - 2.0 * lam * math.log(af)
        out = np.zeros_like(arr)
        inside = np.abs(arr) < af
        if np.any(inside):
            xi = arr[inside]
            out[inside] = np.exp(lognorm + (lam - 0.5) * (np.log(af - xi) + np.log(af + xi)))
        return _ret(out, scalar)

    def cdf(self, x):
        arr, scalar = _as_float_array(x)
        af = float(self.a)
        half = float(self.lam) + 0.5
        u = np.clip((arr + af) / (2.0 * af), 0.0, 1.0)
        out = regularized_incomplete_beta(half, half, u)
        return _ret(np.atleast_1d(out), scalar)

    def _params(self):
        return (self.lam, self.a)

    def __str__(self):
        return f"psc:{format_rational(self.lam)},{format_rational(self.a)}"


@dataclass(frozen=True)
class Beta4(Distribution):
    """Four-parameter Beta: loc + scale * B with B ~ Beta(p, q) on (0, 1)."""

    p: Rational
    q: Rational
    loc: Rational = Fraction(0)
    scale: Rational = Fraction(1)
    _family_rank = 3

    def __post_init__(self):
        object.__setattr__(self, "p", as_rational(self.p))
        object.__setattr__(self, "q", as_rational(self.q))
        object.__setattr__(self, "loc", as_rational(self.loc))
        object.__setattr__(self, "scale", as_rational(self.scale))
        if self.p <= 0 or self.q <= 0:
            raise ValueError("beta shape parameters must be positive")
        if self.scale <= 0:
            raise ValueError("beta scale must be positive")

    def support(self):
        return (self.loc, self.loc + self.scale)

    def moment(self, r: int) -> Fraction:
        if r < 0:
            raise ValueError("moment order must be nonnegative")
        return _affine_beta_moment(self.p, self.q, self.loc, self.scale, r)

    def standardize(self):
        return (Beta4(self.p, self.q, 0, 1), self.scale, self.loc)

    def affine(self, scale, shift):
        scale, shift = _check_affine_scale(scale, shift)
        if scale > 0:
            return Beta4(self.p, self.q, scale * self.loc + shift, scale * self.scale)
        # scale*B + c with scale < 0: rewrite through B' = 1 - B ~ Beta(q, p)
        return Beta4(self.q, self.p, scale * (self.loc + self.scale) + shift, -scale * self.scale)

    def density(self, x):
        arr, scalar = _as_float_array(x)
        locf, scalef = float(self.loc), float(self.scale)
        hif = float(self.loc + self.scale)
        u = (arr - locf) / scalef
        v = (hif - arr) / scalef
        out = _beta_density(float(self.p), float(self.q), u, v)
        return _ret(out / scalef, scalar)

    def cdf(self, x):
        arr, scalar = _as_float_array(x)
        locf, scalef = float(self.loc), float(self.scale)
        u = np.clip((arr - locf) / scalef, 0.0, 1.0)
        out = regularized_incomplete_beta(float(self.p), float(self.q), u)
        return _ret(np.atleast_1d(out), scalar)

    def _params(self):
        return (self.p, self.q, self.loc, self.scale)

    def __str__(self):
        parts = [format_rational(v) for v in (self.p, self.q, self.loc, self.scale)]
        return "beta:" + ",".join(parts)


@dataclass(frozen=True)
class Uniform(Distribution):
    """Uniform law on (lo, hi)."""

    lo: Rational = Fraction(0)
    hi: Rational = Fraction(1)
    _family_rank = 4

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rational(self.lo))
        object.__setattr__(self, "hi", as_rational(self.hi))
        if not self.lo < self.hi:
            raise ValueError("uniform support must satisfy lo < hi")

    def support(self):
        return (self.lo, self.hi)

    def moment(self, r: int) -> Fraction:
        if r < 0:
            raise ValueError("moment order must be nonnegative")
        return (self.hi ** (r + 1) - self.lo ** (r + 1)) / ((r + 1) * (self.hi - self.lo))

    def standardize(self):
        # symmetric family: canonical support (-1, 1)
        sigma = (self.hi - self.lo) / 2
        xi = (self.hi + self.lo) / 2
        return (Uniform(-1, 1), sigma, xi)

    def affine(self, scale, shift):
        scale, shift = _check_affine_scale(scale, shift)
        ends = sorted((scale * self.lo + shift, scale * self.hi + shift))
        return Uniform(ends[0], ends[1])

    def density(self, x):
        arr, scalar = _as_float_array(x)
        lof, hif = float(self.lo), float(self.hi)
        out = np.zeros_like(arr)
        out[(arr > lof) & (arr < hif)] = 1.0 / (hif - lof)
        return _ret(out, scalar)

    def cdf(self, x):
        arr, scalar = _as_float_array(x)
        lof, hif = float(self.lo), float(self.hi)
        return _ret(np.clip((arr - lof) / (hif - lof), 0.0, 1.0), scalar)

    def _params(self):
        return (self.lo, self.hi)

    def __str__(self):
        return f"uniform:{format_rational(self.lo)},{format_rational(self.hi)}"


@dataclass(frozen=True)
class PointMass(Distribution):
    """Degenerate law concentrated at c."""

    c: Rational
    _family_rank = 5

    def __post_init__(self):
        object.__setattr__(self, "c", as_rational(self.c))

    def support(self):
        return (self.c, self.c)

    def moment(self, r: int) -> Fraction:
        if r < 0:
            raise ValueError("moment order must be nonnegative")
        return self.c**r

    def standardize(self):
        raise UnsupportedOperationError("a point mass has no canonical standardization")

    def affine(self, scale, shift):
        scale, shift = _check_affine_scale(scale, shift)
        return PointMass(scale * self.c + shift)

    def density(self, x):
        raise UnsupportedOperationError("a point mass has no density")

    def cdf(self, x):
        arr, scalar = _as_float_array(x)
        return _ret((arr >= float(self.c)).astype(float), scalar)

    def _params(self):
        return (self.c,)

    def __str__(self):
        return f"point:{format_rational(self.c)}"


@dataclass(frozen=True)
class MomentSequence:
    """Support interval plus exact raw moments m_0..m_R (m_0 = 1)."""

    support: tuple[Rational, Rational]
    moments: tuple[Rational, ...]

    def __post_init__(self):
        lo, hi = self.support
        lo, hi = as_rational(lo), as_rational(hi)
        if lo > hi:
            raise ValueError("support interval is reversed")
        object.__setattr__(self, "support", (lo, hi))
        object.__setattr__(self, "moments", tuple(as_rational(m) for m in self.moments))
        if not self.moments or self.moments[0] != 1:
            raise ValueError("moment sequence must start with m_0 = 1")

    @property
    def order(self) -> int:
        return len(self.moments) - 1

    def __getitem__(self, r: int) -> Fraction:
        return self.moments[r]

    def __len__(self) -> int:
        return len(self.moments)

    def to_json_dict(self) -> dict:
        lo, hi = self.support
        return {
            "support": [format_rational(lo), format_rational(hi)],
            "moments": [format_rational(m) for m in self.moments],
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "MomentSequence":
        support = payload["support"]
        if len(support) != 2:
            raise ValueError("support must be a [lo, hi] pair")
        lo, hi = (as_rational(str(v)) for v in support)
        moments = tuple(as_rational(str(m)) for m in payload["moments"])
        return cls((lo, hi), moments)


def moment_sequence(dist: Distribution, max_order: int) -> MomentSequence:
    """Exact moments m_0..m_max_order of a catalog member."""
    if max_order < 0:
        raise ValueError("max_order must be nonnegative")
    return MomentSequence(dist.support(), tuple(dist.moment(r) for r in range(max_order + 1)))


_SPEC_ARITY = {
    "arcsin": (1, 1),
    "genarcsin": (2, 2),
    "psc": (2, 2),
    "beta": (2, 4),
    "uniform": (2, 2),
    "point": (1, 1),
}


def parse_distribution(text: str) -> Distribution:
    """Parse the CLI token syntax.

    arcsin:a | genarcsin:alpha,a | psc:lambda,a | beta:p,q[,loc,scale] |
    uniform:lo,hi | point:c -- parameters are rational literals ("1/2") or
    exact decimals ("0.25").
    """
    name, sep, argtext = text.strip().partition(":")
    name = name.lower()
    if name not in _SPEC_ARITY:
        raise ValueError(f"unknown distribution {name!r} in {text!r}")
    if not sep or not argtext:
        raise ValueError(f"missing parameters in distribution token {text!r}")
    args = [as_rational(tok) for tok in argtext.split(",")]
    lo_arity, hi_arity = _SPEC_ARITY[name]
    if not lo_arity <= len(args) <= hi_arity:
        raise ValueError(f"{name} takes {lo_arity}..{hi_arity} parameters, got {len(args)} in {text!r}")
    if name == "arcsin":
        return Arcsin(args[0])
    if name == "genarcsin":
        return GenArcsin(args[0], args[1])
    if name == "psc":
        return PowerSemicircle(args[0], args[1])
    if name == "beta":
        if len(args) == 2:
            return Beta4(args[0], args[1])
        if len(args) != 4:
            raise ValueError(f"beta takes 2 or 4 parameters, got {len(args)} in {text!r}")
        return Beta4(args[0], args[1], args[2], args[3])
    if name == "uniform":
        return Uniform(args[0], args[1])
    return PointMass(args[0])
