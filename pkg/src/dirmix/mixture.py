"""Exact moments of Dirichlet-weighted sums S = sum_i R_i X_i.

With R = (R_1, ..., R_n) Dirichlet and X_1, ..., X_n independent of R and
of each other, the multinomial expansion gives

    E[S^r] = sum over compositions i_1+...+i_n = r of
             multinomial(r; i) * E[R_1^i_1 ... R_n^i_n] * prod_j E[X_j^i_j]

and the Dirichlet joint moment is the exact rational

    E[R_1^i_1 ... R_n^i_n] = prod_j (a_j)_{i_j} / (a_1+...+a_n)_r .

The flat case a = (1, ..., 1) is the law of uniform order-statistic
spacings, so these are the exact moments of spacing-weighted sums.

For iid components the summand depends only on the multiset of exponents,
so :func:`weighted_sum_moment` sums over partitions of r weighted by their
number of distinct arrangements; :func:`weighted_sum_moment_general` keeps
the naive composition sum and doubles as the internal equivalence oracle.

The module also houses exact verifiers: the rising-factorial Vandermonde
identity

    sum over i_1+...+i_n = r of multinomial(r; i) * prod_j (a_j)_{i_j}
        = (a_1+...+a_n)_r ,

the arcsin -> power-semicircle closed form for spacing-weighted iid arcsin
sums (lambda = (n-1)/2), and its generalized-arcsin -> Beta extension.
Each verifier compares both sides as exact rationals order by order and
reports the first counterexample, if any.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .catalog import Arcsin, Beta4, Distribution, GenArcsin, MomentSequence, PowerSemicircle
from .combinatorics import (
    binomial,
    compositions,
    distinct_arrangements,
    multinomial,
    partitions,
    pochhammer,
)
from .rationals import Rational, as_rational, format_rational

__all__ = [
    "DirichletWeights",
    "weighted_sum_moment",
    "weighted_sum_moment_general",
    "weighted_sum_moments",
    "affine_moments",
    "Counterexample",
    "VerificationResult",
    "verify_vandermonde",
    "verify_vandermonde_halves",
    "verify_arcsin_semicircle",
    "verify_genarcsin_beta",
]


@dataclass(frozen=True)
class DirichletWeights:
    """Dirichlet law of the weight vector R, by concentration parameters."""

    alphas: tuple[Rational, ...]

    def __post_init__(self):
        alphas = tuple(as_rational(a) for a in self.alphas)
        if len(alphas) < 1:
            raise ValueError("Dirichlet needs at least one component")
        if any(a <= 0 for a in alphas):
            raise ValueError("Dirichlet concentrations must be strictly positive")
        object.__setattr__(self, "alphas", alphas)

    @classmethod
    def flat(cls, n: int) -> "DirichletWeights":
        """The uniform-on-the-simplex case a = (1, ..., 1): spacings weights."""
        return cls((Fraction(1),) * n)

    def __len__(self) -> int:
        return len(self.alphas)

    @property
    def total(self) -> Fraction:
        return sum(self.alphas, Fraction(0))

    def joint_moment(self, parts: Sequence[int]) -> Fraction:
        """E[prod_j R_j^{i_j}], exact."""
        if len(parts) != len(self.alphas):
            raise ValueError(f"exponent tuple has length {len(parts)}, expected {len(self.alphas)}")
        if any(p < 0 for p in parts):
            raise ValueError("exponents must be nonnegative")
        r = sum(parts)
        num = Fraction(1)
        for a, i in zip(self.alphas, parts):
            num *= pochhammer(a, i)
        return num / pochhammer(self.total, r)


def weighted_sum_moment(dist: Distribution, n: int, r: int) -> Fraction:
    """Exact E[S^r] for S = sum R_i X_i with iid X_i ~ dist and flat Dirichlet R.

    Sums over partitions of r (with multiplicity weights) instead of the
    full composition set; the equivalence with the naive sum is a tested
    invariant.
    """
    if n < 1:
        raise ValueError("number of summands must be positive")
    if r < 0:
        raise ValueError("moment order must be nonnegative")
    weights = DirichletWeights.flat(n)
    component = [dist.moment(k) for k in range(r + 1)]
    total = Fraction(0)
    for part in partitions(r, n):
        padded = part + (0,) * (n - len(part))
        term = Fraction(multinomial(r, padded)) * weights.joint_moment(padded)
        for k in part:
            term *= component[k]
        if term != 0:
            total += distinct_arrangements(padded) * term
    return total


def weighted_sum_moment_general(
    dists: Sequence[Distribution], weights: DirichletWeights, r: int
) -> Fraction:
    """Exact E[<R, X>^r] for independent, not necessarily identical X_i."""
    if len(dists) != len(weights):
        raise ValueError(f"{len(dists)} component laws for {len(weights)} Dirichlet components")
    if r < 0:
        raise ValueError("moment order must be nonnegative")
    n = len(weights)
    tables = [[d.moment(k) for k in range(r + 1)] for d in dists]
    total = Fraction(0)
    for comp in compositions(r, n):
        term = Fraction(multinomial(r, comp)) * weights.joint_moment(comp)
        for table, i in zip(tables, comp):
            if term == 0:
                break
            term *= table[i]
        total += term
    return total


def weighted_sum_moments(dist: Distribution, n: int, max_order: int) -> MomentSequence:
    """Moment sequence of S up to max_order; S inherits the component support."""
    moments = tuple(weighted_sum_moment(dist, n, r) for r in range(max_order + 1))
    return MomentSequence(dist.support(), moments)


def affine_moments(seq: MomentSequence, scale, shift) -> MomentSequence:
    """Moments of scale*Y + shift from the moments of Y, by binomial expansion."""
    scale = as_rational(scale)
    shift = as_rational(shift)
    if scale == 0:
        raise ValueError("affine scale must be nonzero")
    out = []
    for r in range(len(seq)):
        m = Fraction(0)
        for j in range(r + 1):
            m += binomial(r, j) * scale**j * shift ** (r - j) * seq[j]
        out.append(m)
    lo, hi = seq.support
    ends = sorted((scale * lo + shift, scale * hi + shift))
    return MomentSequence((ends[0], ends[1]), tuple(out))


@dataclass(frozen=True)
class Counterexample:
    order: int
    lhs: Rational
    rhs: Rational

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
        }


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of an exact order-by-order identity check."""

    claim: str
    params: dict
    orders: tuple[int, int]
    passed: bool
    counterexample: Optional[Counterexample] = None

    def __post_init__(self):
        if self.passed == (self.counterexample is not None):
            raise ValueError("pass status and counterexample must be mutually exclusive")

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json_dict(self) -> dict:
        payload = {
            "schema": 1,
            "claim": self.claim,
            "n": self.params.get("n"),
            "params": {k: v for k, v in self.params.items() if k != "n"},
            "orders": list(self.orders),
            "status": self.status,
        }
        if self.counterexample is not None:
            payload["counterexample"] = self.counterexample.to_json_dict()
        return payload


def _compare_orders(
    claim: str,
    params: dict,
    lhs: Callable[[int], Fraction],
    rhs: Callable[[int], Fraction],
    max_order: int,
) -> VerificationResult:
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    for r in range(1, max_order + 1):
        left, right = lhs(r), rhs(r)
        if left != right:
            return VerificationResult(
                claim, params, (1, max_order), False, Counterexample(r, left, right)
            )
    return VerificationResult(claim, params, (1, max_order), True)


def verify_vandermonde(
    alphas: Sequence, max_order: int = 10, claim: Optional[str] = None
) -> VerificationResult:
    """Check the rising-factorial Vandermonde identity for the given parameters.

    LHS: composition sum of multinomial(r; i) * prod_j (a_j)_{i_j};
    RHS: (sum_j a_j)_r.  Exact equality for every order 1..max_order.
    """
    weights = DirichletWeights(tuple(as_rational(a) for a in alphas))
    n = len(weights)
    poch = [[pochhammer(a, k) for k in range(max_order + 1)] for a in weights.alphas]

    def lhs(r: int) -> Fraction:
        total = Fraction(0)
        for comp in compositions(r, n):
            term = Fraction(multinomial(r, comp))
            for table, i in zip(poch, comp):
                term *= table[i]
            total += term
        return total

    def rhs(r: int) -> Fraction:
        return pochhammer(weights.total, r)

    params = {"alphas": [format_rational(a) for a in weights.alphas], "n": n}
    return _compare_orders(claim or "vandermonde", params, lhs, rhs, max_order)


def verify_vandermonde_halves(n: int, max_order: int = 12) -> VerificationResult:
    """The symmetric half-parameter case: all concentrations 1/2, RHS (n/2)_r."""
    if n < 1:
        raise ValueError("number of components must be positive")
    return verify_vandermonde((Fraction(1, 2),) * n, max_order, claim="vandermonde-halves")


def verify_arcsin_semicircle(
    n: int, max_order: int = 12, target: Optional[Distribution] = None
) -> VerificationResult:
    """Spacing-weighted sum of n iid Arcsin(1) vs the power semicircle law.

    The exact claim: E[S^r] equals the r-th moment of
    PowerSemicircle((n-1)/2, 1) at every order.  A different ``target``
    may be supplied to demonstrate failures.
    """
    if n < 2:
        raise ValueError("need at least two summands")
    if target is None:
        target = PowerSemicircle(Fraction(n - 1, 2), 1)
    source = Arcsin(1)
    params = {"n": n, "target": str(target)}
    return _compare_orders(
        "arcsin-semicircle",
        params,
        lambda r: weighted_sum_moment(source, n, r),
        target.moment,
        max_order,
    )


def verify_genarcsin_beta(
    n: int, alpha, max_order: int = 12, target: Optional[Distribution] = None
) -> VerificationResult:
    """Spacing-weighted sum of n iid GenArcsin(alpha, 1) vs Beta(n*alpha, n*(1-alpha), -1, 2)."""
    if n < 2:
        raise ValueError("need at least two summands")
    alpha = as_rational(alpha)
    if not (0 < alpha < 1):
        raise ValueError("alpha must lie in (0, 1)")
    if target is None:
        target = Beta4(n * alpha, n * (1 - alpha), -1, 2)
    source = GenArcsin(alpha, 1)
    params = {"n": n, "alpha": format_rational(alpha), "target": str(target)}
    return _compare_orders(
        "genarcsin-beta",
        params,
        lambda r: weighted_sum_moment(source, n, r),
        target.moment,
        max_order,
    )
