"""Inverse direction: recover component moments from weighted-sum moments.

For iid components with flat Dirichlet weights, the composition expansion
of E[S^r] collapses to

    C(n+r-1, r) * E[S^r] = sum over compositions i_1+...+i_n = r of
                           prod_j E[X^{i_j}] ,

and the only compositions involving E[X^r] are the n degenerate ones with
a single nonzero part.  Solving for E[X^r] gives a recursion in r whose
right side uses already-recovered lower moments only, so the component
moment sequence is determined uniquely -- and, the support being bounded,
so is the component law.

Whether a recovered sequence is a legitimate moment sequence on [0, 1] is
decided by the Hausdorff criterion: complete monotonicity, i.e.
(-1)^k (Delta^k m)_j >= 0 for all j, k, checked here exactly to a finite
order.  Identification against a candidate list is by exact rational
moment equality after mapping everything affinely onto [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .catalog import Distribution, MomentSequence, PointMass, GenArcsin, PowerSemicircle
from .combinatorics import binomial, compositions
from .mixture import affine_moments
from .rationals import format_rational

__all__ = [
    "recover_component_moments",
    "unit_standardized",
    "HausdorffCheck",
    "hausdorff_valid",
    "IdentificationReport",
    "identify",
    "default_candidates",
]


def recover_component_moments(s_seq: MomentSequence, n: int) -> MomentSequence:
    """Solve the moment recursion: component moments from weighted-sum moments.

    ``s_seq`` holds E[S^r] for r = 0..R; the result holds E[X^r] on the same
    support, same length.  Requires n >= 2 iid components.
    """
    if n < 2:
        raise ValueError("recovery needs at least two summands")
    recovered: list[Fraction] = [Fraction(1)]
    for r in range(1, len(s_seq)):
        total = binomial(n + r - 1, r) * s_seq[r]
        # subtract every composition whose parts are all < r; the remaining
        # n compositions each contribute one factor of the unknown E[X^r]
        cross = Fraction(0)
        for comp in compositions(r, n):
            if max(comp) == r:
                continue
            term = Fraction(1)
            for i in comp:
                term *= recovered[i]
            cross += term
        recovered.append((total - cross) / n)
    return MomentSequence(s_seq.support, tuple(recovered))


def unit_standardized(seq: MomentSequence) -> MomentSequence:
    """Affinely map a sequence with support [lo, hi] onto [0, 1]."""
    lo, hi = seq.support
    if lo == hi:
        raise ValueError("cannot standardize a zero-width support")
    if (lo, hi) == (Fraction(0), Fraction(1)):
        return seq
    width = hi - lo
    return affine_moments(seq, Fraction(1) / width, -lo / width)


@dataclass(frozen=True)
class HausdorffCheck:
    """Outcome of the complete-monotonicity test; witness is (j, k) on failure."""

    passed: bool
    witness: Optional[tuple[int, int]] = None

    def to_json_dict(self) -> dict:
        payload = {"status": "pass" if self.passed else "fail"}
        if self.witness is not None:
            payload["witness"] = {"j": self.witness[0], "k": self.witness[1]}
        return payload


def hausdorff_valid(seq: MomentSequence, order: Optional[int] = None) -> HausdorffCheck:
    """Exact complete-monotonicity check for a sequence on [0, 1].

    Passes iff (-1)^k (Delta^k m)_j >= 0 for all j + k <= order, where Delta
    is the forward difference in j.  On failure, returns the first violating
    (j, k) scanning k outward.
    """
    if seq.support != (Fraction(0), Fraction(1)):
        raise ValueError("Hausdorff check requires support [0, 1]; standardize first")
    if order is None:
        order = seq.order
    if not 0 <= order <= seq.order:
        raise ValueError(f"order {order} outside the available range 0..{seq.order}")
    # row k of the table holds Delta^k m_j for j = 0..order-k
    row = list(seq.moments[: order + 1])
    sign = 1
    for k in range(order + 1):
        for j, value in enumerate(row):
            if sign * value < 0:
                return HausdorffCheck(False, (j, k))
        row = [row[j + 1] - row[j] for j in range(len(row) - 1)]
        sign = -sign
    return HausdorffCheck(True)


@dataclass(frozen=True)
class IdentificationReport:
    """Exact-match identification of a moment sequence against candidates."""

    recovered: MomentSequence
    candidates: tuple[Distribution, ...]
    matches: tuple[Distribution, ...]
    validity: HausdorffCheck
    checked_order: int

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "recovered": self.recovered.to_json_dict(),
            "checked_order": self.checked_order,
            "candidates": [str(c) for c in self.candidates],
            "matches": [str(m) for m in self.matches],
            "validity": self.validity.to_json_dict(),
        }


def _pointmass_consistency(seq: MomentSequence) -> bool:
    c = seq[1] if len(seq) > 1 else seq.support[0]
    return all(seq[r] == c**r for r in range(len(seq)))


def identify(
    seq: MomentSequence, candidates: Sequence[Distribution], max_order: int = 12
) -> IdentificationReport:
    """Compare a sequence against candidate laws up to affine equivalence.

    Everything is standardized onto [0, 1] and compared by exact rational
    equality through ``min(max_order, seq.order)``; the report carries the
    Hausdorff validity verdict of the standardized sequence.  Matching is
    exact or not at all: there is no tolerance.
    """
    candidates = tuple(candidates)
    checked = min(max_order, seq.order)
    lo, hi = seq.support

    if lo == hi:
        # degenerate support: only point masses can match, and only if the
        # sequence itself is the power sequence of its location
        consistent = _pointmass_consistency(seq)
        matches = tuple(c for c in candidates if isinstance(c, PointMass)) if consistent else ()
        validity = HausdorffCheck(consistent, None if consistent else (0, 1))
        return IdentificationReport(seq, candidates, matches, validity, checked)

    unit_seq = unit_standardized(seq)
    validity = hausdorff_valid(unit_seq, checked)

    matches = []
    for cand in candidates:
        if isinstance(cand, PointMass):
            continue
        cand_unit = unit_standardized(cand.moments(checked))
        if all(cand_unit[r] == unit_seq[r] for r in range(1, checked + 1)):
            matches.append(cand)
    matches.sort(key=lambda d: d.sort_key())
    return IdentificationReport(seq, candidates, tuple(matches), validity, checked)


def default_candidates() -> tuple[Distribution, ...]:
    """Default identification grid: alpha in twelfths, lambda in halves."""
    grid: list[Distribution] = [GenArcsin(Fraction(k, 12), 1) for k in range(1, 12)]
    grid.extend(PowerSemicircle(Fraction(k, 2), 1) for k in range(0, 7))
    return tuple(grid)
