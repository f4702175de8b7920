"""Integer combinatorics underpinning the exact moment formulas.

Provides binomial and multinomial coefficients, the Pochhammer symbol
(rising factorial, the exact stand-in for every gamma ratio with integer
offset), and streaming enumeration of integer compositions and partitions.

Gamma functions never appear here: for rational ``x`` and integer ``k``,
``Gamma(x+k)/Gamma(x)`` equals the rising factorial ``(x)_k``, which is an
exact rational.  That rewrite is what keeps the identity checks in
:mod:`dirmix.mixture` decidable by exact equality.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence

from .rationals import as_rational

__all__ = [
    "binomial",
    "multinomial",
    "pochhammer",
    "compositions",
    "composition_count",
    "partitions",
    "distinct_arrangements",
]


def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k > n."""
    return math.comb(n, k)


def multinomial(r: int, parts: Sequence[int]) -> int:
    """r! / (i_1! ... i_n!) for nonnegative ``parts`` summing to ``r``."""
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {tuple(parts)!r}")
    if sum(parts) != r:
        raise ValueError(f"parts {tuple(parts)!r} sum to {sum(parts)}, expected {r}")
    coeff = 1
    remaining = r
    for p in parts:
        coeff *= math.comb(remaining, p)
        remaining -= p
    return coeff


def pochhammer(x, k: int) -> Fraction:
    """Rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1."""
    if k < 0:
        raise ValueError("pochhammer order must be nonnegative")
    x = as_rational(x)
    result = Fraction(1)
    for j in range(k):
        result *= x + j
    return result


def compositions(r: int, n: int) -> Iterator[tuple[int, ...]]:
    """Stream all tuples of n nonnegative integers summing to r.

    Order is reverse-lexicographic: the first coordinate descends from r
    to 0 and varies slowest, e.g. (2,0),(1,1),(0,2) for r=2, n=2.  Each
    composition appears exactly once; the total count is C(r+n-1, n-1).
    """
    if r < 0:
        raise ValueError("composition total must be nonnegative")
    if n < 1:
        raise ValueError("composition length must be positive")
    if n == 1:
        yield (r,)
        return
    for first in range(r, -1, -1):
        for rest in compositions(r - first, n - 1):
            yield (first,) + rest


def composition_count(r: int, n: int) -> int:
    """Number of compositions of r into n nonnegative parts (stars and bars)."""
    return math.comb(r + n - 1, n - 1)


def partitions(r: int, max_parts: int) -> Iterator[tuple[int, ...]]:
    """Stream partitions of r into at most ``max_parts`` positive parts.

    Parts are nonincreasing; the empty tuple is yielded for r = 0.  Used to
    collapse permutation-invariant composition sums.
    """
    if r < 0:
        raise ValueError("partition total must be nonnegative")
    if max_parts < 0:
        raise ValueError("max_parts must be nonnegative")

    def descend(remaining: int, largest: int, slots: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for value in range(min(remaining, largest), 0, -1):
            for rest in descend(remaining - value, value, slots - 1):
                yield (value,) + rest

    yield from descend(r, r, max_parts)


def distinct_arrangements(values: Sequence[int]) -> int:
    """Count distinct orderings of a multiset: len! / prod(multiplicity!)."""
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    denom = 1
    for c in counts.values():
        denom *= math.factorial(c)
    return math.factorial(len(values)) // denom
