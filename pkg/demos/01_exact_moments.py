"""Exact moments of spacing-weighted sums, step by step.

Take n independent draws from a bounded law, weight them by uniform
order-statistic spacings (a flat Dirichlet vector), and add.  Every raw
moment of the resulting sum is an exact rational, computed here with no
floating point at all.
"""

from fractions import Fraction as F

from dirmix import (
    Arcsin,
    Beta4,
    DirichletWeights,
    GenArcsin,
    PointMass,
    Uniform,
    format_rational,
    weighted_sum_moment,
    weighted_sum_moment_general,
)

print("Moments of one arcsin draw on (-1, 1):")
x = Arcsin(1)
print("  ", [format_rational(x.moment(r)) for r in range(9)])

print()
print("Moments of the spacing-weighted sum of n arcsin draws:")
for n in (2, 3, 5):
    row = [format_rational(weighted_sum_moment(x, n, r)) for r in range(9)]
    print(f"  n={n}: {row}")
print("(n=2 gives 1/3, 1/5, 1/7, ... -- the uniform law on (-1,1).)")

print()
print("The engine handles any Dirichlet weights and mixed components.")
print("Example: weights ~ Dirichlet(2, 1), components (point mass at 1, Uniform(0,1)):")
weights = DirichletWeights((F(2), F(1)))
components = [PointMass(1), Uniform(0, 1)]
for r in range(5):
    value = weighted_sum_moment_general(components, weights, r)
    print(f"  E[S^{r}] = {format_rational(value)}")

print()
print("Multiplying a uniform weight into a single component reproduces the")
print("classical scale-mixture moments E[U^r] E[X^r] = E[X^r]/(r+1):")
for r in range(1, 6):
    value = weighted_sum_moment_general(
        [Beta4(2, 3, 0, 1), PointMass(0)], DirichletWeights.flat(2), r
    )
    print(f"  r={r}: {format_rational(value)}  vs  "
          f"{format_rational(Beta4(2, 3, 0, 1).moment(r) / (r + 1))}")

print()
print("Generalized arcsin components, exact as well:")
g = GenArcsin(F(1, 4), 1)
print("  ", [format_rational(weighted_sum_moment(g, 2, r)) for r in range(7)])
