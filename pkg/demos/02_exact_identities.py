"""The closed-form identities, checked as exact rational equalities.

Two combinatorial identities and two distributional ones:

* rising-factorial Vandermonde: the multinomial convolution of rising
  factorials telescopes to a single rising factorial;
* spacing-weighted iid arcsin sums follow the power semicircle law with
  exponent (n-1)/2 -- uniform for n=2, Wigner's semicircle for n=3;
* spacing-weighted iid generalized-arcsin(alpha) sums follow the
  four-parameter Beta(n*alpha, n*(1-alpha)) law on the same interval.

No tolerances anywhere: each order is compared as a fraction.
"""

from fractions import Fraction as F

from dirmix import (
    PowerSemicircle,
    verify_arcsin_semicircle,
    verify_genarcsin_beta,
    verify_vandermonde,
    verify_vandermonde_halves,
)


def show(result):
    counter = ""
    if result.counterexample is not None:
        ce = result.counterexample
        counter = f"  (first failure at order {ce.order}: {ce.lhs} != {ce.rhs})"
    print(f"  {result.claim:22s} {result.params}: {result.status.upper()}{counter}")


print("Rising-factorial Vandermonde identity, all parameters 1/2:")
for n in range(2, 7):
    show(verify_vandermonde_halves(n, 12))

print()
print("General parameters:")
for alphas in ((F(1), F(1)), (F(1, 3), F(2, 3)), (F(1, 2), F(2), F(3, 4))):
    show(verify_vandermonde(alphas, 10))

print()
print("Arcsin sums vs the power semicircle with exponent (n-1)/2:")
for n in range(2, 7):
    show(verify_arcsin_semicircle(n, 12))

print()
print("Generalized arcsin sums vs the four-parameter Beta:")
for n in (2, 3, 4):
    for alpha in (F(1, 6), F(1, 4), F(1, 3), F(1, 2), F(3, 4)):
        show(verify_genarcsin_beta(n, alpha, 12))

print()
print("A deliberately wrong target fails immediately, with the exact values:")
show(verify_arcsin_semicircle(3, 8, target=PowerSemicircle(F(3, 2), 1)))
