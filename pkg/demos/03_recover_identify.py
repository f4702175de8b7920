"""Going backwards: from sum moments to the component law.

Given the moments of the spacing-weighted sum of n iid components, a
triangular recursion returns the component moments exactly, one order at
a time.  Because the support is bounded, those moments pin down the law;
we check they form a legitimate moment sequence (complete monotonicity on
[0,1], the Hausdorff criterion) and then identify them against a catalog
grid by exact comparison.
"""

from fractions import Fraction as F

from dirmix import (
    Beta4,
    GenArcsin,
    MomentSequence,
    default_candidates,
    format_rational,
    hausdorff_valid,
    identify,
    moment_sequence,
    recover_component_moments,
    unit_standardized,
    weighted_sum_moments,
)

print("Suppose sums of two iid components follow Beta(1/2, 3/2) on (-1, 1).")
target = Beta4(F(1, 2), F(3, 2), -1, 2)
sums = moment_sequence(target, 10)
recovered = recover_component_moments(sums, 2)
print("Recovered component moments:")
for r, m in enumerate(recovered.moments):
    print(f"  m_{r} = {format_rational(m)}")

check = hausdorff_valid(unit_standardized(recovered))
print(f"Complete monotonicity on [0,1]: {'PASS' if check.passed else 'FAIL'}")

report = identify(recovered, default_candidates(), 10)
print("Catalog matches:", ", ".join(str(m) for m in report.matches) or "none")
print("(generalized arcsin with alpha = 1/4, as the closed form predicts)")

print()
print("Round trip: forward moments, then recovery, returns the component law")
component = GenArcsin(F(1, 3), 1)
forward = weighted_sum_moments(component, 3, 10)
back = recover_component_moments(forward, 3)
print("  exact match:", back.moments == moment_sequence(component, 10).moments)

print()
print("Garbage in, visible garbage out: bump one moment by 1/1000 and both")
print("the validity check and the identification refuse to play along.")
bumped = MomentSequence(
    recovered.support,
    recovered.moments[:2] + (recovered.moments[2] + F(1, 1000),) + recovered.moments[3:],
)
bad_report = identify(bumped, default_candidates(), 10)
print("  matches:", list(bad_report.matches))
print("  validity:", "PASS" if bad_report.validity.passed else "FAIL")

print()
print("A sequence that could never come from [0,1]:")
impossible = MomentSequence((0, 1), (F(1), F(1, 2), F(3, 5)))
check = hausdorff_valid(impossible)
print(f"  (1, 1/2, 3/5): {'PASS' if check.passed else 'FAIL'} at (j, k) = {check.witness}")
print("  (on [0,1], x^2 <= x pointwise, so m_2 cannot exceed m_1)")
