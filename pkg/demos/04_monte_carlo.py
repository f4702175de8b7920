"""Simulation against theory: spacings, component draws, KS, moment errors.

Draws a million spacing-weighted arcsin sums with a fixed seed, tests the
empirical distribution against the predicted power-semicircle law, and
overlays the histogram on the exact density (PNG written next to this
script when matplotlib is available).  Reports are bit-identical across
runs with the same seed.
"""

import pathlib
from fractions import Fraction as F

import numpy as np

from dirmix import Arcsin, GenArcsin, RngStream, sample_spacings, sample_variates, simulate

SEED = 12345

print("Spacings are differences of sorted uniforms; rows sum to one:")
rows = sample_spacings(4, RngStream(SEED), size=3)
for row in rows:
    print("  ", np.round(row, 4), "sum =", row.sum())

print()
for dist, n in ((Arcsin(1), 2), (Arcsin(1), 3), (GenArcsin(F(1, 4), 1), 2)):
    report = simulate(dist, n, 10**6, SEED)
    print(f"dist={report.dist}, n={report.n}, N={report.n_samples}, seed={report.seed}")
    print(f"  predicted law: {report.target}")
    print(f"  KS statistic {report.ks_statistic:.6f} vs 1% critical "
          f"{report.ks_critical_1pct:.6f} -> {'PASS' if report.ks_passed else 'FAIL'}")
    worst = max(report.checks, key=lambda c: abs(c.empirical - c.exact_float))
    print(f"  worst moment (r={worst.order}): empirical {worst.empirical:+.6f} "
          f"vs exact {worst.exact_float:+.6f} (SE {worst.std_error:.2e})")
    print(f"  verdict: {'PASS' if report.passed else 'FAIL'}")
    print()

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping the histogram figure")
else:
    n = 3
    dist = Arcsin(1)
    rng = RngStream(SEED, 0)
    weights = sample_spacings(n, rng, size=200_000)
    variates = sample_variates(dist, rng, size=(200_000, n))
    sums = (weights * variates).sum(axis=1)

    target = simulate(dist, n, 1000, SEED).target
    grid = np.linspace(-0.999, 0.999, 400)

    fig, ax = plt.subplots(figsize=(7, 4))
    ax.hist(sums, bins=120, density=True, alpha=0.45, label="simulated sums")
    ax.plot(grid, target.density(grid), lw=2, label=f"exact density ({target})")
    ax.set_title(f"{dist} components, n={n}: the semicircle emerges")
    ax.legend()
    out = pathlib.Path(__file__).with_name("04_monte_carlo.png")
    fig.savefig(out, dpi=120, bbox_inches="tight")
    print(f"wrote {out}")
