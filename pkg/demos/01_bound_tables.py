"""Generalization-bound tables for the random-projection classifier.

Reproduces the three headline calculations: the per-dimension comparison
of the projection-count bound against the affine VC bound, the largest
projection budget that still beats each small VC dimension, and the
crossover point where the VC bound takes over.
"""

import math

from ntarp import bounds, experiments

print("High-confidence gap bounds (delta = 0.1, N = 10000)")
print(f"{'d':>3} {'n':>10} {'projection bound':>17} {'affine VC bound':>16}")
for row in experiments.bounds_table_rows():
    print(
        f"{row['d']:>3} {row['n']:>10} {row['tarp_gap_bound']:>17.3f} "
        f"{row['vc_gap_bound']:>16.3f}"
    )

print()
print("Largest projection budget whose chaining bound beats VC dimension d")
for row in experiments.budget_table_rows():
    print(f"  d_vc = {row['d_vc']}: n <= {row['max_n']:,}")

print()
print("Crossover projection count at N = 1000 (both exponent readings)")
for d in (1, 2, 3, 5):
    report = experiments.crossover_report(N=1000, d=d)
    print(
        f"  d = {d}: exponent-d reading {report['crossover_exponent_d']:.3g}, "
        f"exponent-(d+1) reading {report['crossover_exponent_d_plus_1']:.3g}"
    )

print()
print("Supporting constants")
print(f"  entropy integral at n = 1: {bounds.chaining_integral(1):.5f} (<= 1.66)")
print(
    "  projections needed to land near an optimal direction "
    f"(d = 2, k = 1, delta = 0.1): {math.ceil(bounds.required_projections(2, 1, 0.1))}"
)
print(f"  Hoeffding deviation (N = 2000, delta = 0.1): {bounds.hoeffding_deviation(2000, 0.1):.4f}")
