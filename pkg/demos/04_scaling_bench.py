#!/usr/bin/env python3
"""How the primitive-call count grows as the input system grows.

The point of the sampling algorithm is that the number of expensive
primitive calls grows roughly linearly in m when the combinatorial
dimension stays fixed, even though the certificate search space explodes.
This script measures it directly on random rank-6 quadric systems.
"""

import statistics
import time

from hellyspace import SolveConfig, gen_random, solve_basis

SIZES = [250, 500, 1000, 2000]
SEEDS = 8

print("%6s  %18s  %8s  %10s" % ("m", "mean primitive", "stddev", "wall (s)"))
means = []
for m in SIZES:
    counts = []
    t0 = time.perf_counter()
    for seed in range(SEEDS):
        system = gen_random(3, 2, m, target_rank=6, seed=seed)
        out = solve_basis(SolveConfig(system, seed=seed))
        counts.append(out.result.primitive_calls)
    dt = time.perf_counter() - t0
    mean = statistics.fmean(counts)
    means.append(mean)
    print("%6d  %18.1f  %8.1f  %10.2f"
          % (m, mean, statistics.pstdev(counts), dt))

# Doubling m should roughly double the work. A quadratic scan would
# quadruple it, so ratios near 2 are the signature we want.
print("\ndoubling ratios:")
for a, b in zip(means, means[1:]):
    print("  %.2f" % (b / a))

print("\nsame numbers are available from the command line via")
print("  hellyspace bench scaling --family random --sizes 250,500,1000,2000 --seeds 8")
