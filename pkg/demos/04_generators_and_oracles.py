"""Random instances and the brute-force oracles that keep the solver honest.

The generator samples a triangulation of the boundary cycle plus a
random interleaving of the chain heights; the bias knob steers splits
toward the sink, which produces chord-rich polygons around the median.
The enumeration oracle re-derives the minimum crossings from first
principles (all entry-side vectors, crossings counted as boundary
interleavings) and must agree with the dynamic program everywhere.
"""

import time
from collections import Counter

from hpccm import (
    GenProfile,
    decompose,
    exhaustive_hamiltonian,
    exhaustive_min_crossings,
    find_rhombi,
    hamiltonian_path,
    random_ot,
    solve,
)

print("bias sweep on chains (4, 4): polygons per instance")
for bias in (0.0, 0.5, 1.0):
    counts = Counter()
    for seed in range(200):
        ot = random_ot(GenProfile(n_left=4, n_right=4, polygon_bias=bias, seed=seed))
        counts[decompose(ot).polygon_count] += 1
    print(f"  bias={bias:3.1f}: {dict(sorted(counts.items()))}")

print("\noracle agreement across 300 random instances")
t0 = time.perf_counter()
mismatches = 0
for seed in range(300):
    profile = GenProfile(
        n_left=1 + seed % 8,
        n_right=1 + (seed // 8) % 8,
        polygon_bias=(seed % 5) / 4,
        seed=seed,
    )
    ot = random_ot(profile)
    if solve(ot).total_crossings != exhaustive_min_crossings(ot):
        mismatches += 1
        print("  mismatch at", profile)
print(f"  {mismatches} mismatches in {time.perf_counter() - t0:.2f}s")

print("\nhamiltonicity: path exists exactly when no rhombus exists")
agree = 0
for seed in range(200):
    ot = random_ot(GenProfile(n_left=1 + seed % 4, n_right=1 + seed % 3, seed=seed))
    if ot.base.n <= 12:
        has_path = hamiltonian_path(ot.base) is not None
        assert has_path == (not find_rhombi(ot.base)) == exhaustive_hamiltonian(ot.base)
        agree += 1
print(f"  checked on {agree} instances, all consistent")
