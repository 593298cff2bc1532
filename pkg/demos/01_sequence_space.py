#!/usr/bin/env python3
"""Tour of the weighted sequence space.

The norm is the sup over n of ( sum_{k<=n} (k+1)^2 c_k^2 ) / (n+1).
The sequence c_k = 1/(k+1) is the canonical unit-norm element: every
weighted term equals 1 and the prefix sums telescope, so every prefix
ratio is exactly 1.  Heavier heads or slower tails push the ratio up.
"""

import numpy as np

from hardyhilbert import XSequence, classic_sequence, prefix_ratios, xnorm

print("=" * 70)
print("  WEIGHTED PREFIX-RATIO NORM")
print("=" * 70)

for N in (10, 1000, 100_000):
    c = classic_sequence(N)
    ratios = prefix_ratios(c)
    print(f"classic N={N:>6}: norm={xnorm(c):.15f}  "
          f"ratio range [{ratios.min():.15f}, {ratios.max():.15f}]")

print()
print("other sequences (N = 1000):")
N = 1000
k = np.arange(N, dtype=float)
candidates = {
    "impulse at 3            ": np.eye(N)[3],
    "1/(k+1)^0.75 (too slow) ": (k + 1.0) ** -0.75,
    "1/(k+1)^1.25 (faster)   ": (k + 1.0) ** -1.25,
    "random uniform [0,1)    ": np.random.default_rng(0).random(N),
}
for name, values in candidates.items():
    c = XSequence(values)
    arg = int(np.argmax(prefix_ratios(c)))
    print(f"  {name} norm={xnorm(c):10.4f}  worst prefix at n={arg}")

print()
print("scaling and extension behave like a norm should:")
vals = np.random.default_rng(1).random(50)
base = xnorm(XSequence(vals))
print(f"  ||c|| = {base:.12f}")
print(f"  ||3c|| = {xnorm(XSequence(3 * vals)):.12f}  (= 3||c||)")
longer = np.concatenate([vals, np.random.default_rng(2).random(20)])
print(f"  after appending 20 entries: {xnorm(XSequence(longer)):.12f}  (never smaller)")
