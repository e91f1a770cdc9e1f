"""
Two independent oracles for the spectrum of T_n
===============================================

The partition formula says what the spectrum should be.  For small n we can
also build the n! x n! adjacency matrix and ask a numeric eigensolver.  The
two answers must agree exactly — that cross-check is what makes the rest of
the library trustworthy.
"""

import numpy as np

from tnspec import (
    EnumerationConstraints,
    cayley_adjacency,
    cayley_spectrum,
    enumerate_partitions,
    partition_count,
    spectrum,
)

# Enumerate all partitions of 6 in reverse lexicographic order and count
# them against the pentagonal-number recurrence.
partitions = list(enumerate_partitions(6))
print(f"p(6) = {len(partitions)} (recurrence says {partition_count(6)})")
print("first five:", ", ".join(str(p) for p in partitions[:5]))

# The spectrum is the set of distinct eigenvalues over all partitions.
# T_4 already shows a hole at +-1 and +-3: not every integer in the range
# is hit.
print("Spec(T_4) =", spectrum(4).values)

# Each value remembers the first partition that produced it.
full = spectrum(6)
for value in (15, 5, 0, -9):
    print(f"  {value:3d} witnessed by {full.witness(value)}")

# Now the numeric side: the Cayley graph of Sym(4) under all 6
# transpositions, a 24 x 24 symmetric 0/1 matrix.
adjacency = cayley_adjacency(4)
print(f"adjacency: shape {adjacency.shape}, "
      f"regular of degree {int(adjacency[0].sum())}")

# Its eigenvalues come back as floats; they round to integers within 1e-6
# and the distinct set equals the partition-derived spectrum.
raw = np.linalg.eigvalsh(adjacency)
print(f"max rounding residual: {np.max(np.abs(raw - np.rint(raw))):.2e}")
print("numeric  :", cayley_spectrum(4).values)
print("partition:", spectrum(4).values)

# The enumeration also accepts shape constraints (max first part, max
# length), which is how restricted tails are searched later.
narrow = spectrum(6, EnumerationConstraints(max_first_part=2))
print("Spec restricted to parts <= 2:", narrow.values)

# Spectra for larger n reveal genuine gaps inside [-n, n]: T_18 misses 4.
print("4 in Spec(T_18):", 4 in spectrum(18))
print("5 in Spec(T_18):", 5 in spectrum(18))
