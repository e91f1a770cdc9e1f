"""
Covering whole segments of the spectrum
=======================================

With the families in place, two drivers stitch them into interval coverage:
a linear segment [-n, n] for every n >= 31, and a quadratic-length segment
[y1, y2] (plus its mirror) for every n >= 48.  Both return witnesses that
re-verify on construction, so a "cover" is a finished, checkable object.
"""

from tnspec import (
    conjecture_scan,
    head_interval,
    head_range,
    linear_segment_cover,
    linear_segment_witness,
    quadratic_segment_bounds,
    quadratic_segment_cover,
    quadratic_segment_witness,
    segment_cells,
)

# The linear driver tiles [0, n] into four cells, one per family group,
# and reaches negative targets by conjugation.
print("cells at n=31:", segment_cells(31))
for k in (0, -15, 31):
    record = linear_segment_witness(31, k)
    print(f"  k={k:3d}: {record.partition}   [{record.family}]")

# A full cover of [-31, 31]: 63 targets, no failures, and no witness ever
# needs a first part beyond (n+3)/2.
report = linear_segment_cover(31)
print(f"n=31: covered {report.covered}, failures {len(report.failures)}, "
      f"max first part {report.max_first_part}")

# The quadratic segment ends at the triangular number of the largest head
# that still leaves room for a tail.
bounds = quadratic_segment_bounds(48)
print(f"n=48: y1={bounds.y1}, y2={bounds.y2}, heads {head_range(48)}")

# Each head n1 owns a bracket of targets around its triangular number;
# consecutive brackets overlap, which is what makes the segment gap-free.
for n1 in (17, 18, 31, 32):
    low, high = head_interval(48, n1)
    print(f"  head {n1:2d} brackets [{low}, {high}]")

# A target deep inside the segment: peel off the bracketing head, delegate
# the small residual to the linear driver (or the oracle).
for k in (90, 496, -90):
    record = quadratic_segment_witness(48, k)
    print(f"  k={k:4d}: {record.partition}   [{record.family}]")

# The bracketing head is not always usable: k=413 brackets to head 30,
# whose residual target -4 simply does not occur in Spec(T_18).  The
# driver then tries the other admissible heads until one works.
record = quadratic_segment_witness(48, 413)
print(f"  k= 413: {record.partition}   [{record.family}]  (rescued)")

# Sweeping the whole segment at n=48: every target in [74, 496] covered.
report = quadratic_segment_cover(48)
print(f"n=48 segment: covered {report.covered}, "
      f"failures {len(report.failures)}")

# Between the two proven segments sits an open strip (n, y1).  The scan
# reports what an exhaustive search finds there — at n=48 every value in
# [49, 73] is present, it just lacks a closed-form construction.
gap = conjecture_scan(48)
print(f"gap scan n=48: window {gap.segment}, present {gap.covered}, "
      f"absent {len(gap.failures)}")
