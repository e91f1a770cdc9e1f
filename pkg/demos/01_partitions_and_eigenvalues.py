"""
Partitions of n and the eigenvalues they index
==============================================

Every eigenvalue of the transposition graph T_n is an integer, and every
partition of n labels one.  This walkthrough computes a few by hand.
"""

from tnspec import (
    CompactPartition,
    compact_eigenvalue,
    conjugate,
    eigenvalue,
    expand,
    make_partition,
)

# A partition is a nonincreasing tuple of positive parts.  The hook
# (4, 1, 1) and the rectangle (3, 3) both partition 6, and both land on
# the same eigenvalue of T_6.
hook = make_partition([4, 1, 1])
rectangle = make_partition([3, 3])
print(f"lambda({hook}) = {eigenvalue(hook)}")
print(f"lambda({rectangle}) = {eigenvalue(rectangle)}")

# The single-row partition (n) always gives the top eigenvalue n(n-1)/2
# and the single-column partition gives its negative.
for n in (4, 6, 10):
    row = make_partition([n])
    column = make_partition([1] * n)
    print(f"n={n}: row -> {eigenvalue(row):4d}, column -> {eigenvalue(column):4d}")

# Transposing the Young diagram (conjugation) negates the eigenvalue.
p = make_partition([5, 4, 4, 2, 2, 2, 1, 1])
q = conjugate(p)
print(f"p  = {p},  lambda = {eigenvalue(p)}")
print(f"p' = {q},  lambda = {eigenvalue(q)}")

# A self-conjugate partition is therefore pinned to eigenvalue zero.
s = make_partition([4, 2, 1, 1])
print(f"{s} is self-conjugate: {conjugate(s).parts == s.parts}, "
      f"lambda = {eigenvalue(s)}")

# Long tails of twos and ones dominate the shapes used later, so there is
# a compact form (head, number of twos, number of ones) with its own
# eigenvalue evaluator.  Both routes agree.
compact = CompactPartition(head=(5, 4, 4), twos=3, ones=2)
flat = expand(compact)
print(f"compact {compact.head} + 2x{compact.twos} + 1x{compact.ones} "
      f"expands to {flat}")
print(f"compact eigenvalue {compact_eigenvalue(compact)} == "
      f"flat eigenvalue {eigenvalue(flat)}")
