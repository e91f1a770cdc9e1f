"""Segment coverage drivers: explicit witnesses for whole runs of integers.

Two constructive results are implemented:

* linear segment — for n >= 31, every integer k in [-n, n] is an
  eigenvalue of T_n.  Nonnegative targets dispatch to a witness family by
  value (S1 ranges -> A1 values -> S2 cases -> A2 rows); negative targets
  take the conjugate of the witness for -k.

* quadratic segment — for n >= 48, every integer k with y1 <= |k| <= y2
  is an eigenvalue, where

      y1 = C(ceil(n/3) + 1, 2) - 2*(floor(2n/3) - 1)
      y2 = C(floor((2n+1)/3), 2)

  The witness takes the smallest leading part n1 with
  C(n1,2) - 2(n - n1) <= k <= C(n1,2); the residual target then lies in
  [-(n - n1), n - n1] and is produced by the linear driver when
  n - n1 >= 31 or by exhaustive enumeration of the (first-part-bounded)
  residual partitions otherwise.  Consecutive head intervals overlap
  throughout the head range, so a target with no head is a bug, not a gap.

The gap between the two segments, [n+1, y1-1], is conjectured but not
proven to be covered; conjecture_scan reports oracle membership for each
value in it without asserting anything.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import (
    BelowConstructiveRangeError,
    DispatchGapError,
    HeadTooSmallError,
    NoHeadFitsError,
    TargetOutOfSegmentError,
    TnSpecError,
    WitnessNotFoundError,
)
from .families import (
    WitnessRecord,
    a1_values,
    a1_witness,
    a2_witness,
    make_witness,
    s1_witness,
    s2_witness,
)
from .oracle import EnumerationConstraints, resolve_oracle_limit, spectrum
from .partitions import Partition, choose2, eigenvalue_via_head

LINEAR_MIN_N = 31
QUADRATIC_MIN_N = 48


@dataclass(frozen=True)
class SegmentBounds:
    """Endpoints of the quadratic segment [y1, y2] (and its mirror)."""

    n: int
    y1: int
    y2: int

    def to_json_dict(self) -> dict:
        return {"n": self.n, "y1": self.y1, "y2": self.y2}


@dataclass(frozen=True)
class CoverageReport:
    """Outcome of trying to witness every target in a segment.

    covered + len(failures) always equals the number of targets, so a
    report is complete by construction.  records holds one verified
    WitnessRecord per covered target, in target order; histogram counts
    records per family chain.
    """

    n: int
    segment: tuple[int, int]
    covered: int
    failures: tuple[tuple[int, str], ...]
    histogram: dict[str, int]
    max_first_part: int
    records: tuple[WitnessRecord, ...]

    def to_json_dict(self, with_witnesses: bool = False) -> dict:
        payload = {
            "n": self.n,
            "segment": list(self.segment),
            "covered": self.covered,
            "failures": [[target, message] for target, message in self.failures],
            "histogram": dict(sorted(self.histogram.items())),
            "max_first_part": self.max_first_part,
        }
        if with_witnesses:
            payload["witnesses"] = {
                str(record.target): list(record.partition.parts)
                for record in self.records
            }
        return payload

    def to_csv_rows(self) -> list[list[str]]:
        rows = [["target", "status", "family", "partition", "detail"]]
        by_target: dict[int, list[str]] = {}
        for record in self.records:
            by_target[record.target] = [
                str(record.target),
                "covered",
                record.family,
                str(record.partition),
                "",
            ]
        for target, message in self.failures:
            by_target[target] = [str(target), "failed", "", "", message]
        for target in sorted(by_target):
            rows.append(by_target[target])
        return rows


def _run_cover(
    n: int,
    segment: tuple[int, int],
    targets: Iterable[int],
    witness_fn: Callable[[int], WitnessRecord],
) -> CoverageReport:
    records: list[WitnessRecord] = []
    failures: list[tuple[int, str]] = []
    histogram: Counter[str] = Counter()
    max_first_part = 0
    for target in targets:
        try:
            record = witness_fn(target)
        except TnSpecError as exc:
            failures.append((target, str(exc)))
            continue
        records.append(record)
        histogram[record.family] += 1
        max_first_part = max(max_first_part, record.partition.first_part)
    return CoverageReport(
        n,
        segment,
        len(records),
        tuple(failures),
        dict(sorted(histogram.items())),
        max_first_part,
        tuple(records),
    )


def segment_cells(n: int) -> dict[str, tuple[int, ...]]:
    """How [0, n] splits across the family groups at this n.

    Returned cells are the *dispatch* cells: where the S2 range and the
    top-seven set overlap (even n at the value n-6), the target goes to
    S2.  For n >= 31 the four cells tile [0, n] exactly.
    """
    if n % 2:
        s1_top = (n - 1) // 2
        s2 = ((n + 7) // 2, n - 7)
        a2_low = n - 6
    else:
        s1_top = (n - 4) // 2
        s2 = ((n + 4) // 2, n - 6)
        a2_low = n - 5
    return {
        "S1": (0, s1_top),
        "A1": a1_values(n),
        "S2": s2,
        "A2": (a2_low, n),
    }


def linear_segment_witness(
    n: int,
    k: int,
    *,
    oracle_fallback: bool = False,
    limit: int | None = None,
) -> WitnessRecord:
    """A verified partition of n with eigenvalue k, for any |k| <= n.

    Constructive for n >= 31.  Below that the closed-form families carry
    no guarantee; with oracle_fallback=True the witness is instead looked
    up by exhaustive enumeration (subject to the oracle limit), and
    absence is reported as WitnessNotFoundError.
    """
    if n < LINEAR_MIN_N:
        if not oracle_fallback:
            raise BelowConstructiveRangeError(
                f"linear segment coverage is constructive for n >= {LINEAR_MIN_N}; "
                f"enable the oracle fallback to search n = {n} exhaustively"
            )
        if abs(k) > n:
            raise TargetOutOfSegmentError(f"|{k}| exceeds n = {n}")
        found = spectrum(n, limit=limit)
        witness = found.witness(k)
        if witness is None:
            raise WitnessNotFoundError(
                f"no partition of {n} has eigenvalue {k} (so the segment "
                f"[-n, n] genuinely has holes below n = {LINEAR_MIN_N})"
            )
        return make_witness(n, k, witness, ("oracle",))
    if abs(k) > n:
        raise TargetOutOfSegmentError(
            f"target {k} is outside the linear segment [-{n}, {n}]"
        )
    if k < 0:
        return linear_segment_witness(n, -k).conjugated()
    cells = segment_cells(n)
    if k <= cells["S1"][1]:
        return s1_witness(n, k)
    if k in cells["A1"]:
        return a1_witness(n, k)
    s2_low, s2_high = cells["S2"]
    if s2_low <= k <= s2_high:
        return s2_witness(n, k)
    if cells["A2"][0] <= k <= n:
        return a2_witness(n, k)
    raise DispatchGapError(f"no family cell claims target {k} at n = {n}")


def linear_segment_cover(n: int) -> CoverageReport:
    """Witness every k in [-n, n]; per-target errors become report entries."""
    if n < LINEAR_MIN_N:
        raise BelowConstructiveRangeError(
            f"linear segment coverage is constructive for n >= {LINEAR_MIN_N}"
        )
    return _run_cover(
        n,
        (-n, n),
        range(-n, n + 1),
        lambda target: linear_segment_witness(n, target),
    )


def quadratic_segment_bounds(n: int) -> SegmentBounds:
    """The quadratic segment endpoints for n >= 48."""
    if n < QUADRATIC_MIN_N:
        raise BelowConstructiveRangeError(
            f"quadratic segment coverage starts at n = {QUADRATIC_MIN_N}"
        )
    low_head = -(-n // 3) + 1
    high_head = (2 * n + 1) // 3
    y1 = choose2(low_head) - 2 * (n - low_head)
    y2 = choose2(high_head)
    return SegmentBounds(n, y1, y2)


def head_range(n: int) -> tuple[int, int]:
    """Admissible leading parts for the quadratic construction."""
    return -(-n // 3) + 1, (2 * n + 1) // 3


def head_interval(n: int, first: int) -> tuple[int, int]:
    """Targets reachable with leading part `first` and a residual in
    [-(n - first), n - first]: the interval [C(first,2) - 2(n - first),
    C(first,2)]."""
    return choose2(first) - 2 * (n - first), choose2(first)


def _oracle_tail(
    n: int, residual_n: int, first: int, residual_target: int, limit: int | None
) -> Partition | None:
    """Residual witness by enumeration, honoring the first-part cap."""
    constraints = (
        EnumerationConstraints(max_first_part=first) if first < residual_n else None
    )
    found = spectrum(residual_n, constraints, limit=limit)
    return found.witness(residual_target)


def _assemble(n: int, k: int, first: int, tail: Partition, tail_chain: tuple[str, ...]) -> WitnessRecord:
    if tail.first_part > first:
        raise HeadTooSmallError(
            f"residual witness {tail} starts above the leading part {first}"
        )
    # consistency: head-decomposition arithmetic must reproduce the target
    if eigenvalue_via_head(first, tail, n) != k:
        raise WitnessNotFoundError(
            f"head decomposition arithmetic failed for n = {n}, k = {k}"
        )
    partition = Partition((first,) + tail.parts)
    return make_witness(n, k, partition, (f"head={first}",) + tail_chain)


def quadratic_segment_witness(
    n: int, k: int, *, limit: int | None = None
) -> WitnessRecord:
    """A verified partition of n with eigenvalue k, y1 <= |k| <= y2.

    Primary path: the smallest admissible leading part n1 whose interval
    brackets k, so the residual target lies in [-(n-n1), n-n1]; the
    residual witness comes from the linear driver when n-n1 >= 31, and
    from exhaustive enumeration of first-part-capped partitions otherwise
    (the top few leading parts always land below 31, so enumeration is
    part of the normal path, not an escape hatch).

    A residual below size 31 may genuinely lack the bracketed target
    (small spectra have holes — T_18 misses +-4 and +-16).  The head
    intervals overlap, so such targets are rescued by scanning the other
    admissible leading parts, cheapest residual first, for one whose
    (out-of-bracket) residual target the oracle can witness.
    """
    bounds = quadratic_segment_bounds(n)
    if not bounds.y1 <= abs(k) <= bounds.y2:
        raise TargetOutOfSegmentError(
            f"target {k} is outside the quadratic segment "
            f"[{bounds.y1}, {bounds.y2}] (and its mirror) at n = {n}"
        )
    if k < 0:
        return quadratic_segment_witness(n, -k, limit=limit).conjugated()
    low_head, high_head = head_range(n)
    first = None
    for candidate in range(low_head, high_head + 1):
        interval_low, interval_high = head_interval(n, candidate)
        if interval_low <= k <= interval_high:
            first = candidate
            break
    if first is None:
        raise NoHeadFitsError(
            f"no leading part in [{low_head}, {high_head}] brackets target {k} "
            f"at n = {n} (head intervals should tile [y1, y2])"
        )
    residual_n = n - first
    residual_target = k - choose2(first) + residual_n
    if residual_n >= LINEAR_MIN_N:
        tail_record = linear_segment_witness(residual_n, residual_target)
        return _assemble(n, k, first, tail_record.partition, tail_record.family_chain)
    tail = _oracle_tail(n, residual_n, first, residual_target, limit)
    if tail is not None:
        return _assemble(n, k, first, tail, ("oracle",))
    # Rescue: other leading parts reach k with a residual target outside
    # [-(n-n1), n-n1] but well inside the residual spectrum's actual range.
    enumerable = resolve_oracle_limit(limit)
    for candidate in range(high_head, low_head - 1, -1):
        if candidate == first:
            continue
        other_n = n - candidate
        other_target = k - choose2(candidate) + other_n
        if other_n > enumerable or abs(other_target) > choose2(other_n):
            continue
        tail = _oracle_tail(n, other_n, candidate, other_target, limit)
        if tail is not None:
            return _assemble(n, k, candidate, tail, ("oracle",))
    raise WitnessNotFoundError(
        f"no admissible leading part yields a residual witness for "
        f"n = {n}, k = {k} (bracketing part {first} lacked eigenvalue "
        f"{residual_target} in its residual spectrum)"
    )


def quadratic_segment_cover(n: int, *, limit: int | None = None) -> CoverageReport:
    """Witness every k in [y1, y2] (the mirror follows by conjugation)."""
    bounds = quadratic_segment_bounds(n)
    return _run_cover(
        n,
        (bounds.y1, bounds.y2),
        range(bounds.y1, bounds.y2 + 1),
        lambda target: quadratic_segment_witness(n, target, limit=limit),
    )


def conjecture_scan(n: int, *, limit: int | None = None) -> CoverageReport:
    """Report-only oracle scan of the unproven gap above the linear segment.

    For n >= 48 the gap is [n+1, y1-1]; below 48 there is no quadratic
    segment yet and the scan covers [n+1, 2n] instead.  Values absent from
    the spectrum are listed as failures with an "absent" message — that is
    a finding about T_n, not an error in the scan.
    """
    if n < 1:
        raise ValueError("scan needs n >= 1")
    if n >= QUADRATIC_MIN_N:
        gap_top = quadratic_segment_bounds(n).y1 - 1
    else:
        gap_top = 2 * n
    found = spectrum(n, limit=limit)

    def lookup(target: int) -> WitnessRecord:
        witness = found.witness(target)
        if witness is None:
            raise WitnessNotFoundError(f"{target} is absent from the T_{n} spectrum")
        return make_witness(n, target, witness, ("oracle",))

    return _run_cover(n, (n + 1, gap_top), range(n + 1, gap_top + 1), lookup)
