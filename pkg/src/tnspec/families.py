"""Closed-form witness families for small nonnegative eigenvalues of T_n.

Each family is a parametrized partition shape whose eigenvalue is known in
closed form.  Together (and with conjugation for negative targets) they
cover every integer target k in [0, n]:

* Zero        — a self-conjugate shape with eigenvalue exactly 0;
* S1 families — targets in [1, ~n/2]; split into "low" and "mid" ranges
  with one special shape at the crossover value, per residue of n mod 4;
* S2 families — targets from ~n/2 up to n-6ish; four cases by the
  parities of n and of the target;
* A1 rows     — the three targets straddling n/2 that S1 and S2 miss;
* A2 rows     — the top seven targets n-6 .. n.

Every constructor re-checks its output against the eigenvalue formula
before returning, so a range-bookkeeping bug surfaces as an error rather
than a wrong witness.  For the S2/A1/A2 rows the head eigenvalue and the
tail deduction are also known as quadratic polynomials in (n, target);
the verifier checks those too (see verify.verify_family).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from .errors import (
    DispatchGapError,
    NotInSetError,
    OutOfFamilyRangeError,
    ParityViolationError,
    WitnessVerificationError,
)
from .partitions import (
    CompactPartition,
    Partition,
    compact_eigenvalue,
    conjugate,
    eigenvalue,
    expand,
)


class FamilyId(str, enum.Enum):
    """Tags naming the family (and case/row) a witness came from."""

    ZERO = "Zero"
    S1_LOW_ODD = "S1_low_odd"
    S1_ONE_EVEN = "S1_one_even"
    S1_LOW_EVEN = "S1_low_even"
    S1_MID_ODD = "S1_mid_odd"
    S1_MID_EVEN = "S1_mid_even"
    S1_SPECIAL_MOD0 = "S1_special_mod0"
    S1_SPECIAL_MOD1 = "S1_special_mod1"
    S1_SPECIAL_MOD2 = "S1_special_mod2"
    S1_SPECIAL_MOD3 = "S1_special_mod3"
    S2_CASE1 = "S2_case1"
    S2_CASE2 = "S2_case2"
    S2_CASE3 = "S2_case3"
    S2_CASE4 = "S2_case4"
    A1_ROW1_ODD = "A1_row1_odd"
    A1_ROW2_ODD = "A1_row2_odd"
    A1_ROW3_ODD = "A1_row3_odd"
    A1_ROW1_EVEN = "A1_row1_even"
    A1_ROW2_EVEN = "A1_row2_even"
    A1_ROW3_EVEN = "A1_row3_even"
    A2_ROW_N_ODD = "A2_row_n_odd"
    A2_ROW_N1_ODD = "A2_row_n-1_odd"
    A2_ROW_N2_ODD = "A2_row_n-2_odd"
    A2_ROW_N3_ODD = "A2_row_n-3_odd"
    A2_ROW_N4_ODD = "A2_row_n-4_odd"
    A2_ROW_N5_ODD = "A2_row_n-5_odd"
    A2_ROW_N6_ODD = "A2_row_n-6_odd"
    A2_ROW_N_EVEN = "A2_row_n_even"
    A2_ROW_N1_EVEN = "A2_row_n-1_even"
    A2_ROW_N2_EVEN = "A2_row_n-2_even"
    A2_ROW_N3_EVEN = "A2_row_n-3_even"
    A2_ROW_N4_EVEN = "A2_row_n-4_even"
    A2_ROW_N5_EVEN = "A2_row_n-5_even"
    A2_ROW_N6_EVEN = "A2_row_n-6_even"


@dataclass(frozen=True)
class WitnessRecord:
    """A verified witness: partition of n with eigenvalue == target.

    family_chain records how it was produced, outermost step last, e.g.
    ("S1_mid_odd",) or ("S1_mid_odd", "conjugate") or ("head=17",
    "S1_mid_odd").  ``verified`` is always True for records built through
    make_witness; it is carried explicitly so serialized records are
    self-describing.
    """

    n: int
    target: int
    partition: Partition
    family_chain: tuple[str, ...]
    verified: bool

    @property
    def family(self) -> str:
        return "+".join(self.family_chain)

    def conjugated(self) -> "WitnessRecord":
        """The record for -target via the transposed Young diagram."""
        return make_witness(
            self.n,
            -self.target,
            conjugate(self.partition),
            self.family_chain + ("conjugate",),
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "target": self.target,
            "family": self.family,
            "family_chain": list(self.family_chain),
            "partition": list(self.partition.parts),
            "verified": self.verified,
        }


def make_witness(
    n: int, target: int, partition: Partition, family_chain: tuple[str, ...]
) -> WitnessRecord:
    """Re-check and wrap a constructed witness; raises on any mismatch."""
    if partition.n != n:
        raise WitnessVerificationError(
            f"{family_chain}: partition {partition} sums to {partition.n}, not {n}"
        )
    actual = eigenvalue(partition)
    if actual != target:
        raise WitnessVerificationError(
            f"{family_chain}: partition {partition} has eigenvalue {actual}, "
            f"not the target {target}"
        )
    return WitnessRecord(n, target, partition, family_chain, True)


# --- family shapes ---------------------------------------------------------
#
# Builders assume (n, lam) already admissible (build_family checks); they
# use floor division only where the admissibility conditions make the
# division exact.


def _zero(n: int, lam: int) -> CompactPartition:
    if n % 2:
        if n == 1:
            return CompactPartition((), 0, 1)
        return CompactPartition(((n + 1) // 2,), 0, (n - 1) // 2)
    return CompactPartition((n // 2,), 1, (n - 4) // 2)


def _s1_low_odd(n: int, lam: int) -> CompactPartition:
    return CompactPartition(
        ((n - 2 * lam + 1) // 2, lam + 2), lam - 1, (n - 4 * lam - 1) // 2
    )


def _s1_one_even(n: int, lam: int) -> CompactPartition:
    return CompactPartition(((n - 6) // 2, 4, 4), 1, (n - 14) // 2)


def _s1_low_even(n: int, lam: int) -> CompactPartition:
    return CompactPartition(
        ((n - 2 * lam) // 2, lam + 2, 3), lam - 2, (n - 4 * lam - 2) // 2
    )


def _s1_mid_odd(n: int, lam: int) -> CompactPartition:
    return CompactPartition(
        (lam + 1, (n + 3 - 2 * lam) // 2), (n - 1) // 2 - lam, (4 * lam - n - 3) // 2
    )


def _s1_mid_even(n: int, lam: int) -> CompactPartition:
    return CompactPartition(
        (lam + 1, (n + 2 - 2 * lam) // 2, 3),
        (n - 4) // 2 - lam,
        (4 * lam - n - 2) // 2,
    )


def _s1_special_mod0(n: int, lam: int) -> CompactPartition:
    return CompactPartition((n // 4, n // 4, 5, 4), (n - 20) // 4, 1)


def _s1_special_mod1(n: int, lam: int) -> CompactPartition:
    return CompactPartition(((n + 3) // 4, (n + 3) // 4, 4), (n - 13) // 4, 1)


def _s1_special_mod2(n: int, lam: int) -> CompactPartition:
    return CompactPartition(((n + 2) // 4, (n - 2) // 4, 5, 4), (n - 22) // 4, 2)


def _s1_special_mod3(n: int, lam: int) -> CompactPartition:
    return CompactPartition(((n + 1) // 4, (n + 1) // 4, 5, 3), (n - 19) // 4, 1)


def _s2_case1(n: int, lam: int) -> CompactPartition:
    return CompactPartition(
        ((lam + 3) // 2, (n + 2 - lam) // 2, 3),
        (n - 4 - lam) // 2,
        lam - (n + 3) // 2,
    )


def _s2_case2(n: int, lam: int) -> CompactPartition:
    return CompactPartition(
        (lam // 2, (n + 3 - lam) // 2, 5), (n - 3 - lam) // 2, lam - (n + 7) // 2
    )


def _s2_case3(n: int, lam: int) -> CompactPartition:
    return CompactPartition(
        ((lam + 3) // 2, (n + 3 - lam) // 2), (n - 1 - lam) // 2, lam - (n + 4) // 2
    )


def _s2_case4(n: int, lam: int) -> CompactPartition:
    return CompactPartition(
        (lam // 2 + 1, (n + 2 - lam) // 2, 4), (n - 4 - lam) // 2, lam - (n + 4) // 2
    )


# --- admissible target sets ------------------------------------------------


def _parity_range(lo: int, hi: int, parity: int) -> tuple[int, ...]:
    """Integers of the given parity in [lo, hi]."""
    start = lo if lo % 2 == parity else lo + 1
    return tuple(range(start, hi + 1, 2))


def _targets_zero(n: int) -> tuple[int, ...]:
    if n % 2 == 1 or n >= 4:
        return (0,)
    return ()


def _targets_s1_low_odd(n: int) -> tuple[int, ...]:
    return tuple(range(1, (n - 3) // 4 + 1))


def _targets_s1_low_even(n: int) -> tuple[int, ...]:
    return tuple(range(2, (n - 4) // 4 + 1))


def _targets_s1_mid_odd(n: int) -> tuple[int, ...]:
    return tuple(range(-(-(n + 3) // 4), (n - 1) // 2 + 1))


def _targets_s1_mid_even(n: int) -> tuple[int, ...]:
    return tuple(range(-(-(n + 2) // 4), (n - 4) // 2 + 1))


def _special_target(residue: int) -> Callable[[int], tuple[int, ...]]:
    """The single crossover target, admissible only when n % 4 == residue."""

    def targets(n: int) -> tuple[int, ...]:
        if n % 4 != residue:
            return ()
        return ((n - 3) // 4 + 1,)

    return targets


def _eighth(value: int) -> int:
    quotient, rem = divmod(value, 8)
    if rem:
        raise ParityViolationError(f"polynomial value {value} is not divisible by 8")
    return quotient


def _s2_forms(
    head_n: int, head_nl: int, head_c: int, head_l: int
) -> Callable[[int, int], tuple[int, int]]:
    """Closed forms for an S2 case, as eighths of quadratics in (n, lam).

    head = (n^2 + head_nl*n*lam + head_n*n + 2*lam^2 + head_l*lam + head_c)/8
    and f = head - lam (so both are pinned by one coefficient set).
    """

    def forms(n: int, lam: int) -> tuple[int, int]:
        head = _eighth(
            n * n + head_nl * n * lam + head_n * n + 2 * lam * lam + head_l * lam + head_c
        )
        return head, head - lam

    return forms


def _row_forms(
    head_b: int, head_c: int, f_b: int, f_c: int
) -> Callable[[int, int], tuple[int, int]]:
    """Closed forms for an A1/A2 row: eighths of quadratics in n alone."""

    def forms(n: int, lam: int) -> tuple[int, int]:
        head = _eighth(n * n + head_b * n + head_c)
        deduction = _eighth(n * n + f_b * n + f_c)
        return head, deduction

    return forms


@dataclass(frozen=True)
class FamilySpec:
    """Registry entry: admissibility data plus the shape builder."""

    family: FamilyId
    group: str  # "S1", "S2", "A1", "A2" (Zero counts as S1 for bounds)
    n_parity: int | None  # 0 even, 1 odd, None either
    n_min: int
    targets: Callable[[int], tuple[int, ...]]
    build: Callable[[int, int], CompactPartition]
    closed_forms: Callable[[int, int], tuple[int, int]] | None = None


def _head_row(
    parts_fn: Callable[[int], tuple[int, ...]], ones_fn: Callable[[int], int]
) -> Callable[[int, int], CompactPartition]:
    def build(n: int, lam: int) -> CompactPartition:
        return CompactPartition(parts_fn(n), 0, ones_fn(n))

    return build


def _const_target(target_fn: Callable[[int], int]) -> Callable[[int], tuple[int, ...]]:
    def targets(n: int) -> tuple[int, ...]:
        return (target_fn(n),)

    return targets


_REGISTRY_ROWS: tuple[FamilySpec, ...] = (
    FamilySpec(FamilyId.ZERO, "S1", None, 1, _targets_zero, _zero),
    FamilySpec(FamilyId.S1_LOW_ODD, "S1", 1, 7, _targets_s1_low_odd, _s1_low_odd),
    FamilySpec(
        FamilyId.S1_ONE_EVEN, "S1", 0, 14, lambda n: (1,), _s1_one_even
    ),
    FamilySpec(FamilyId.S1_LOW_EVEN, "S1", 0, 12, _targets_s1_low_even, _s1_low_even),
    FamilySpec(FamilyId.S1_MID_ODD, "S1", 1, 5, _targets_s1_mid_odd, _s1_mid_odd),
    FamilySpec(FamilyId.S1_MID_EVEN, "S1", 0, 10, _targets_s1_mid_even, _s1_mid_even),
    FamilySpec(
        FamilyId.S1_SPECIAL_MOD0, "S1", 0, 20, _special_target(0), _s1_special_mod0
    ),
    FamilySpec(
        FamilyId.S1_SPECIAL_MOD1, "S1", 1, 13, _special_target(1), _s1_special_mod1
    ),
    FamilySpec(
        FamilyId.S1_SPECIAL_MOD2, "S1", 0, 22, _special_target(2), _s1_special_mod2
    ),
    FamilySpec(
        FamilyId.S1_SPECIAL_MOD3, "S1", 1, 19, _special_target(3), _s1_special_mod3
    ),
    FamilySpec(
        FamilyId.S2_CASE1,
        "S2",
        1,
        11,
        lambda n: _parity_range((n + 3) // 2, n - 4, 1),
        _s2_case1,
        _s2_forms(-2, -2, -29, 6),
    ),
    FamilySpec(
        FamilyId.S2_CASE2,
        "S2",
        1,
        21,
        lambda n: _parity_range((n + 7) // 2, n - 7, 0),
        _s2_case2,
        _s2_forms(0, -2, -9, -2),
    ),
    FamilySpec(
        FamilyId.S2_CASE3,
        "S2",
        0,
        6,
        lambda n: _parity_range((n + 4) // 2, n - 1, 1),
        _s2_case3,
        _s2_forms(0, -2, -6, 4),
    ),
    FamilySpec(
        FamilyId.S2_CASE4,
        "S2",
        0,
        16,
        lambda n: _parity_range((n + 4) // 2, n - 6, 0),
        _s2_case4,
        _s2_forms(-2, -2, -24, 4),
    ),
    FamilySpec(
        FamilyId.A1_ROW1_ODD,
        "A1",
        1,
        25,
        _const_target(lambda n: (n + 1) // 2),
        _head_row(lambda n: ((n - 11) // 2, 7, 4, 3, 3), lambda n: (n - 23) // 2),
        _row_forms(-24, 119, -28, 115),
    ),
    FamilySpec(
        FamilyId.A1_ROW2_ODD,
        "A1",
        1,
        9,
        _const_target(lambda n: (n + 3) // 2),
        _head_row(lambda n: ((n - 1) // 2, 4), lambda n: (n - 7) // 2),
        _row_forms(-4, 19, -8, 7),
    ),
    FamilySpec(
        FamilyId.A1_ROW3_ODD,
        "A1",
        1,
        13,
        _const_target(lambda n: (n + 5) // 2),
        _head_row(lambda n: ((n - 3) // 2, 5, 2), lambda n: (n - 11) // 2),
        _row_forms(-8, 31, -12, 11),
    ),
    FamilySpec(
        FamilyId.A1_ROW1_EVEN,
        "A1",
        0,
        32,
        _const_target(lambda n: (n - 2) // 2),
        _head_row(lambda n: ((n - 16) // 2, 8, 5, 4, 3, 3), lambda n: (n - 30) // 2),
        _row_forms(-34, 232, -38, 240),
    ),
    FamilySpec(
        FamilyId.A1_ROW2_EVEN,
        "A1",
        0,
        2,
        _const_target(lambda n: n // 2),
        _head_row(lambda n: ((n + 2) // 2,), lambda n: (n - 2) // 2),
        _row_forms(2, 0, -2, 0),
    ),
    FamilySpec(
        FamilyId.A1_ROW3_EVEN,
        "A1",
        0,
        28,
        _const_target(lambda n: (n + 2) // 2),
        _head_row(lambda n: ((n - 12) // 2, 8, 3, 3, 3, 2), lambda n: (n - 26) // 2),
        _row_forms(-26, 112, -30, 104),
    ),
    FamilySpec(
        FamilyId.A2_ROW_N_ODD,
        "A2",
        1,
        3,
        _const_target(lambda n: n),
        _head_row(lambda n: ((n + 3) // 2,), lambda n: (n - 3) // 2),
        _row_forms(4, 3, -4, 3),
    ),
    FamilySpec(
        FamilyId.A2_ROW_N1_ODD,
        "A2",
        1,
        7,
        _const_target(lambda n: n - 1),
        _head_row(lambda n: ((n + 1) // 2, 3), lambda n: (n - 7) // 2),
        _row_forms(0, -1, -8, 7),
    ),
    FamilySpec(
        FamilyId.A2_ROW_N2_ODD,
        "A2",
        1,
        11,
        _const_target(lambda n: n - 2),
        _head_row(lambda n: ((n - 1) // 2, 4, 2), lambda n: (n - 11) // 2),
        _row_forms(-4, -5, -12, 11),
    ),
    FamilySpec(
        FamilyId.A2_ROW_N3_ODD,
        "A2",
        1,
        9,
        _const_target(lambda n: n - 3),
        _head_row(lambda n: ((n + 1) // 2, 2, 2), lambda n: (n - 9) // 2),
        _row_forms(0, -33, -8, -9),
    ),
    FamilySpec(
        FamilyId.A2_ROW_N4_ODD,
        "A2",
        1,
        11,
        _const_target(lambda n: n - 4),
        _head_row(lambda n: ((n - 1) // 2, 3, 3), lambda n: (n - 11) // 2),
        _row_forms(-4, -21, -12, 11),
    ),
    FamilySpec(
        FamilyId.A2_ROW_N5_ODD,
        "A2",
        1,
        19,
        _const_target(lambda n: n - 5),
        _head_row(lambda n: ((n - 7) // 2, 5, 5, 3), lambda n: (n - 19) // 2),
        _row_forms(-16, 55, -24, 95),
    ),
    FamilySpec(
        FamilyId.A2_ROW_N6_ODD,
        "A2",
        1,
        13,
        _const_target(lambda n: n - 6),
        _head_row(lambda n: ((n - 1) // 2, 3, 2, 2), lambda n: (n - 13) // 2),
        _row_forms(-4, -61, -12, -13),
    ),
    FamilySpec(
        FamilyId.A2_ROW_N_EVEN,
        "A2",
        0,
        8,
        _const_target(lambda n: n),
        _head_row(lambda n: (n // 2, 4), lambda n: (n - 8) // 2),
        _row_forms(-2, 16, -10, 16),
    ),
    FamilySpec(
        FamilyId.A2_ROW_N1_EVEN,
        "A2",
        0,
        6,
        _const_target(lambda n: n - 1),
        _head_row(lambda n: ((n + 2) // 2, 2), lambda n: (n - 6) // 2),
        _row_forms(2, -8, -6, 0),
    ),
    FamilySpec(
        FamilyId.A2_ROW_N2_EVEN,
        "A2",
        0,
        20,
        _const_target(lambda n: n - 2),
        _head_row(lambda n: ((n - 8) // 2, 6, 5, 3), lambda n: (n - 20) // 2),
        _row_forms(-18, 104, -26, 120),
    ),
    FamilySpec(
        FamilyId.A2_ROW_N3_EVEN,
        "A2",
        0,
        10,
        _const_target(lambda n: n - 3),
        _head_row(lambda n: (n // 2, 3, 2), lambda n: (n - 10) // 2),
        _row_forms(-2, -24, -10, 0),
    ),
    FamilySpec(
        FamilyId.A2_ROW_N4_EVEN,
        "A2",
        0,
        16,
        _const_target(lambda n: n - 4),
        _head_row(lambda n: ((n - 4) // 2, 5, 3, 2), lambda n: (n - 16) // 2),
        _row_forms(-10, 0, -18, 32),
    ),
    FamilySpec(
        FamilyId.A2_ROW_N5_EVEN,
        "A2",
        0,
        14,
        _const_target(lambda n: n - 5),
        _head_row(lambda n: ((n - 2) // 2, 4, 2, 2), lambda n: (n - 14) // 2),
        _row_forms(-6, -40, -14, 0),
    ),
    FamilySpec(
        FamilyId.A2_ROW_N6_EVEN,
        "A2",
        0,
        12,
        _const_target(lambda n: n - 6),
        _head_row(lambda n: (n // 2, 2, 2, 2), lambda n: (n - 12) // 2),
        _row_forms(-2, -72, -10, -24),
    ),
)

FAMILY_REGISTRY: dict[FamilyId, FamilySpec] = {
    row.family: row for row in _REGISTRY_ROWS
}


def family_targets(family: FamilyId, n: int) -> tuple[int, ...]:
    """Eigenvalue targets the family covers at this n (may be empty)."""
    spec = FAMILY_REGISTRY[family]
    if n < spec.n_min:
        return ()
    if spec.n_parity is not None and n % 2 != spec.n_parity:
        return ()
    return spec.targets(n)


def build_family(family: FamilyId, n: int, lam: int) -> CompactPartition:
    """Build the family's shape after checking (n, lam) admissibility."""
    admissible = family_targets(family, n)
    if lam not in admissible:
        raise OutOfFamilyRangeError(
            f"{family.value} does not cover target {lam} at n = {n}"
        )
    return build_family_unchecked(family, n, lam)


def build_family_unchecked(family: FamilyId, n: int, lam: int) -> CompactPartition:
    """Build without the admissibility check (for probing beyond ranges)."""
    return FAMILY_REGISTRY[family].build(n, lam)


def _family_record(family: FamilyId, n: int, lam: int) -> WitnessRecord:
    compact = build_family(family, n, lam)
    record = make_witness(n, lam, expand(compact), (family.value,))
    # consistency between the run-length evaluation and the flat formula
    if compact_eigenvalue(compact) != lam:
        raise WitnessVerificationError(
            f"{family.value}: compact evaluation disagrees at n={n}, target={lam}"
        )
    return record


def zero_witness(n: int) -> Partition:
    """A self-conjugate partition of n with eigenvalue 0.

    Exists for every n >= 1 except n = 2 (T_2 = K_2 has spectrum {-1, 1}).
    """
    if not family_targets(FamilyId.ZERO, n):
        raise OutOfFamilyRangeError(f"no zero eigenvalue witness at n = {n}")
    return _family_record(FamilyId.ZERO, n, 0).partition


def s1_witness(n: int, lam: int) -> WitnessRecord:
    """Witness for a small target: 0 <= lam <= (n-1)/2 odd, (n-4)/2 even.

    Dispatches low range -> special crossover value -> mid range; the three
    ranges tile exactly for every residue of n mod 4, so a gap here means
    corrupted dispatch tables (DispatchGapError), not missing coverage.
    Requires n >= 19 so that all sub-families are inside their own minima.
    """
    if n < 19:
        raise OutOfFamilyRangeError(f"s1_witness needs n >= 19, got {n}")
    top = (n - 1) // 2 if n % 2 else (n - 4) // 2
    if not 0 <= lam <= top:
        raise OutOfFamilyRangeError(
            f"target {lam} outside the S1 range [0, {top}] at n = {n}"
        )
    if lam == 0:
        return _family_record(FamilyId.ZERO, n, 0)
    crossover = (n - 3) // 4 + 1
    if n % 2:
        if lam <= (n - 3) // 4:
            return _family_record(FamilyId.S1_LOW_ODD, n, lam)
        if lam == crossover:
            family = (
                FamilyId.S1_SPECIAL_MOD1 if n % 4 == 1 else FamilyId.S1_SPECIAL_MOD3
            )
            return _family_record(family, n, lam)
        if lam > crossover:
            return _family_record(FamilyId.S1_MID_ODD, n, lam)
    else:
        if lam == 1:
            return _family_record(FamilyId.S1_ONE_EVEN, n, lam)
        if lam <= (n - 4) // 4:
            return _family_record(FamilyId.S1_LOW_EVEN, n, lam)
        if lam == crossover:
            family = (
                FamilyId.S1_SPECIAL_MOD0 if n % 4 == 0 else FamilyId.S1_SPECIAL_MOD2
            )
            return _family_record(family, n, lam)
        if lam > crossover:
            return _family_record(FamilyId.S1_MID_EVEN, n, lam)
    raise DispatchGapError(f"no S1 family matched n = {n}, target {lam}")


def s2_witness(n: int, lam: int) -> WitnessRecord:
    """Witness for a mid-range target, chosen by (n, lam) parities.

    The four cases jointly cover [(n+3)/2, n-4] for odd n and
    [(n+4)/2, n-1] for even n (each case's own range is checked).
    Requires n >= 20.
    """
    if n < 20:
        raise OutOfFamilyRangeError(f"s2_witness needs n >= 20, got {n}")
    if n % 2:
        family = FamilyId.S2_CASE1 if lam % 2 else FamilyId.S2_CASE2
    else:
        family = FamilyId.S2_CASE3 if lam % 2 else FamilyId.S2_CASE4
    return _family_record(family, n, lam)


def a1_values(n: int) -> tuple[int, int, int]:
    """The three targets around n/2 covered by the A1 rows."""
    if n % 2:
        return ((n + 1) // 2, (n + 3) // 2, (n + 5) // 2)
    return ((n - 2) // 2, n // 2, (n + 2) // 2)


_A1_ROWS_ODD = (FamilyId.A1_ROW1_ODD, FamilyId.A1_ROW2_ODD, FamilyId.A1_ROW3_ODD)
_A1_ROWS_EVEN = (FamilyId.A1_ROW1_EVEN, FamilyId.A1_ROW2_EVEN, FamilyId.A1_ROW3_EVEN)


def a1_witness(n: int, lam: int) -> WitnessRecord:
    """Witness for one of the three a1_values(n) targets."""
    values = a1_values(n)
    if lam not in values:
        raise NotInSetError(f"target {lam} is not among A1 values {values} at n = {n}")
    rows = _A1_ROWS_ODD if n % 2 else _A1_ROWS_EVEN
    return _family_record(rows[values.index(lam)], n, lam)


_A2_ROWS_ODD = (
    FamilyId.A2_ROW_N_ODD,
    FamilyId.A2_ROW_N1_ODD,
    FamilyId.A2_ROW_N2_ODD,
    FamilyId.A2_ROW_N3_ODD,
    FamilyId.A2_ROW_N4_ODD,
    FamilyId.A2_ROW_N5_ODD,
    FamilyId.A2_ROW_N6_ODD,
)
_A2_ROWS_EVEN = (
    FamilyId.A2_ROW_N_EVEN,
    FamilyId.A2_ROW_N1_EVEN,
    FamilyId.A2_ROW_N2_EVEN,
    FamilyId.A2_ROW_N3_EVEN,
    FamilyId.A2_ROW_N4_EVEN,
    FamilyId.A2_ROW_N5_EVEN,
    FamilyId.A2_ROW_N6_EVEN,
)


def a2_values(n: int) -> tuple[int, ...]:
    """The top seven targets n-6 .. n covered by the A2 rows."""
    return tuple(range(n - 6, n + 1))


def a2_witness(n: int, lam: int) -> WitnessRecord:
    """Witness for one of the top seven targets n-6 .. n."""
    offset = n - lam
    if not 0 <= offset <= 6:
        raise NotInSetError(
            f"target {lam} is not among the top seven values of n = {n}"
        )
    rows = _A2_ROWS_ODD if n % 2 else _A2_ROWS_EVEN
    return _family_record(rows[offset], n, lam)


def group_bound_doubled(group: str, n: int) -> int:
    """Twice the proven first-part bound for witnesses of a group.

    Doubling keeps the comparison in integers: first_part <= bound/2 is
    checked as 2*first_part <= this value.  Conjugated witnesses obey the
    same bound on their *length*, which is the conjugate's first part.
    """
    offsets = {"S1": 1, "S2": 2, "A1": 2, "A2": 3}
    return n + offsets[group]
