"""Exact integer spectra of transposition graphs via partition combinatorics.

T_n is the Cayley graph of Sym(n) generated by all transpositions.  This
package computes its eigenvalues exactly from integer partitions, builds
explicit witness partitions for whole segments of eigenvalues, and
re-verifies everything against brute-force enumeration.
"""

from .errors import (
    BelowConstructiveRangeError,
    DispatchGapError,
    FamilyError,
    FormulaOverflowError,
    HeadTooSmallError,
    IntegerRoundingError,
    NoHeadFitsError,
    NonPositivePartError,
    NotInSetError,
    NotNonincreasingError,
    OracleLimitError,
    OutOfFamilyRangeError,
    ParityViolationError,
    PartitionError,
    SegmentError,
    SizeLimitError,
    SumMismatchError,
    TargetOutOfSegmentError,
    TnSpecError,
    WitnessNotFoundError,
    WitnessVerificationError,
)
from .families import (
    FAMILY_REGISTRY,
    FamilyId,
    FamilySpec,
    WitnessRecord,
    a1_values,
    a1_witness,
    a2_values,
    a2_witness,
    build_family,
    family_targets,
    s1_witness,
    s2_witness,
    zero_witness,
)
from .oracle import (
    DEFAULT_ORACLE_LIMIT,
    EnumerationConstraints,
    SpectrumSet,
    cayley_adjacency,
    cayley_spectrum,
    contains,
    enumerate_partitions,
    partition_count,
    spectrum,
)
from .partitions import (
    EMPTY_PARTITION,
    MAX_FORMULA_N,
    CompactPartition,
    Partition,
    choose2,
    compact_eigenvalue,
    compact_eigenvalue_ones,
    conjugate,
    eigenvalue,
    eigenvalue_via_head,
    expand,
    make_partition,
)
from .segments import (
    LINEAR_MIN_N,
    QUADRATIC_MIN_N,
    CoverageReport,
    SegmentBounds,
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
from .verify import (
    DEFAULT_CHECKS,
    FailureSample,
    VerificationReport,
    cross_check_oracle,
    format_table,
    run_checks,
    summary_dict,
    verify_family,
    verify_first_part_bounds,
    verify_linear_segment,
    verify_quadratic_segment,
)

__version__ = "0.1.0"
