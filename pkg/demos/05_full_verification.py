"""
Running the whole verification battery
======================================

Everything the library claims is finite and checkable, so it all lives in
one harness: family sweeps, first-part bounds, oracle cross-checks, and
both segment covers.  This is the same machinery behind `tnspec verify`.
"""

from tnspec import (
    DEFAULT_CHECKS,
    format_table,
    run_checks,
    summary_dict,
    verify_family,
    FamilyId,
)

# Single check, full detail: one report per check with case counts and
# capped failure samples (empty here).
report = verify_family(FamilyId.A2_ROW_N_ODD, n_range=(19, 79))
print(f"{report.check_id}: {report.cases_run} cases, "
      f"{report.cases_failed} failed, ok={report.ok}")

# The registry of everything runnable.
print(f"{len(DEFAULT_CHECKS)} registered checks, e.g.:",
      ", ".join(list(DEFAULT_CHECKS)[:3]), "...")

# A trimmed battery: all 34 families plus the structural checks, with the
# segment sweeps clamped to keep this demo quick.
ids = [check for check in DEFAULT_CHECKS if check.startswith("family:")]
ids += ["first_part_bounds", "linear_segment", "quadratic_segment"]
reports = run_checks(ids, n_min=1, n_max=52)
print(format_table(reports))

summary = summary_dict(reports)
print(f"total: {summary['total_cases']} cases, "
      f"{summary['total_failed']} failed, ok={summary['ok']}")

# Reports serialize canonically (sorted keys, timing stripped), so two
# runs of the same check produce byte-identical JSON — handy for diffing
# verification logs across machines.
first = verify_family(FamilyId.S2_CASE1, n_range=(11, 41)).canonical_json()
second = verify_family(FamilyId.S2_CASE1, n_range=(11, 41)).canonical_json()
print("canonical JSON stable:", first == second)
