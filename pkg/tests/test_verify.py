"""Verification harness: reports, sampling caps, check registry."""

import json

import pytest

from tnspec.verify import (
    DEFAULT_CHECKS,
    MAX_FAILURE_SAMPLES,
    FamilyId,
    VerificationReport,
    _collect,
    cross_check_oracle,
    format_table,
    run_checks,
    summary_dict,
    verify_family,
    verify_first_part_bounds,
    verify_linear_segment,
    verify_quadratic_segment,
)


class TestVerifyFamily:
    def test_a2_top_row_odd(self):
        report = verify_family(FamilyId.A2_ROW_N_ODD, n_range=(19, 79))
        assert report.check_id == "family:A2_row_n_odd"
        assert report.cases_run == 31  # one odd n out of every two
        assert report.cases_failed == 0
        assert report.ok

    def test_single_n(self):
        report = verify_family(FamilyId.S1_LOW_ODD, n_range=(7, 7))
        assert report.cases_run == 1
        assert report.ok

    def test_empty_range_is_vacuous(self):
        report = verify_family(FamilyId.S2_CASE1, n_range=(5, 6))
        assert report.cases_run == 0
        assert report.ok

    def test_all_families_to_60(self):
        for family in FamilyId:
            report = verify_family(family, n_range=(1, 60))
            assert report.ok, report.check_id


class TestCollect:
    def test_failure_samples_are_capped(self):
        outcomes = [
            (f"case{i}", False, "want", f"got{i}") for i in range(40)
        ]
        report = _collect("synthetic", (1, 1), outcomes)
        assert report.cases_run == 40
        assert report.cases_failed == 40
        assert len(report.failure_samples) == MAX_FAILURE_SAMPLES
        assert report.failure_samples[0].inputs == "case0"
        assert not report.ok

    def test_mixed_outcomes(self):
        outcomes = [("a", True, "", ""), ("b", False, "1", "2")]
        report = _collect("synthetic", (1, 1), outcomes)
        assert report.cases_run == 2
        assert report.cases_failed == 1
        assert report.failure_samples[0].expected == "1"
        assert report.failure_samples[0].got == "2"


class TestReportSerialization:
    def test_canonical_json_excludes_elapsed(self):
        report = verify_first_part_bounds((31, 33))
        payload = json.loads(report.canonical_json())
        assert "elapsed" not in payload
        assert payload["check_id"] == "first_part_bounds"

    def test_canonical_json_is_deterministic(self):
        first = verify_first_part_bounds((31, 35)).canonical_json()
        second = verify_first_part_bounds((31, 35)).canonical_json()
        assert first == second

    def test_json_dict_includes_elapsed_by_default(self):
        report = verify_first_part_bounds((31, 32))
        assert "elapsed" in report.to_json_dict()
        assert "elapsed" not in report.to_json_dict(include_elapsed=False)


class TestSegmentChecks:
    def test_linear(self):
        report = verify_linear_segment((31, 40))
        assert report.cases_failed == 0
        # 2n+1 targets plus one max-first-part case per n
        assert report.cases_run == sum(2 * n + 2 for n in range(31, 41))

    def test_quadratic(self):
        report = verify_quadratic_segment((48, 50))
        assert report.cases_failed == 0
        assert report.cases_run > 0

    def test_oracle_cross_check(self):
        report = cross_check_oracle((2, 12))
        assert report.cases_failed == 0


class TestRunChecks:
    def test_unknown_id(self):
        with pytest.raises(ValueError):
            run_checks(["no_such_check"])

    def test_registry_covers_every_family(self):
        family_ids = {f"family:{f.value}" for f in FamilyId}
        assert family_ids <= set(DEFAULT_CHECKS)

    def test_range_clamping(self):
        # asking for n far below a check's floor clamps to the floor
        # rather than silently verifying nothing
        (report,) = run_checks(["linear_segment"], n_min=2, n_max=33)
        assert report.n_range == (31, 33)
        assert report.cases_run > 0

    def test_summary_and_table(self):
        reports = run_checks(
            ["family:Zero", "first_part_bounds"], n_min=31, n_max=35
        )
        summary = summary_dict(reports)
        assert summary["ok"] is True
        assert summary["total_failed"] == 0
        assert summary["total_cases"] == sum(r.cases_run for r in reports)
        table = format_table(reports)
        assert "family:Zero" in table
        assert "first_part_bounds" in table
