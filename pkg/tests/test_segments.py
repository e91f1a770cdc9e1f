"""Segment drivers: dispatch tiling, head brackets, covers, conjecture scan."""

import pytest

from tnspec.errors import (
    BelowConstructiveRangeError,
    TargetOutOfSegmentError,
    WitnessNotFoundError,
)
from tnspec.oracle import spectrum
from tnspec.partitions import choose2, conjugate, eigenvalue
from tnspec.segments import (
    LINEAR_MIN_N,
    QUADRATIC_MIN_N,
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


class TestCells:
    def test_known_layouts(self):
        assert segment_cells(31) == {
            "S1": (0, 15),
            "A1": (16, 17, 18),
            "S2": (19, 24),
            "A2": (25, 31),
        }
        assert segment_cells(32) == {
            "S1": (0, 14),
            "A1": (15, 16, 17),
            "S2": (18, 26),
            "A2": (27, 32),
        }

    def test_tiling_is_exact(self):
        # the four cells partition [0, n] with no gap and no overlap
        for n in range(LINEAR_MIN_N, 201):
            cells = segment_cells(n)
            seen = []
            seen.extend(range(cells["S1"][0], cells["S1"][1] + 1))
            seen.extend(cells["A1"])
            seen.extend(range(cells["S2"][0], cells["S2"][1] + 1))
            seen.extend(range(cells["A2"][0], cells["A2"][1] + 1))
            assert sorted(seen) == list(range(0, n + 1)), n
            assert len(set(seen)) == len(seen), n


class TestLinearWitness:
    @pytest.mark.parametrize(
        "n, k, parts, chain",
        [
            (31, 0, (16,) + (1,) * 15, ("Zero",)),
            (31, -15, (15, 2) + (1,) * 14, ("S1_mid_odd", "conjugate")),
            (31, 31, (17,) + (1,) * 14, ("A2_row_n_odd",)),
            (31, -31, (15,) + (1,) * 16, ("A2_row_n_odd", "conjugate")),
            (32, 14, (15, 3, 3) + (1,) * 11, ("S1_mid_even",)),
        ],
    )
    def test_known_witnesses(self, n, k, parts, chain):
        record = linear_segment_witness(n, k)
        assert record.partition.parts == parts
        assert record.family_chain == chain
        assert record.verified

    def test_whole_segment_both_signs(self):
        for n in (31, 32, 45, 46):
            for k in range(-n, n + 1):
                record = linear_segment_witness(n, k)
                assert record.n == n and record.target == k

    def test_negative_targets_are_conjugates(self):
        for k in range(1, 32):
            pos = linear_segment_witness(31, k)
            neg = linear_segment_witness(31, -k)
            assert neg.partition.parts == conjugate(pos.partition).parts

    def test_below_constructive_range(self):
        with pytest.raises(BelowConstructiveRangeError):
            linear_segment_witness(30, 5)

    def test_below_range_with_fallback_uses_oracle(self):
        record = linear_segment_witness(18, 5, oracle_fallback=True)
        assert eigenvalue(record.partition) == 5
        assert record.family_chain == ("oracle",)

    def test_fallback_respects_real_spectral_holes(self):
        # T_18 has no eigenvalue 4, so even the oracle cannot help
        with pytest.raises(WitnessNotFoundError):
            linear_segment_witness(18, 4, oracle_fallback=True)

    def test_out_of_segment(self):
        with pytest.raises(TargetOutOfSegmentError):
            linear_segment_witness(31, 32)
        with pytest.raises(TargetOutOfSegmentError):
            linear_segment_witness(31, -32)


class TestLinearCover:
    def test_cover_runs_clean(self):
        report = linear_segment_cover(31)
        assert report.covered == 63
        assert report.failures == ()
        assert report.max_first_part == 17
        assert report.histogram["Zero"] == 1

    def test_first_part_stays_small(self):
        for n in range(LINEAR_MIN_N, 61):
            report = linear_segment_cover(n)
            assert report.failures == ()
            assert 2 * report.max_first_part <= n + 3

    def test_csv_rows(self):
        rows = linear_segment_cover(31).to_csv_rows()
        assert rows[0] == ["target", "status", "family", "partition", "detail"]
        assert rows[1][0] == "-31"
        assert rows[1][1] == "covered"
        assert len(rows) == 64


class TestQuadraticBounds:
    @pytest.mark.parametrize(
        "n, y1, y2",
        [(48, 74, 496), (49, 91, 528), (51, 87, 561), (50, 89, 528)],
    )
    def test_frozen_bounds(self, n, y1, y2):
        bounds = quadratic_segment_bounds(n)
        assert (bounds.y1, bounds.y2) == (y1, y2)

    def test_y2_is_top_head_triangle(self):
        for n in range(QUADRATIC_MIN_N, 120):
            bounds = quadratic_segment_bounds(n)
            assert bounds.y2 == choose2(head_range(n)[1])
            assert bounds.y2 == choose2((2 * n + 1) // 3)

    def test_below_range(self):
        with pytest.raises(BelowConstructiveRangeError):
            quadratic_segment_bounds(47)


class TestHeadBrackets:
    def test_known_values(self):
        assert head_range(48) == (17, 32)
        assert head_interval(48, 17) == (74, 136)
        assert head_interval(48, 32) == (464, 496)

    def test_intervals_chain_without_gaps(self):
        # consecutive head intervals overlap or abut, so every target in
        # [y1, y2] is bracketed by at least one head
        for n in range(QUADRATIC_MIN_N, 201):
            low_head, high_head = head_range(n)
            previous_top = None
            for n1 in range(low_head, high_head + 1):
                low, high = head_interval(n, n1)
                assert low <= high
                if previous_top is not None:
                    assert low <= previous_top + 1, (n, n1)
                previous_top = high
            bounds = quadratic_segment_bounds(n)
            assert head_interval(n, low_head)[0] <= bounds.y1
            assert head_interval(n, high_head)[1] == bounds.y2


class TestQuadraticWitness:
    @pytest.mark.parametrize(
        "n, k, parts, chain",
        [
            (
                48,
                90,
                (17, 15, 2) + (1,) * 14,
                ("head=17", "S1_mid_odd", "conjugate"),
            ),
            (48, 496, (32, 8, 4, 1, 1, 1, 1), ("head=32", "oracle")),
            (48, 74, (17, 15) + (1,) * 16, ("head=17", "A2_row_n_odd", "conjugate")),
            (49, 100, (18, 9, 6, 3, 3, 3, 2, 1, 1, 1, 1, 1), ("head=18", "S2_case2", "conjugate")),
        ],
    )
    def test_known_witnesses(self, n, k, parts, chain):
        record = quadratic_segment_witness(n, k)
        assert record.partition.parts == parts
        assert record.family_chain == chain
        assert record.verified

    def test_hole_in_bracketed_residual_is_rescued(self):
        # k = 413 at n = 48 brackets to head 30 with residual target -4 in
        # T_18, which is a genuine hole; the driver must fall back to a
        # different admissible head instead of failing
        record = quadratic_segment_witness(48, 413)
        assert record.partition.parts == (31, 5, 3, 2) + (1,) * 7
        assert record.family_chain == ("head=31", "oracle")
        assert eigenvalue(record.partition) == 413

    def test_negative_side_mirrors(self):
        for k in (74, 90, 413, 496):
            pos = quadratic_segment_witness(48, k)
            neg = quadratic_segment_witness(48, -k)
            assert neg.partition.parts == conjugate(pos.partition).parts
            assert eigenvalue(neg.partition) == -k

    def test_out_of_segment(self):
        with pytest.raises(TargetOutOfSegmentError):
            quadratic_segment_witness(48, 73)
        with pytest.raises(TargetOutOfSegmentError):
            quadratic_segment_witness(48, 497)
        with pytest.raises(TargetOutOfSegmentError):
            quadratic_segment_witness(48, 0)
        with pytest.raises(BelowConstructiveRangeError):
            quadratic_segment_witness(47, 100)


class TestQuadraticCover:
    def test_n48_clean(self):
        report = quadratic_segment_cover(48)
        assert report.covered == 496 - 74 + 1
        assert report.failures == ()

    def test_sweep(self):
        for n in range(QUADRATIC_MIN_N, 56):
            report = quadratic_segment_cover(n)
            assert report.failures == (), n
            bounds = quadratic_segment_bounds(n)
            assert report.covered == bounds.y2 - bounds.y1 + 1


class TestConjectureScan:
    def test_gap_between_segments_is_populated_at_48(self):
        report = conjecture_scan(48)
        assert report.segment == (49, 73)
        assert report.covered == 73 - 49 + 1
        assert report.failures == ()

    def test_small_n_uses_wide_window(self):
        report = conjecture_scan(31)
        assert report.covered == 62 - 32 + 1
        assert report.failures == ()

    def test_determinism(self):
        first = conjecture_scan(48).to_json_dict(with_witnesses=True)
        second = conjecture_scan(48).to_json_dict(with_witnesses=True)
        assert first == second

    def test_witnesses_are_real(self):
        full = spectrum(40)
        for record in conjecture_scan(40).records:
            assert eigenvalue(record.partition) == record.target
            assert record.target in full
