"""Enumeration oracle, partition counting, and the dense Cayley cross-check."""

import pytest

from tnspec.errors import OracleLimitError, SizeLimitError
from tnspec.oracle import (
    EnumerationConstraints,
    cayley_adjacency,
    cayley_spectrum,
    contains,
    enumerate_partitions,
    partition_count,
    spectrum,
)
from tnspec.partitions import choose2, eigenvalue


class TestEnumeration:
    def test_reverse_lexicographic_order(self):
        parts = [p.parts for p in enumerate_partitions(4)]
        assert parts == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_single(self):
        assert [p.parts for p in enumerate_partitions(1)] == [(1,)]

    def test_max_first_part(self):
        constrained = EnumerationConstraints(max_first_part=2)
        parts = [p.parts for p in enumerate_partitions(5, constrained)]
        assert parts == [(2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]

    def test_max_length(self):
        constrained = EnumerationConstraints(max_length=2)
        parts = [p.parts for p in enumerate_partitions(5, constrained)]
        assert parts == [(5,), (4, 1), (3, 2)]

    def test_combined_constraints(self):
        constrained = EnumerationConstraints(max_first_part=3, max_length=3)
        parts = [p.parts for p in enumerate_partitions(6, constrained)]
        assert parts == [(3, 3), (3, 2, 1), (2, 2, 2)]

    def test_deterministic(self):
        first = [p.parts for p in enumerate_partitions(9)]
        second = [p.parts for p in enumerate_partitions(9)]
        assert first == second

    def test_count_agreement_with_recurrence(self):
        for n in range(1, 41):
            assert sum(1 for _ in enumerate_partitions(n)) == partition_count(n)

    def test_limit_enforced(self):
        with pytest.raises(OracleLimitError):
            list(enumerate_partitions(51))
        # explicit limit raises the ceiling
        assert sum(1 for _ in enumerate_partitions(51, limit=51)) == partition_count(51)

    def test_env_var_limit(self, monkeypatch):
        monkeypatch.setenv("TNSPEC_ORACLE_LIMIT", "10")
        with pytest.raises(OracleLimitError):
            list(enumerate_partitions(11))
        monkeypatch.setenv("TNSPEC_ORACLE_LIMIT", "12")
        assert sum(1 for _ in enumerate_partitions(12)) == partition_count(12)

    def test_rejects_nonpositive_n(self):
        with pytest.raises(ValueError):
            list(enumerate_partitions(0))


class TestPartitionCount:
    @pytest.mark.parametrize(
        "n, expected",
        [(0, 1), (1, 1), (4, 5), (10, 42), (48, 147273), (50, 204226)],
    )
    def test_known_values(self, n, expected):
        assert partition_count(n) == expected

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            partition_count(-1)


class TestSpectrum:
    def test_small_spectra(self):
        assert spectrum(3).values == (-3, 0, 3)
        assert spectrum(4).values == (-6, -2, 0, 2, 6)

    def test_witnesses_are_first_encountered(self):
        found = spectrum(6)
        # (4, 1, 1) precedes (3, 3) in reverse-lexicographic order
        assert found.witness(3).parts == (4, 1, 1)
        assert found.witness(choose2(6)).parts == (6,)

    def test_every_witness_attains_its_value(self):
        found = spectrum(12)
        for value in found.values:
            assert eigenvalue(found.witness(value)) == value

    def test_symmetry_and_extremes(self):
        for n in range(1, 31):
            found = spectrum(n)
            assert found.values == tuple(sorted(-v for v in found.values))
            assert found.values[-1] == choose2(n)
            assert found.values[0] == -choose2(n)

    def test_constrained_subset_of_full(self):
        for n in range(2, 21):
            full = set(spectrum(n).values)
            for cap in range(1, n + 1):
                restricted = spectrum(n, EnumerationConstraints(max_first_part=cap))
                assert set(restricted.values) <= full

    def test_restricted_example(self):
        restricted = spectrum(5, EnumerationConstraints(max_first_part=2))
        assert restricted.values == (-10, -5, -2)

    def test_membership_operator(self):
        found = spectrum(4)
        assert 2 in found
        assert 3 not in found
        assert -6 in found
        assert 7 not in found

    def test_json_shape(self):
        payload = spectrum(4).to_json_dict()
        assert payload["n"] == 4
        assert payload["values"] == [-6, -2, 0, 2, 6]
        assert payload["witnesses"]["0"] == [2, 2]

    def test_no_witness_request(self):
        found = spectrum(5, witnesses=False)
        assert found.witnesses is None
        assert found.witness(0) is None


class TestContains:
    def test_present(self):
        answer, witness = contains(6, 3)
        assert answer is True
        assert witness.parts in {(4, 1, 1), (3, 3)}
        assert eigenvalue(witness) == 3

    def test_absent(self):
        answer, witness = contains(4, 1)
        assert answer is False
        assert witness is None

    def test_small_spectra_have_holes(self):
        # the reason constructive coverage needs n large enough
        assert contains(18, 4)[0] is False
        assert contains(18, 16)[0] is False


class TestCayley:
    def test_single_vertex(self):
        assert cayley_spectrum(1).values == (0,)

    def test_two_vertices(self):
        assert cayley_spectrum(2).values == (-1, 1)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_matches_partition_spectrum(self, n):
        assert cayley_spectrum(n).values == spectrum(n).values

    def test_adjacency_is_regular(self):
        adjacency = cayley_adjacency(4)
        assert adjacency.shape == (24, 24)
        assert (adjacency.sum(axis=1) == choose2(4)).all()
        assert (adjacency == adjacency.T).all()
        assert (adjacency.diagonal() == 0).all()

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            cayley_spectrum(7)

    def test_no_witnesses(self):
        assert cayley_spectrum(3).witnesses is None
