"""Tests for periodic admissible-time sets and cyclic shift distances."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lattice_gf.periodic import PeriodicSet, hajnal_nagy_set, shift_distance

from helpers import polygon_distance


class TestValidation:
    def test_basic_construction(self):
        s = PeriodicSet((0, 2), 5)
        assert s.residues == (0, 2)
        assert s.period == 5
        assert s.size == 2

    def test_residues_sorted(self):
        assert PeriodicSet((0, 3, 1), 4).residues == (0, 1, 3)

    def test_zero_required(self):
        with pytest.raises(ValueError):
            PeriodicSet((1, 2), 4)

    def test_residue_out_of_range(self):
        with pytest.raises(ValueError):
            PeriodicSet((0, 4), 4)
        with pytest.raises(ValueError):
            PeriodicSet((0, -1), 4)

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            PeriodicSet((0, 2, 2), 4)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            PeriodicSet((), 4)

    def test_bad_period(self):
        with pytest.raises(ValueError):
            PeriodicSet((0,), 0)

    def test_full_set(self):
        full = PeriodicSet.full(3)
        assert full.residues == (0, 1, 2)
        assert full.is_full
        assert not PeriodicSet((0, 2), 3).is_full


class TestAdmissibility:
    def test_periodicity(self):
        s = PeriodicSet((0, 2), 5)
        admissible = [j for j in range(15) if s.is_admissible_half_time(j)]
        assert admissible == [0, 2, 5, 7, 10, 12]

    def test_negative_time_rejected(self):
        with pytest.raises(ValueError):
            PeriodicSet((0,), 2).is_admissible_half_time(-1)

    @given(st.integers(min_value=0, max_value=100))
    def test_full_set_admits_everything(self, j):
        assert PeriodicSet.full(4).is_admissible_half_time(j)


class TestShiftDistance:
    @given(st.integers(min_value=1, max_value=12), st.data())
    def test_matches_polygon_walk(self, period, data):
        start = data.draw(st.integers(min_value=0, max_value=period - 1))
        target = data.draw(st.integers(min_value=0, max_value=period - 1))
        assert shift_distance(start, target, period) == polygon_distance(
            start, target, period)

    @given(st.integers(min_value=1, max_value=12), st.data())
    def test_translation_invariance(self, period, data):
        start = data.draw(st.integers(min_value=0, max_value=period - 1))
        target = data.draw(st.integers(min_value=0, max_value=period - 1))
        offset = data.draw(st.integers(min_value=0, max_value=period - 1))
        assert shift_distance(start, target, period) == shift_distance(
            (start + offset) % period, (target + offset) % period, period)

    def test_range_checks(self):
        with pytest.raises(ValueError):
            shift_distance(0, 3, 3)
        with pytest.raises(ValueError):
            shift_distance(-1, 0, 3)

    def test_frozen_values(self):
        assert shift_distance(0, 0, 4) == 0
        assert shift_distance(1, 0, 4) == 3
        assert shift_distance(0, 1, 4) == 1
        assert shift_distance(3, 1, 4) == 2


class TestStaircaseFamily:
    def test_small_members(self):
        assert hajnal_nagy_set(1) == PeriodicSet((0,), 2)
        assert hajnal_nagy_set(2) == PeriodicSet((0, 1), 4)
        assert hajnal_nagy_set(3) == PeriodicSet((0, 1, 2), 6)

    def test_size_is_half_period(self):
        for k in range(1, 8):
            s = hajnal_nagy_set(k)
            assert s.size == k
            assert s.period == 2 * k

    def test_invalid_k(self):
        with pytest.raises(ValueError):
            hajnal_nagy_set(0)
