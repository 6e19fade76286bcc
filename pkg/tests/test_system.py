"""Tests for the restricted-walk linear system and its solutions."""

from fractions import Fraction

import pytest

from lattice_gf.loops import LoopModel
from lattice_gf.oracle import count_restricted
from lattice_gf.periodic import PeriodicSet, hajnal_nagy_set, shift_distance
from lattice_gf.series import TruncatedSeries
from lattice_gf.system import (
    SeriesMatrix,
    build_system,
    period_two_closed_form,
    reduction_check,
    restricted_path_gf,
    solve_linear_system,
    solve_restricted,
)


def gf_counts(dim, restriction, order):
    gf = restricted_path_gf(dim, restriction, 0, order)
    return tuple(gf.coeffs)


def dp_counts(dim, restriction, order):
    table = count_restricted(dim, restriction, max_half_len=order - 1)
    return tuple(Fraction(c) for c in table.counts)


class TestSystemAssembly:
    def test_two_state_entries(self):
        # For residues {0,1} mod 4 the matrix couples the two admissible
        # classes through excursion multisections at explicit offsets.
        dim, order = 1, 9
        restriction = hajnal_nagy_set(2)
        matrix, rhs = build_system(dim, restriction, order)
        excursions = LoopModel(dim=dim, order=order).primitive_excursion_gf()
        one = TruncatedSeries.one(order)
        assert matrix.entry(0, 0) == one - excursions.multisection(4, 0)
        assert matrix.entry(0, 1) == -excursions.multisection(4, 1)
        assert matrix.entry(1, 0) == -excursions.multisection(
            4, shift_distance(1, 0, 4))
        assert matrix.entry(1, 1) == one - excursions.multisection(4, 0)
        escaping = LoopModel(dim=dim, order=order).escaping_gf()
        assert rhs == [escaping, escaping]

    def test_full_set_rows_sum_to_renewal_complement(self):
        # Summing a row over all residues reassembles 1 - SL.
        dim, order = 2, 8
        restriction = PeriodicSet.full(3)
        matrix, _ = build_system(dim, restriction, order)
        excursions = LoopModel(dim=dim, order=order).primitive_excursion_gf()
        one = TruncatedSeries.one(order)
        for r in range(3):
            total = TruncatedSeries.zero(order)
            for q in range(3):
                total = total + matrix.entry(r, q)
            assert total == one - excursions

    def test_solution_satisfies_system(self):
        dim, order = 1, 10
        restriction = PeriodicSet((0, 2), 5)
        matrix, rhs = build_system(dim, restriction, order)
        solution = solve_linear_system(matrix, rhs)
        assert matrix.mul_vec(solution) == rhs

    def test_identity_solve(self):
        order = 5
        identity = SeriesMatrix.identity(3, order)
        rhs = [TruncatedSeries.monomial(j + 1, j, order) for j in range(3)]
        assert solve_linear_system(identity, rhs) == rhs

    def test_singular_system_rejected(self):
        order = 4
        zero = TruncatedSeries.zero(order)
        t = TruncatedSeries.monomial(1, 1, order)
        matrix = SeriesMatrix([[t, zero], [zero, t]])
        with pytest.raises(ArithmeticError):
            solve_linear_system(matrix, [zero, zero])


class TestRestrictedGf:
    def test_unrestricted_walks(self):
        for dim in (1, 2):
            gf = restricted_path_gf(dim, PeriodicSet.full(1), 0, 6)
            assert gf.coeffs == tuple(
                Fraction((2 * dim) ** (2 * k)) for k in range(6))

    def test_alternating_set_dim1(self):
        gf = restricted_path_gf(1, hajnal_nagy_set(1), 0, 7)
        assert gf.coeffs == (1, 2, 8, 24, 96, 320, 1280)
        assert gf.multisection(2, 0).coeffs == (1, 0, 8, 0, 96, 0, 1280)

    def test_period_four_multisection_frozen(self):
        gf = restricted_path_gf(1, hajnal_nagy_set(2), 0, 9)
        sliced = gf.multisection(4, 0)
        assert sliced.coeffs == (1, 0, 0, 0, 128, 0, 0, 0, 24576)

    def test_matches_enumeration(self):
        cases = [
            (1, hajnal_nagy_set(1)),
            (1, hajnal_nagy_set(2)),
            (1, PeriodicSet((0, 2), 5)),
            (2, hajnal_nagy_set(1)),
            (2, PeriodicSet((0, 1, 2), 4)),
        ]
        for dim, restriction in cases:
            assert gf_counts(dim, restriction, 7) == dp_counts(dim, restriction, 7)

    def test_start_residue_reduces_mod_period(self):
        restriction = PeriodicSet((0, 2), 5)
        a = restricted_path_gf(1, restriction, 2, 8)
        b = restricted_path_gf(1, restriction, 7, 8)
        assert a == b

    def test_inadmissible_start_rejected(self):
        with pytest.raises(ValueError):
            restricted_path_gf(1, PeriodicSet((0, 2), 5), 1, 6)

    def test_solution_table_covers_all_residues(self):
        restriction = PeriodicSet((0, 1, 2), 4)
        solution = solve_restricted(1, restriction, 6)
        assert sorted(solution.series) == [0, 1, 2]
        assert solution.series[0].constant_term == 1

    def test_rotation_symmetry(self):
        # Residues {0,2} mod 4 look the same from either admissible class.
        restriction = PeriodicSet((0, 2), 4)
        solution = solve_restricted(1, restriction, 10)
        assert solution.series[0] == solution.series[2]


class TestClosedFormPeriodTwo:
    def test_matches_solver_and_enumeration(self):
        for dim in (1, 2, 3):
            order = 6
            closed = period_two_closed_form(dim, order)
            solved = restricted_path_gf(dim, hajnal_nagy_set(1), 0, order)
            assert closed == solved.multisection(2, 0)
            table = count_restricted(dim, hajnal_nagy_set(1), max_half_len=order - 1)
            for k in range(order):
                expected = table[k] if k % 2 == 0 else 0
                assert closed.coefficient(k) == expected

    def test_dim2_frozen_prefix(self):
        expected = (1, 0, 192, 0, 45056, 0, 10979328, 0, 2716942336,
                    0, 677907697664, 0, 170013263888384)
        closed = period_two_closed_form(2, 13)
        assert closed.coeffs == tuple(Fraction(c) for c in expected)


class TestReduction:
    def test_acceptance_pairs(self):
        for dim in (1, 2):
            for restriction in (hajnal_nagy_set(1), hajnal_nagy_set(2)):
                assert reduction_check(dim, restriction, 0, 0, order=12)

    def test_generic_anchor_and_slot(self):
        assert reduction_check(1, PeriodicSet((0, 2), 5), 2, 1, order=10)
        assert reduction_check(2, PeriodicSet((0, 1, 2), 4), 1, 3, order=8)

    def test_inadmissible_anchor_rejected(self):
        with pytest.raises(ValueError):
            reduction_check(1, PeriodicSet((0, 2), 5), 1, 0, order=6)
