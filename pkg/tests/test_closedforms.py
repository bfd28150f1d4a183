from fractions import Fraction

import pytest

from gammaexc.closedforms import (
    MissingBase,
    NoClosedForm,
    closed_family,
    coeff_tables,
    conj_exc_closed,
    derangement_closed,
    dexc_jump_tail,
    eulerian,
    eulerian_t,
    half_sum_closed,
    jump4,
    jump_tables,
    set_partition_count,
    sgn_dexc_closed,
    sgnb_des_u_closed,
    step_recurrence,
)
from gammaexc.groups import CycleType
from gammaexc.oracle import FamilySpec, family_poly
from gammaexc.poly import BIVARIATE, Poly, gamma_decompose

s, t = Poly.gens("s", "t")


class TestEulerian:
    def test_type_a_values(self):
        assert eulerian("A", 1) == 1
        assert eulerian("A", 2) == s + t
        assert eulerian("A", 3) == s ** 2 + 4 * s * t + t ** 2

    def test_type_b_values(self):
        assert eulerian("B", 1) == s + t
        assert eulerian("B", 2) == s ** 2 + 6 * s * t + t ** 2

    def test_against_oracle(self):
        for n in range(1, 6):
            assert eulerian("A", n) == family_poly(FamilySpec("a_des", n))
        for n in range(1, 5):
            assert eulerian("B", n) == family_poly(FamilySpec("b_des", n))

    def test_univariate(self):
        assert eulerian_t("A", 3) == 1 + 4 * t + t ** 2

    def test_validation(self):
        with pytest.raises(ValueError):
            eulerian("C", 3)
        with pytest.raises(ValueError):
            eulerian("A", 0)


class TestHalfSum:
    def test_aexc5_plus(self):
        assert half_sum_closed("aexc", 5, "plus") == (
            s ** 4 + 11 * s ** 3 * t + 36 * s ** 2 * t ** 2
            + 11 * s * t ** 3 + t ** 4
        )

    def test_rank2_bases(self):
        assert half_sum_closed("aexc", 2, "plus") == s
        assert half_sum_closed("aexc", 2, "minus") == t

    def test_bexc2_minus(self):
        assert half_sum_closed("bexc", 2, "minus") == 4 * s * t

    def test_validation(self):
        with pytest.raises(ValueError):
            half_sum_closed("aexc", 1, "plus")
        with pytest.raises(ValueError):
            half_sum_closed("dexc", 3, "plus")
        with pytest.raises(ValueError):
            half_sum_closed("aexc", 3, "all")


class TestStepRecurrence:
    def test_aexc3_plus(self):
        # identity has (exc, nexc-1) = (0, 2); the 3-cycles give st and t^2
        assert step_recurrence("aexc", 3, "plus") == s ** 2 + s * t + t ** 2

    def test_matches_half_sum(self):
        for n in range(2, 9):
            for cls in ("plus", "minus"):
                assert step_recurrence("aexc", n, cls) \
                    == half_sum_closed("aexc", n, cls)
        for n in range(1, 9):
            for cls in ("plus", "minus"):
                assert step_recurrence("bexc", n, cls) \
                    == half_sum_closed("bexc", n, cls)

    def test_bexc3_cross_check(self):
        assert step_recurrence("bexc", 3, "plus") \
            == half_sum_closed("bexc", 3, "plus") \
            == family_poly(FamilySpec("bexc", 3, "plus"))

    def test_dexc2(self):
        assert step_recurrence("dexc", 2) == s ** 2 + 2 * s * t + t ** 2
        assert step_recurrence("bdexc", 2) == 4 * s * t

    def test_dexc_against_oracle(self):
        for n in range(2, 6):
            assert step_recurrence("dexc", n) == family_poly(FamilySpec("dexc", n))
            assert step_recurrence("bdexc", n) \
                == family_poly(FamilySpec("bdexc", n))
            for cls in ("plus", "minus"):
                assert step_recurrence("dexc", n, cls) \
                    == family_poly(FamilySpec("dexc", n, cls))

    def test_all_class_sums(self):
        assert step_recurrence("aexc", 4) == eulerian("A", 4)
        assert step_recurrence("bexc", 3) == eulerian("B", 3)

    def test_validation(self):
        with pytest.raises(ValueError):
            step_recurrence("aexc", 1, "plus")
        with pytest.raises(ValueError):
            step_recurrence("bdexc", 3, "plus")


class TestCoeffTables:
    def test_row_4(self):
        tables = coeff_tables(6)
        assert tables.row(4, "plus") == (1, 4, 7, 0)
        assert tables.row(4, "minus") == (0, 7, 4, 1)

    def test_row_2(self):
        tables = coeff_tables(4)
        assert tables.row(2, "plus") == (1, 0)
        assert tables.row(2, "minus") == (0, 1)

    def test_rows_match_closed_forms(self):
        import math

        tables = coeff_tables(12)
        for n in range(2, 13):
            for cls in ("plus", "minus"):
                f = half_sum_closed("aexc", n, cls).substitute_one("s")
                row = tuple(f.coefficient("t", k).constant_value()
                            for k in range(n))
                assert tables.row(n, cls) == row
            assert sum(tables.row(n, "plus")) == math.factorial(n) // 2
            assert sum(tables.row(n, "minus")) == math.factorial(n) // 2

    def test_out_of_range(self):
        tables = coeff_tables(5)
        with pytest.raises(ValueError):
            tables.row(6, "plus")
        assert tables.value(4, 17, "plus") == 0


class TestJump:
    def test_table_values(self):
        tab = jump_tables()
        assert tab["L2"][0] == 15 * s * t * (s + t) ** 2
        assert tab["L2"][1] == Fraction(2)
        assert tab["R1"][0] == ((s + t) ** 4 + 8 * s * t * (s + t) ** 2
                                + 16 * (s * t) ** 2)
        assert tab["R1"][1] == Fraction(2)
        assert tab["R7"][0] == 2 * (s * t) ** 2
        assert tab["R7"][1] == Fraction(2)
        assert len(tab) == 13

    def test_a_jump_equals_steps(self):
        for n, cls in ((5, "plus"), (5, "minus"), (7, "plus"), (9, "minus")):
            assert jump4("aexc", n, cls) == step_recurrence("aexc", n + 4, cls)

    def test_d_jump_equals_steps(self):
        for n, cls in ((4, "plus"), (4, "minus"), (6, "plus"), (8, "minus")):
            assert jump4("dexc", n, cls) == step_recurrence("dexc", n + 4, cls)

    def test_tail_has_even_gammas(self):
        gexp = gamma_decompose(dexc_jump_tail(2), BIVARIATE)
        assert gexp.center_of_symmetry == 3
        assert all(g % 2 == 0 and g >= 0 for g in gexp.gammas)

    def test_missing_base(self):
        with pytest.raises(MissingBase):
            jump4("aexc", 4, "plus")
        with pytest.raises(MissingBase):
            jump4("aexc", 3, "plus")
        with pytest.raises(MissingBase):
            jump4("dexc", 5, "plus")
        with pytest.raises(ValueError):
            jump4("bexc", 4, "plus")


class TestConjugacyAndDerangements:
    def test_set_partition_count(self):
        assert set_partition_count((2, 2)) == 3
        assert set_partition_count((5,)) == 1
        assert set_partition_count((3, 2)) == 10
        assert set_partition_count(CycleType((2, 1, 1))) == 6

    def test_single_cycle(self):
        assert conj_exc_closed((4,)) == t + 4 * t ** 2 + t ** 3

    def test_double_transposition(self):
        assert conj_exc_closed((2, 2)) == 3 * t ** 2

    def test_identity_class(self):
        assert conj_exc_closed((1, 1, 1, 1)) == Poly.const(1, ("t",))

    def test_derangements(self):
        assert derangement_closed(4) == t + 7 * t ** 2 + t ** 3
        assert derangement_closed(4, "plus") == 3 * t ** 2
        assert derangement_closed(4, "minus") == t + 4 * t ** 2 + t ** 3

    def test_all_fixed(self):
        assert derangement_closed(5, fixed=5) == Poly.const(1, ("t",))
        assert derangement_closed(5, "minus", fixed=5).is_zero

    def test_impossible_fixed_count(self):
        assert derangement_closed(5, fixed=4).is_zero

    def test_against_oracle(self):
        for n in range(1, 7):
            for cls in ("all", "plus", "minus"):
                assert derangement_closed(n, cls) \
                    == family_poly(FamilySpec("aderexc", n, cls))


class TestClosedFamilyDispatch:
    def test_matches_oracle_engine(self):
        cases = [
            FamilySpec("aexc", 5, "plus"),
            FamilySpec("aexc", 4),
            FamilySpec("a_des", 4),
            FamilySpec("b_des", 3, "minus"),
            FamilySpec("bexc", 3, "plus"),
            FamilySpec("dexc", 4, "minus"),
            FamilySpec("bdexc", 3),
            FamilySpec("sgn_aexc", 5),
            FamilySpec("sgn_bexc", 3),
            FamilySpec("sgn_dexc", 4),
            FamilySpec("aderexc", 5, "minus"),
            FamilySpec("conjexc", 5, lam=(3, 2)),
        ]
        for fs in cases:
            assert closed_family(fs) == family_poly(fs), str(fs)

    def test_sgnb_des_u(self):
        assert closed_family(FamilySpec("sgnb_des_u", 3)) == sgnb_des_u_closed(3)

    def test_sgn_dexc_parity(self):
        assert sgn_dexc_closed(4) == (s - t) ** 4
        assert sgn_dexc_closed(5) == s * (s - t) ** 4

    def test_qrefined_has_no_closed_form(self):
        with pytest.raises(NoClosedForm):
            closed_family(FamilySpec("qrefined", 4, stat="inv"))


class TestBridgeSplitExample:
    def test_rank5_bridge_splits_at_centers_2_and_3(self):
        from gammaexc.poly import D, UNIVARIATE, gamma_decompose, split_odd_length

        bridge = (s * t * D(eulerian("A", 5))).substitute_one("s")
        expansion = gamma_decompose(bridge, UNIVARIATE)
        assert expansion.center_of_symmetry == Fraction(5, 2)
        low, high = split_odd_length(expansion)
        assert low.center_of_symmetry == 2
        assert high.center_of_symmetry == 3
        assert low.recompose() + high.recompose() == bridge

    def test_fixed_scaling(self):
        # choosing the fixed points multiplies the derangement polynomial
        assert derangement_closed(6, fixed=2) \
            == 15 * derangement_closed(4)
