"""Verification reports: base relation, satellite rows, eigen consistency."""

import pytest

from skeinkit.corpus import (
    corpus_names,
    empty_link,
    hopf_plus,
    load_corpus,
    trefoil,
    unknot,
)
from skeinkit.eigen import delta_kauffman
from skeinkit.partition import Partition
from skeinkit.skein_eval import EvalConfig, SkeinBudgetError, adjoint_homfly
from skeinkit.verify import (
    VERIFY_CONFIG,
    CheckRecord,
    VerificationReport,
    build_satellite_row,
    eigen_consistency,
    verify_main,
    verify_rudolph,
)


def P(*parts) -> Partition:
    return Partition(tuple(parts))


CORPUS_BUDGET = EvalConfig(max_crossings=24)


class TestBaseRelation:
    def test_empty_link_both_sides_one(self):
        report = verify_rudolph(empty_link())
        assert report.passed
        assert report.kind == "rudolph"
        assert len(report.checks) == 1

    def test_unknot_sides_equal_doubled_circle_value(self):
        report = verify_rudolph(unknot())
        assert report.passed
        expected = delta_kauffman().to_mod2().doubling_map()
        assert adjoint_homfly(unknot()).to_mod2() == expected

    @pytest.mark.parametrize("name", corpus_names())
    def test_whole_corpus_passes_at_stated_budget(self, name):
        report = verify_rudolph(load_corpus(name), CORPUS_BUDGET)
        assert report.passed, report.to_text()

    def test_budget_error_propagates(self):
        with pytest.raises(SkeinBudgetError):
            verify_rudolph(trefoil(), EvalConfig(max_crossings=4))


class TestReportShape:
    def test_passed_mirrors_checks(self):
        report = verify_rudolph(unknot())
        assert report.passed == all(c.passed for c in report.checks)

    def test_dict_excludes_timing_by_default(self):
        report = verify_rudolph(unknot())
        data = report.to_dict()
        assert set(data) == {"kind", "link", "assignments", "passed", "checks"}
        assert "elapsed_seconds" in report.to_dict(include_timing=True)

    def test_text_rendering_is_stable(self):
        report = VerificationReport(
            "rudolph", "x", (), (CheckRecord("thing", True, "note"),), True, 1.5
        )
        assert report.to_text() == "rudolph: x\n  PASS  thing  [note]\nresult: PASS"
        assert report.to_text(include_timing=True).endswith("elapsed: 1.50s")


class TestSatelliteRows:
    def test_unknot_row_two(self):
        row = build_satellite_row(unknot(), 0, 2)
        assert row.n_components == 4
        assert len(row.crossings) == 8

    def test_row_zero_is_doubling_only(self):
        row = build_satellite_row(unknot(), 0, 0)
        assert row.same_diagram_as(unknot().cable(0, 2))

    def test_hopf_row_one(self):
        row = build_satellite_row(hopf_plus(), 1, 1)
        assert row.n_components == 4
        assert len(row.crossings) == 8

    def test_meridians_encircle_both_copies(self):
        # copies sit at 0 and 1, meridians at the tail indices
        row = build_satellite_row(unknot(), 0, 2)
        for meridian in (2, 3):
            assert row.linking_number(0, meridian) != 0
            assert row.linking_number(1, meridian) != 0

    def test_negative_count_rejected(self):
        with pytest.raises(ValueError):
            build_satellite_row(unknot(), 0, -1)


@pytest.fixture(scope="module")
def unknot_row_two_report():
    return verify_main(unknot(), [P(2)])


class TestMainUnknot:
    def test_row_two_passes(self, unknot_row_two_report):
        report = unknot_row_two_report
        assert report.passed, report.to_text()
        assert report.kind == "main"
        assert report.assignments == ("2",)

    def test_row_two_check_inventory(self, unknot_row_two_report):
        labels = [c.label for c in unknot_row_two_report.checks]
        for r in range(4):
            assert f"row r={r}: adjoint equals doubled unoriented value" in labels
        assert "assembled: adjoint decoration equals doubled unoriented decoration" in labels
        assert "solved empty-shape value equals deleted-component value" in labels
        assert "solved target value reproduces the assembled value" in labels
        assert "row r=3 predicted exactly" in labels
        assert sum(1 for label in labels if label.startswith("adjoint side")) == 3

    def test_per_row_checks_agree_with_direct_calls(self, unknot_row_two_report):
        # each row check must match running the base relation on that row
        for r in range(4):
            row = build_satellite_row(unknot(), 0, r)
            direct = verify_rudolph(row, VERIFY_CONFIG)
            recorded = unknot_row_two_report.checks[r]
            assert recorded.label == f"row r={r}: adjoint equals doubled unoriented value"
            assert recorded.passed == direct.passed

    def test_column_shape_passes(self, unknot_row_two_report):
        # same row diagrams, different assembly coefficients
        report = verify_main(unknot(), [P(1, 1)])
        assert report.passed, report.to_text()
        assert report.assignments == ("1,1",)

    def test_width_one_degenerates_to_base_relation(self):
        report = verify_main(unknot(), [P(1)])
        assert report.kind == "main"
        assert report.passed
        assert len(report.checks) == 1
        assert report.checks[0].label == "adjoint equals doubled unoriented value"


class TestMainValidation:
    def test_assignment_count_must_match(self):
        with pytest.raises(ValueError):
            verify_main(unknot(), [P(2), P(1)])

    def test_oversized_shape_rejected(self):
        with pytest.raises(ValueError):
            verify_main(unknot(), [P(3)])

    def test_two_wide_shapes_rejected(self):
        with pytest.raises(ValueError):
            verify_main(hopf_plus(), [P(2), P(1, 1)])

    def test_empty_shape_rejected(self):
        with pytest.raises(ValueError):
            verify_main(hopf_plus(), [P(1), P()])


@pytest.mark.extended
class TestMainHopf:
    def test_hopf_component_one_row_two(self):
        # width-two shape on the first component, trivial shape on the other;
        # the same case the acceptance battery runs under --extended, so one
        # process computes the family once and shares the memo
        report = verify_main(hopf_plus(), [P(2), P(1)])
        assert report.passed, report.to_text()


class TestEigenConsistency:
    def test_unknot_meridian_powers(self):
        report = eigen_consistency()
        assert report.passed, report.to_text()
        assert len(report.checks) == 10

    def test_explicit_unknot_accepted(self):
        assert eigen_consistency(unknot()).passed

    def test_other_diagrams_rejected(self):
        with pytest.raises(ValueError):
            eigen_consistency(hopf_plus())
