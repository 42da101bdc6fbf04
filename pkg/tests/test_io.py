"""File parsing, report emission, plot series, and round-trips."""

import json

import numpy as np
import pytest

from mcdm_weights import (
    ParseError,
    UnknownGrade,
    build_report,
    compare_weights,
    dwm_weights,
    emit_matrix,
    emit_plot_series,
    emit_report,
    entropy_weights,
    fixture_path,
    load_fixture,
    parse_matrix,
    parse_report,
    sha256_digest,
    validate_matrix,
)

import golden


def both_methods_report(matrix, notes=()):
    entropy = entropy_weights(matrix)
    dwm = dwm_weights(matrix)
    comparison = compare_weights(entropy[0], dwm[0])
    return build_report(
        matrix.criterion_names,
        sha256_digest(emit_matrix(matrix)),
        entropy=entropy,
        dwm=dwm,
        comparison=comparison,
        notes=notes,
    )


class TestParseMatrix:
    def test_example1_fixture(self, example1, example1_golden_matrix):
        assert example1 == example1_golden_matrix
        # the two reverse-coded columns carry their annotation
        assert example1.criteria[2].likert_reverse
        assert example1.criteria[4].likert_reverse

    def test_example2_fixture(self, example2):
        assert example2.alternatives == golden.EXAMPLE2_ALTERNATIVES
        assert example2.criterion_names == golden.EXAMPLE2_CRITERIA
        np.testing.assert_array_equal(
            example2.values, np.array(golden.EXAMPLE2_VALUES)
        )

    def test_short_row_rejected(self):
        text = "alternative,a,b,c,d,e\nA1,1,2,3,4\nA2,1,2,3,4,5\n"
        with pytest.raises(ParseError):
            parse_matrix(text)

    def test_unknown_grade_carries_position(self):
        text = "alternative,a,b\nA1,1,Low\nA2,2,Bananas\n"
        with pytest.raises(UnknownGrade) as info:
            parse_matrix(text)
        assert (info.value.line, info.value.col) == (3, 3)

    def test_bad_header_annotation(self):
        with pytest.raises(ParseError):
            parse_matrix("alternative,a:sideways\nA1,1\nA2,2\n")

    def test_bad_header_first_cell(self):
        with pytest.raises(ParseError):
            parse_matrix("name,a,b\nA1,1,2\nA2,3,4\n")

    def test_empty_cell_rejected(self):
        with pytest.raises(ParseError):
            parse_matrix("alternative,a,b\nA1,1,\nA2,3,4\n")

    def test_cost_annotation_recorded(self):
        m = parse_matrix("alternative,price:cost,quality\nA1,10,2\nA2,20,4\n")
        assert m.criteria[0].direction == "cost"
        assert m.criteria[1].direction == "benefit"

    def test_numeric_cells_ignore_reverse_flag(self):
        m = parse_matrix("alternative,a:reverse\nA1,6\nA2,2\n")
        np.testing.assert_array_equal(m.values[:, 0], [6.0, 2.0])

    def test_matrix_roundtrip(self, example2):
        assert parse_matrix(emit_matrix(example2)) == example2

    def test_roundtrip_keeps_annotations(self):
        m = parse_matrix("alternative,price:cost,work:reverse\nA1,10,2\nA2,20,4\n")
        again = parse_matrix(emit_matrix(m))
        assert again == m


class TestReports:
    def test_json_roundtrip(self, example1):
        report = both_methods_report(example1, notes=("fixture run",))
        assert parse_report(emit_report(report, "json"), "json") == report

    def test_csv_roundtrip(self, example1):
        report = both_methods_report(example1)
        assert parse_report(emit_report(report, "csv"), "csv") == report

    def test_weight_fields_match_published_tables(self, example1):
        report = both_methods_report(example1)
        np.testing.assert_allclose(
            report.entropy.weights, golden.EXAMPLE1_ENTROPY_W, atol=1e-6
        )
        np.testing.assert_allclose(
            report.dwm.weights, golden.EXAMPLE1_DWM_W, atol=1e-6
        )
        assert report.entropy.ranks == golden.EXAMPLE1_RANKS
        assert report.dwm.ranks == golden.EXAMPLE1_RANKS

    def test_single_method_omits_comparison(self, example1):
        report = build_report(
            example1.criterion_names,
            "sha256:0",
            entropy=entropy_weights(example1),
        )
        doc = json.loads(emit_report(report, "json"))
        assert "comparison" not in doc
        assert "dwm" not in doc
        assert "notes" not in doc
        csv_text = emit_report(report, "csv")
        assert "weight_dwm" not in csv_text
        assert "pearson" not in csv_text

    def test_not_applicable_correlation_roundtrips(self):
        m = validate_matrix([[1.0, 2.0], [3.0, 6.0]])
        report = both_methods_report(m)
        assert report.comparison.pearson is None
        for fmt in ("json", "csv"):
            assert parse_report(emit_report(report, fmt), fmt) == report

    def test_emission_is_deterministic(self, example2):
        report = both_methods_report(example2)
        for fmt in ("json", "csv"):
            assert emit_report(report, fmt) == emit_report(report, fmt)

    def test_weights_printed_at_six_decimals(self, example1):
        report = both_methods_report(example1)
        csv_text = emit_report(report, "csv")
        assert "0.063250" in csv_text  # entropy weight of Income
        assert "0.124993" in csv_text  # dwm weight of Income


class TestPlotSeries:
    def test_example1_series(self, example1):
        we, _ = entropy_weights(example1)
        wd, _ = dwm_weights(example1)
        text = emit_plot_series(example1.criterion_names, we, wd)
        lines = text.strip().split("\n")
        assert lines[0] == "criterion,weight_entropy,weight_dwm"
        assert len(lines) == 6
        # both methods put their largest weight on Distance
        rows = [line.split(",") for line in lines[1:]]
        top_entropy = max(rows, key=lambda r: float(r[1]))[0]
        top_dwm = max(rows, key=lambda r: float(r[2]))[0]
        assert top_entropy == top_dwm == "Distance"

    def test_example2_series_has_21_rows(self, example2):
        we, _ = entropy_weights(example2)
        wd, _ = dwm_weights(example2)
        text = emit_plot_series(example2.criterion_names, we, wd)
        assert len(text.strip().split("\n")) == 22

    def test_identical_vectors_give_identical_columns(self, example1):
        we, _ = entropy_weights(example1)
        text = emit_plot_series(example1.criterion_names, we, we)
        for line in text.strip().split("\n")[1:]:
            _, a, b = line.rsplit(",", 2)
            assert a == b


class TestFixtures:
    def test_fixture_dir_override(self, tmp_path, monkeypatch):
        target = tmp_path / "example1.csv"
        target.write_text(fixture_path("example1.csv").read_text())
        monkeypatch.setenv("MCDM_FIXTURES", str(tmp_path))
        assert fixture_path("example1.csv") == target
        m = load_fixture("example1.csv")
        np.testing.assert_array_equal(m.values, np.array(golden.EXAMPLE1_VALUES))

    def test_digest_is_stable(self):
        assert sha256_digest("abc") == (
            "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        )
