import pytest

from permcm.survey import HEADER, SurveyMismatch, rows_to_csv, run_survey, summarize, survey_row
import permcm.survey as survey


def test_single_vertex():
    rows = run_survey(1)
    assert len(rows) == 1
    assert rows[0].cm_thm and rows[0].connected and rows[0].complement_upo


def test_n2():
    rows = run_survey(2)
    assert [r.pi for r in rows] == [(1, 2), (2, 1)]
    assert all(r.cm_thm for r in rows)


def test_n4_counts():
    rows = run_survey(4)
    s = summarize(rows)
    assert s["rows"] == 24 and s["cm"] == 10 and s["mismatches"] == 0


def test_csv_layout():
    text = rows_to_csv(run_survey(2))
    lines = text.split("\n")
    assert lines[0] == ",".join(HEADER)
    assert lines[1] == "2,1 2,true,2,true,true,true,false,true"
    assert lines[2] == "2,2 1,true,1,true,true,true,true,true"
    assert text.endswith("\n") and "\r" not in text


def test_csv_is_deterministic():
    assert rows_to_csv(run_survey(4)) == rows_to_csv(run_survey(4))


def test_size_bounds():
    with pytest.raises(ValueError):
        run_survey(0)
    with pytest.raises(ValueError):
        run_survey(8)


def test_mismatch_aborts(monkeypatch):
    monkeypatch.setattr(survey, "oracle_is_cm_graph", lambda g, fields: False)
    with pytest.raises(SurveyMismatch) as exc:
        run_survey(3)
    assert exc.value.row.pi == (1, 2, 3)
    rows = run_survey(3, abort_on_mismatch=False)
    assert summarize(rows)["mismatches"] == 4


def test_row_fields():
    row = survey_row((5, 4, 6, 1, 3, 2))
    assert row.well_covered and row.r == 2 and not row.cm_thm and row.connected
    assert not row.complement_upo
