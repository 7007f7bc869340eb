import json
from pathlib import Path

import pandas as pd
import pytest

from kohomologi.io.report_export import export_report_excel, report_sheets, write_json
from kohomologi.io.schemas import PROVENANCE_COLUMNS, REPORT_KEYS, VERDICT_KEYS
from kohomologi.logic.formula import INFINITE, CollapsedGroup
from kohomologi.logic.report import Report, build_report, render_text


def test_report_of_path(p4):
    report = build_report(p4)
    assert report.vertices == ("a", "b", "c", "d")
    assert report.edges == (("a", "b"), ("b", "c"), ("c", "d"))
    assert report.f_vector == (4, 3)
    assert report.cohomology == {2: CollapsedGroup(INFINITE, ())}
    assert report.verdicts == {
        "free_abelian_branch": False,
        "free_abelian_rank": None,
        "cohomological_dimension": 2,
        "max_acyclicity": 0,
        "cohen_macaulay": True,
        "duality": True,
        "duality_dimension": 2,
        "poincare_duality": False,
    }
    assert not report.free_abelian_branch


def test_provenance_rows(p4):
    rows = build_report(p4).provenance
    assert len(rows) == 5
    first = rows[0]
    assert (first.sigma, first.link_f_vector, first.link_cohomology) == ("{b}", (2,), "H̄^0 = ℤ")
    assert (first.link_degree, first.degree, first.group) == (0, 2, "ℤ×ℵ₀")
    last = rows[-1]
    assert (last.sigma, last.link_f_vector, last.link_cohomology, last.link_degree) == ("{c,d}", (), "H̄^-1 = ℤ", -1)


def test_simplex_branch_report(k3):
    report = build_report(k3)
    assert report.free_abelian_branch
    assert report.verdicts["free_abelian_rank"] == 3
    assert report.verdicts["max_acyclicity"] is None
    assert report.verdicts["poincare_duality"] is True
    assert str(report.cohomology[3]) == "ℤ×1"
    assert "Fri abelsk gren: A_Γ = ℤ^3" in render_text(report)


def test_torsion_in_report(rp2):
    report = build_report(rp2)
    assert report.cohomology == {3: CollapsedGroup(INFINITE, ((2, INFINITE),))}
    assert report.verdicts["duality"] is False
    assert report.verdicts["cohen_macaulay"] is False
    assert report.verdicts["max_acyclicity"] == 0


def test_json_shape_and_roundtrip(p4):
    report = build_report(p4)
    data = json.loads(report.to_json())
    assert list(data) == REPORT_KEYS
    assert list(data["verdicts"]) == VERDICT_KEYS
    assert data["cohomology"] == {"2": {"free": "inf", "torsion": []}}
    assert data["graph"]["edges"][0] == ["a", "b"]
    assert data["provenance"][0]["link_f_vector"] == [2]
    assert Report.from_json(report.to_json()) == report


def test_json_keeps_unicode(rp2):
    text = build_report(rp2).to_json()
    assert "ℤ_2×ℵ₀" in text
    assert "\\u" not in text


def test_frames(p4):
    report = build_report(p4)
    coh = report.cohomology_frame()
    assert list(coh["Grad"]) == [0, 1, 2]
    assert list(coh.iloc[:, 1]) == ["0", "0", "ℤ×ℵ₀"]
    assert list(coh["Taggar"]) == ["0", "0", "ℤ:inf"]
    assert list(report.cohomology_frame(max_degree=4)["Grad"]) == [0, 1, 2, 3, 4]
    verdicts = report.verdict_frame()
    assert len(verdicts) == len(VERDICT_KEYS)
    assert verdicts.iloc[0]["Värde"] == "nej"
    assert verdicts.iloc[1]["Värde"] == "–"
    prov = report.provenance_frame()
    assert list(prov.columns) == [PROVENANCE_COLUMNS[k] for k in PROVENANCE_COLUMNS]
    assert prov.iloc[0]["f(Lk σ)"] == "(2)"


def test_render_text_sections(p4):
    text = render_text(build_report(p4))
    assert "ℤ:inf" in text
    assert text.startswith("Graf: 4 hörn, 3 kanter")
    assert "Kanter: a-b b-c c-d" in text
    assert "Proveniens:" in text
    assert "ℤ×ℵ₀" in text


def test_build_report_logs(p4):
    lines = []
    build_report(p4, log=lines.append)
    assert any(line.startswith("Rapport: 5 proveniensrader") for line in lines)


def test_write_json(tmp_path, p4):
    path = write_json(build_report(p4).to_json(), str(tmp_path / "r.json"))
    assert Report.from_json(Path(path).read_text(encoding="utf-8")).f_vector == (4, 3)


def test_excel_export(tmp_path, p4):
    pytest.importorskip("openpyxl")
    report = build_report(p4)
    assert set(report_sheets(report)) == {"Kohomologi", "Utslag", "Proveniens"}
    path = export_report_excel(report, str(tmp_path / "rapport"))
    assert path.endswith("rapport.xlsx")
    sheets = pd.read_excel(path, sheet_name=None)
    assert set(sheets) == {"Kohomologi", "Utslag", "Proveniens"}
    assert len(sheets["Proveniens"]) == 5


def test_text_tags_for_torsion_and_simplex_branch(rp2, k3):
    assert build_report(rp2).cohomology_frame()["Taggar"].iloc[3] == "ℤ:inf ℤ_2:inf"
    assert build_report(k3).cohomology_frame()["Taggar"].iloc[3] == "ℤ:1"
