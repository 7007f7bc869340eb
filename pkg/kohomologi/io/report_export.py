# io/report_export.py
from __future__ import annotations

import os
from typing import Dict

import pandas as pd

from ..utils.common import _write_frames_to_excel


def write_json(text: str, path: str) -> str:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text if text.endswith("\n") else text + "\n")
    return path


def report_sheets(report) -> Dict[str, pd.DataFrame]:
    return {
        "Kohomologi": report.cohomology_frame(),
        "Utslag": report.verdict_frame(),
        "Proveniens": report.provenance_frame(),
    }


def export_report_excel(report, path: str) -> str:
    return _write_frames_to_excel(report_sheets(report), _xlsx_path(path))


def export_validation_excel(frame: pd.DataFrame, path: str) -> str:
    return _write_frames_to_excel({"Validering": frame}, _xlsx_path(path))


def export_corpus_excel(summary, path: str) -> str:
    sheets = {"Korpus": summary.frame, "Acyklicitet": summary.histogram_frame()}
    if summary.failures:
        sheets["Fel"] = summary.failure_frame()
    return _write_frames_to_excel(sheets, _xlsx_path(path))


def _xlsx_path(path: str) -> str:
    root, ext = os.path.splitext(path)
    return path if ext.lower() == ".xlsx" else root + ".xlsx"
