# utils/common.py
from __future__ import annotations

import importlib.util
import os
from typing import Callable, Dict, Optional, TextIO, Union

import pandas as pd

from ..config.constants import DEFAULT_EXPONENT_BOUND, EXPONENT_BOUND_ENV

LogFn = Optional[Callable[[str], None]]


def _write_frames_to_excel(frames: Union[pd.DataFrame, Dict[str, pd.DataFrame]], path: str) -> str:
    """Skriv DF (eller {blad: DF}) till en .xlsx-fil."""
    if importlib.util.find_spec("openpyxl"):
        engine = "openpyxl"
    elif importlib.util.find_spec("xlsxwriter"):
        engine = "xlsxwriter"
    else:
        raise RuntimeError("Saknar Excel-skrivare (installera 'openpyxl' eller 'xlsxwriter').")
    sheets = frames if isinstance(frames, dict) else {"Sheet1": frames}
    with pd.ExcelWriter(path, engine=engine) as writer:
        for sheet, d in sheets.items():
            dd = d if isinstance(d, pd.DataFrame) else pd.DataFrame(d)
            dd.to_excel(writer, sheet_name=str(sheet)[:31] or "Sheet1", index=False)
    return path


def logprintln(stream: TextIO, msg: str) -> None:
    stream.write(msg + "\n")
    stream.flush()


def make_log(log: LogFn) -> Callable[[str], None]:
    def _log(msg: str) -> None:
        if log:
            log(msg)
    return _log


def resolve_exponent_bound(explicit: Optional[int] = None) -> int:
    """Flagga > miljövariabel > standardvärde."""
    if explicit is not None:
        if explicit < 0:
            raise ValueError(f"Exponentgränsen måste vara ≥ 0 (fick {explicit})")
        return int(explicit)
    raw = os.environ.get(EXPONENT_BOUND_ENV, "").strip()
    if not raw:
        return DEFAULT_EXPONENT_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{EXPONENT_BOUND_ENV}={raw!r} är inget heltal") from None
    if value < 0:
        raise ValueError(f"{EXPONENT_BOUND_ENV} måste vara ≥ 0 (fick {value})")
    return value


def split_tokens(text: Optional[str]) -> list[str]:
    """'a,b , c' → ['a', 'b', 'c']; tom sträng → []."""
    if not text:
        return []
    return [t.strip() for t in str(text).split(",") if t.strip()]
