# cli/app.py
from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Optional, Sequence, TextIO

from ..config.constants import (
    APP_TITLE,
    DEFAULT_CORPUS_MAX_VERTICES,
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    EXPONENT_BOUND_ENV,
    ORACLE_NAMES,
    PRESET_NAMES,
)
from ..io.graph_files import GraphParseError, read_graph_file
from ..io.report_export import export_corpus_excel, export_report_excel, export_validation_excel, write_json
from ..logic.complexes import Graph, GraphError, SimplexError, format_simplex
from ..logic.formula import OracleMismatchError, SingleSimplexError
from ..logic.mirrors import OracleTooLargeError
from ..logic.presets import PresetError, preset_graph
from ..logic.report import build_report, render_text
from ..logic.validation import CorpusBoundError, OracleCheck, run_corpus, validate_graph, validation_frame
from ..utils.common import logprintln, resolve_exponent_bound, split_tokens


class UsageError(ValueError):
    """Felaktig kombination av argument."""


def _groups_json(groups) -> dict:
    return {str(d): (g.to_json() if hasattr(g, "to_json") else str(g)) for d, g in sorted(groups.items())}


def _check_json(c: OracleCheck) -> dict:
    return {
        "oracle": c.oracle,
        "sigma": format_simplex(c.sigma),
        "passed": c.passed,
        "mismatched": list(c.mismatched),
        "left": _groups_json(c.left),
        "right": _groups_json(c.right),
        "detail": c.detail,
    }


class App:
    """Orkestrerar en körning: läs graf, räkna, skriv rapport, översätt fel till avslutningskoder."""

    def __init__(self, args: argparse.Namespace, stdout: TextIO, stderr: TextIO):
        self.args = args
        self.stdout = stdout
        self.stderr = stderr
        self.exponent_bound: Optional[int] = None

    def _log(self, msg: str) -> None:
        if self.args.verbose:
            logprintln(self.stderr, msg)

    def _log_fn(self):
        return self._log if self.args.verbose else None

    def _emit(self, text: str) -> None:
        self.stdout.write(text if text.endswith("\n") else text + "\n")
        self.stdout.flush()

    def _save_json(self, text: str) -> None:
        if self.args.out:
            self._log(f"JSON skriven: {write_json(text, self.args.out)}")

    # -------- indata --------
    def load_graph(self) -> Graph:
        path = getattr(self.args, "graph", None)
        preset = getattr(self.args, "preset", None)
        if bool(path) == bool(preset):
            raise UsageError("Ange antingen en graffil eller --preset NAMN (inte båda).")
        if preset:
            g = preset_graph(preset, self.args.n)
            self._log(f"Preset '{preset}' (n = {self.args.n}): {len(g.vertices)} hörn, {len(g.edges)} kanter.")
            return g
        g = read_graph_file(path)
        self._log(f"Graf inläst från {path}: {len(g.vertices)} hörn, {len(g.edges)} kanter.")
        return g

    # -------- kommandon --------
    def cmd_compute(self) -> int:
        g = self.load_graph()
        report = build_report(g, log=self._log_fn())
        text = report.to_json()
        self._emit(text if self.args.json else render_text(report, self.args.max_degree))
        self._save_json(text)
        if self.args.xlsx:
            self._log(f"Excel skriven: {export_report_excel(report, self.args.xlsx)}")
        return EXIT_OK

    def cmd_validate(self) -> int:
        g = self.load_graph()
        sigmas = None if self.args.sigma is None else [split_tokens(self.args.sigma)]
        checks = validate_graph(g, self.args.oracle, sigmas=sigmas, max_degree=self.args.max_degree,
                                exponent_bound=self.exponent_bound, log=self._log_fn())
        passed = sum(c.passed for c in checks)
        text = json.dumps({"oracle": self.args.oracle, "passed": passed, "total": len(checks),
                           "checks": [_check_json(c) for c in checks]}, ensure_ascii=False, indent=2)
        self._save_json(text)
        if self.args.json:
            self._emit(text)
        else:
            frame = validation_frame(checks)
            self._emit(frame.to_string(index=False))
            self._emit(f"{passed}/{len(checks)} kontroller OK ({self.args.oracle}).")
        if self.args.xlsx:
            self._log(f"Excel skriven: {export_validation_excel(validation_frame(checks), self.args.xlsx)}")
        return EXIT_OK if passed == len(checks) else EXIT_FAILURE

    def cmd_corpus(self) -> int:
        summary = run_corpus(self.args.max_vertices, all_sizes=self.args.all_sizes, dedup=self.args.dedup,
                             max_degree=self.args.max_degree, exponent_bound=self.exponent_bound,
                             log=self._log_fn())
        text = json.dumps({
            "graphs": summary.graphs,
            "duality_groups": summary.duality_groups,
            "poincare_groups": summary.poincare_groups,
            "acyclicity_histogram": summary.acyclicity_histogram,
            "failures": [dict(graph=label, **_check_json(c)) for label, c in summary.failures],
        }, ensure_ascii=False, indent=2)
        self._save_json(text)
        if self.args.json:
            self._emit(text)
        else:
            self._emit(summary.frame.to_string(index=False))
            self._emit("")
            self._emit(f"Grafer: {summary.graphs}")
            self._emit(f"Dualitetsgrupper: {summary.duality_groups}")
            self._emit(f"Poincarédualitetsgrupper: {summary.poincare_groups}")
            self._emit(summary.histogram_frame().to_string(index=False))
            self._emit(f"Orakelfel: {len(summary.failures)}")
            if summary.failures:
                self._emit(summary.failure_frame().to_string(index=False))
        if self.args.xlsx:
            self._log(f"Excel skriven: {export_corpus_excel(summary, self.args.xlsx)}")
        return EXIT_OK if summary.ok else EXIT_FAILURE

    def run(self) -> int:
        try:
            self.exponent_bound = resolve_exponent_bound(self.args.exponent_bound)
            handler = {"compute": self.cmd_compute, "validate": self.cmd_validate, "corpus": self.cmd_corpus}
            return handler[self.args.command]()
        except GraphParseError as e:
            self.stderr.write(f"Kunde inte läsa graffilen: {e}\n")
            return EXIT_USAGE
        except (OracleTooLargeError, CorpusBoundError, GraphError, SimplexError, PresetError,
                SingleSimplexError, UsageError, OSError) as e:
            self.stderr.write(f"Fel: {e}\n")
            return EXIT_USAGE
        except OracleMismatchError as e:
            self.stderr.write(f"Orakelkonflikt: {e}\n")
            return EXIT_FAILURE
        except ValueError as e:
            # exponentgräns från miljön eller okänt orakelnamn
            self.stderr.write(f"Fel: {e}\n")
            return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="maskinläsbar JSON på stdout")
    common.add_argument("--exponent-bound", type=int, default=None,
                        help=f"största n för 2^n-uppräkningar (annars {EXPONENT_BOUND_ENV} eller standard)")
    common.add_argument("--xlsx", metavar="PATH", default=None, help="skriv tabellerna till en Excel-arbetsbok")
    common.add_argument("--out", metavar="PATH", default=None, help="skriv JSON-utdata till en fil")
    common.add_argument("--max-degree", type=int, default=None,
                        help="högsta grad i jämförelser och i kohomologitabellen")
    common.add_argument("--verbose", action="store_true", help="logga förlopp på stderr")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("graph", nargs="?", default=None, help="graffil ('v NAMN' / 'e NAMN NAMN')")
    source.add_argument("--preset", choices=PRESET_NAMES, default=None)
    source.add_argument("--n", type=int, default=None, help="storlek för path/cycle/complete/discrete")

    parser = argparse.ArgumentParser(prog="kohomologi", description=APP_TITLE)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("compute", parents=[common, source], help="H^*(A_Γ, ℤA_Γ) med utslag och proveniens")

    p_val = sub.add_parser("validate", parents=[common, source], help="jämför oberoende beräkningar")
    p_val.add_argument("--oracle", choices=ORACLE_NAMES, default="lemma")
    p_val.add_argument("--sigma", default=None, metavar="v1,v2,...",
                       help="ett simplex σ (tom sträng = ∅); standard är alla simplex")

    p_corp = sub.add_parser("corpus", parents=[common], help="alla märkta grafer upp till en storlek")
    p_corp.add_argument("--max-vertices", type=int, default=DEFAULT_CORPUS_MAX_VERTICES)
    p_corp.add_argument("--all-sizes", action="store_true", help="grafer på 1..max hörn i stället för exakt max")
    p_corp.add_argument("--dedup", action="store_true", help="en graf per isomorfiklass")
    return parser


def main(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None,
         stderr: Optional[TextIO] = None) -> int:
    stdout, stderr = stdout or sys.stdout, stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    return App(args, stdout, stderr).run()
