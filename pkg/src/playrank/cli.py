"""playrank command line: rank, matrix, validate, batch, compare, synth.

Exit codes: 0 success, 1 validation failure, 2 parse/read failure,
3 numerical failure, 64 usage error.  Results go to stdout (or --output),
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from pathlib import Path

from .gamelog_json import SchemaError, parse_gamelog, render_gamelog
from .metrics import DegenerateGoalRankError, compare_games
from .model import GameLog, Sport, validate_game
from .pipeline import (
    SOLVERS, GameAnalysis, ValidationFailed, analyze_game, build_digraph,
    parse_game_text,
)
from .playscript import PlayscriptError, parse_playscript
from .ranking import POWER_MAX_ITERS, POWER_TOL, RankingError
from .render import MATRIX_FORMS, render_comparison, render_matrix, render_report
from .synth import generate_random_game

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_PARSE = 2
EXIT_NUMERIC = 3
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit code 2 on bad usage; we reserve 2 for
    parse failures, so usage problems exit 64 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _err(message: str) -> None:
    print(message, file=sys.stderr)


def _exit_code_for(exc: Exception) -> int:
    if isinstance(exc, ValidationFailed):
        return EXIT_VALIDATION
    if isinstance(exc, (PlayscriptError, SchemaError, OSError)):
        return EXIT_PARSE
    if isinstance(exc, (RankingError, DegenerateGoalRankError)):
        return EXIT_NUMERIC
    raise exc


def _report_exception(path: Path | None, exc: Exception) -> None:
    prefix = f"{path}: " if path is not None else ""
    if isinstance(exc, ValidationFailed):
        for v in exc.violations:
            _err(f"{prefix}{v}")
    else:
        _err(f"{prefix}{exc}")


def _load_log(path: Path, input_format: str) -> GameLog:
    text = path.read_text(encoding="utf-8")
    if input_format == "json":
        return parse_gamelog(text)
    if input_format == "playscript":
        return parse_playscript(text)
    return parse_game_text(text)


def _analyze_file(path: Path, args) -> GameAnalysis:
    log = _load_log(path, args.input_format)
    return analyze_game(log, solver=args.solver, tol=args.tol,
                        max_iters=args.max_iters)


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        _atomic_write(Path(output), text)


def _atomic_write(target: Path, text: str) -> None:
    tmp = target.with_name(f".{target.name}.tmp{os.getpid()}")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, target)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _cmd_rank(args) -> int:
    analysis = _analyze_file(Path(args.game), args)
    _emit(render_report(analysis.report, analysis.teams, args.format,
                        solver_gap=analysis.solver_gap), args.output)
    return EXIT_OK


def _cmd_matrix(args) -> int:
    log = _load_log(Path(args.game), args.input_format)
    violations = validate_game(log)
    if violations:
        raise ValidationFailed(violations)
    _emit(render_matrix(build_digraph(log), args.form), args.output)
    return EXIT_OK


def _cmd_validate(args) -> int:
    log = _load_log(Path(args.game), args.input_format)
    violations = validate_game(log)
    for v in violations:
        print(v)
    if violations:
        return EXIT_VALIDATION
    print("ok")
    return EXIT_OK


_REPORT_EXT = {"table": "txt", "csv": "csv", "json": "json"}


def _cmd_batch(args) -> int:
    out_dir = Path(args.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    summary = io.StringIO()
    writer = csv.writer(summary, lineterminator="\n")
    writer.writerow(["game", "wt_aipm", "lt_aipm",
                     "wt_starter_aipm", "lt_starter_aipm"])
    worst = EXIT_OK
    used_stems: set[str] = set()
    for name in args.games:
        path = Path(name)
        stem = path.stem
        while stem in used_stems:  # disambiguate duplicate stems
            stem += "+"
        used_stems.add(stem)
        try:
            analysis = _analyze_file(path, args)
        except Exception as exc:  # isolate per-file failures
            worst = max(worst, _exit_code_for(exc))
            _report_exception(path, exc)
            continue
        report_path = out_dir / f"{stem}.report.{_REPORT_EXT[args.format]}"
        _atomic_write(report_path, render_report(
            analysis.report, analysis.teams, args.format,
            solver_gap=analysis.solver_gap))

        teams = analysis.teams.teams
        winner = next((t for t in teams if t.label == "winner"), None)
        loser = next((t for t in teams if t.label == "loser"), None)

        def _fmt(value):
            return "" if value is None else f"{value:.2f}"

        writer.writerow([
            stem,
            _fmt(winner.aipm if winner else None),
            _fmt(loser.aipm if loser else None),
            _fmt(winner.starter_aipm if winner else None),
            _fmt(loser.starter_aipm if loser else None),
        ])
    _atomic_write(out_dir / "summary.csv", summary.getvalue())
    return worst


def _cmd_compare(args) -> int:
    reports = {}
    for name in args.games:
        path = Path(name)
        key = path.stem
        while key in reports:  # disambiguate duplicate stems
            key += "+"
        reports[key] = _analyze_file(path, args).report
    _emit(render_comparison(compare_games(reports), args.format), args.output)
    return EXIT_OK


def _cmd_synth(args) -> int:
    log = generate_random_game(Sport(args.sport), args.players, args.events,
                               args.seed)
    _emit(render_gamelog(log), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser wiring
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="playrank",
                     description="Possession-digraph PageRank player ratings.")
    sub = parser.add_subparsers(dest="command", required=True)

    io_opts = argparse.ArgumentParser(add_help=False)
    io_opts.add_argument("--input-format", choices=("auto", "json", "playscript"),
                         default="auto",
                         help="input format (default: auto-detect, '{' means JSON)")
    io_opts.add_argument("-o", "--output", default=None,
                         help="write result to this file instead of stdout")

    solver_opts = argparse.ArgumentParser(add_help=False)
    solver_opts.add_argument("--solver", choices=SOLVERS, default="power")
    solver_opts.add_argument("--tol", type=float, default=POWER_TOL,
                             help="power-iteration L1 step tolerance")
    solver_opts.add_argument("--max-iters", type=int, default=POWER_MAX_ITERS)

    p = sub.add_parser("rank", parents=[io_opts, solver_opts],
                       help="rank one game's players by IPM")
    p.add_argument("game")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("matrix", parents=[io_opts],
                       help="dump a game's digraph or transition matrix")
    p.add_argument("game")
    p.add_argument("--form", choices=MATRIX_FORMS, default="adjacency")
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("validate", parents=[io_opts],
                       help="check a game log against every invariant")
    p.add_argument("game")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("batch", parents=[io_opts, solver_opts],
                       help="rank many games; write reports plus a summary CSV")
    p.add_argument("games", nargs="+")
    p.add_argument("--output-dir", required=True)
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.set_defaults(func=_cmd_batch)

    p = sub.add_parser("compare", parents=[io_opts, solver_opts],
                       help="compare player IPMs across games")
    p.add_argument("games", nargs="+")
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("synth", parents=[io_opts],
                       help="generate a random-but-valid game log (JSON)")
    p.add_argument("--sport", choices=[s.value for s in Sport], required=True)
    p.add_argument("--players", type=int, required=True)
    p.add_argument("--events", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_synth)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if args.command == "compare" and len(args.games) < 2:
        _err("playrank compare: error: need at least two games")
        return EXIT_USAGE
    if args.command == "synth":
        if args.players < 2:
            _err("playrank synth: error: --players must be >= 2")
            return EXIT_USAGE
        if args.events < 0:
            _err("playrank synth: error: --events must be >= 0")
            return EXIT_USAGE
    if getattr(args, "tol", 1.0) <= 0:
        _err(f"{parser.prog} {args.command}: error: --tol must be positive")
        return EXIT_USAGE
    if getattr(args, "max_iters", 1) < 1:
        _err(f"{parser.prog} {args.command}: error: --max-iters must be >= 1")
        return EXIT_USAGE

    try:
        return args.func(args)
    except Exception as exc:
        code = _exit_code_for(exc)  # re-raises anything unexpected
        _report_exception(None, exc)
        return code


if __name__ == "__main__":
    sys.exit(main())
