"""Text output: standings tables, CSV/JSON reports and matrix dumps.

IPMs are rounded to hundredths only here; CSV and JSON carry the full
precision values alongside.  Matrix dumps print one row per line with a
leading ``# nodes:`` comment, integers for adjacency counts and exact
``p/q`` fractions for the stochastic forms (the column-stochastic form is
the transpose of the row-stochastic one).
"""

from __future__ import annotations

import csv
import io
import json

from .metrics import CrossGameTable, IpmReport, TeamAggregates
from .ranking import PlayDigraph, to_transition
from .rules import GOAL

REPORT_FORMATS = ("table", "csv", "json")
MATRIX_FORMS = ("adjacency", "row-stochastic", "column-stochastic")


def _team_lines(aggs: TeamAggregates) -> list[str]:
    lines = []
    for t in aggs.teams:
        parts = [f"{t.team}: AIPM {t.aipm:.2f}"]
        if t.starter_aipm is not None:
            parts.append(f"starter AIPM {t.starter_aipm:.2f}")
        else:
            parts.append("starter AIPM n/a")
        line = ", ".join(parts)
        if t.label:
            line += f" ({t.label})"
        lines.append(line)
    return lines


def render_report(report: IpmReport, aggs: TeamAggregates | None,
                  fmt: str = "table", solver_gap: float | None = None) -> str:
    if fmt == "table":
        lines = ["Player | Team | IPM"]
        lines += [f"{p.player} | {p.team} | {p.ipm:.2f}" for p in report.standings]
        if aggs is not None:
            lines.append("")
            lines += _team_lines(aggs)
        if solver_gap is not None:
            lines.append(f"solver cross-check: max discrepancy {solver_gap:.3e}")
        return "\n".join(lines) + "\n"

    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["player", "team", "ipm", "ipm_full", "rank"])
        for p in report.standings:
            w.writerow([p.player, p.team, f"{p.ipm:.2f}", repr(p.ipm), repr(p.rank)])
        return buf.getvalue()

    if fmt == "json":
        doc = {
            "n": report.n,
            "goal_rank": report.goal_rank,
            "residual": report.residual,
            "method": report.method,
            "players": [
                {
                    "player": p.player,
                    "name": p.name,
                    "team": p.team,
                    "starter": p.starter,
                    "rank": p.rank,
                    "ipm": p.ipm,
                }
                for p in report.standings
            ],
        }
        if solver_gap is not None:
            doc["solver_gap"] = solver_gap
        if aggs is not None:
            doc["teams"] = [
                {
                    "team": t.team,
                    "size": t.size,
                    "aipm": t.aipm,
                    "starter_aipm": t.starter_aipm,
                    "label": t.label,
                }
                for t in aggs.teams
            ]
        return json.dumps(doc, indent=2) + "\n"

    raise ValueError(f"unknown report format {fmt!r} (use one of {REPORT_FORMATS})")


def _node_label(node) -> str:
    return "GOAL" if node is GOAL else str(node)


def render_matrix(graph: PlayDigraph, form: str = "adjacency") -> str:
    header = "# nodes: " + " ".join(_node_label(n) for n in graph.nodes)
    if form == "adjacency":
        rows = [" ".join(str(int(c)) for c in row) for row in graph.counts]
    elif form in ("row-stochastic", "column-stochastic"):
        rational = to_transition(graph).rational
        if form == "column-stochastic":
            rational = tuple(zip(*rational))
        rows = [" ".join(str(c) for c in row) for row in rational]
    else:
        raise ValueError(f"unknown matrix form {form!r} (use one of {MATRIX_FORMS})")
    return header + "\n" + "\n".join(rows) + "\n"


def render_comparison(table: CrossGameTable, fmt: str = "table") -> str:
    header = ["Player", *table.game_ids, "Mean"]

    def cells(row):
        out = [row.player]
        for gid in table.game_ids:
            v = row.ipms[gid]
            out.append("" if v is None else f"{v:.2f}")
        out.append(f"{row.mean:.2f}")
        return out

    if fmt == "table":
        lines = [" | ".join(header)]
        lines += [" | ".join(cells(r)) for r in table.rows]
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([h.lower() for h in header])
        for r in table.rows:
            w.writerow(cells(r))
        return buf.getvalue()
    raise ValueError(f"unknown comparison format {fmt!r} (use 'table' or 'csv')")
