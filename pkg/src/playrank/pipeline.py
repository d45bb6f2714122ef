"""End-to-end helpers: text -> log -> digraph -> stationary vector -> report."""

from __future__ import annotations

from dataclasses import dataclass

from .gamelog_json import parse_gamelog
from .metrics import IpmReport, TeamAggregates, aggregates, compute_ipm
from .model import GameLog, Violation, validate_game
from .playscript import parse_playscript
from .ranking import (
    POWER_MAX_ITERS, POWER_TOL, PlayDigraph, RankVector, RankingError,
    TransitionMatrix, apply_events, check_primitive, init_digraph,
    stationary_direct, stationary_power, to_transition,
)

SOLVERS = ("power", "direct", "both")
SOLVER_AGREEMENT_TOL = 1e-9


class SolverDisagreement(RankingError):
    """Power and direct solutions differ beyond the cross-check tolerance."""


class ValidationFailed(Exception):
    """Raised by analyze_game when the log has violations."""

    def __init__(self, violations: list[Violation]):
        super().__init__(f"{len(violations)} violation(s)")
        self.violations = violations


@dataclass(frozen=True, eq=False)
class GameAnalysis:
    log: GameLog
    digraph: PlayDigraph
    transition: TransitionMatrix
    rank: RankVector
    report: IpmReport
    teams: TeamAggregates
    solver_gap: float | None  # max |power - direct|, only for solver="both"


def parse_game_text(text: str) -> GameLog:
    """Auto-detect the input format: JSON documents start with '{'."""
    if text.lstrip().startswith("{"):
        return parse_gamelog(text)
    return parse_playscript(text)


def build_digraph(log: GameLog) -> PlayDigraph:
    return apply_events(init_digraph(log.teams), log)


def solve_stationary(
    t: TransitionMatrix,
    solver: str = "power",
    tol: float = POWER_TOL,
    max_iters: int = POWER_MAX_ITERS,
) -> tuple[RankVector, float | None]:
    """Run the requested solver(s); "both" cross-checks and reports the gap."""
    if solver == "power":
        return stationary_power(t, tol, max_iters), None
    if solver == "direct":
        return stationary_direct(t), None
    if solver == "both":
        power = stationary_power(t, tol, max_iters)
        direct = stationary_direct(t)
        gap = float(abs(power.values - direct.values).max())
        if gap > SOLVER_AGREEMENT_TOL:
            raise SolverDisagreement(
                f"solvers disagree by {gap:.3e} (> {SOLVER_AGREEMENT_TOL})")
        return power, gap
    raise ValueError(f"unknown solver {solver!r} (use one of {SOLVERS})")


def analyze_game(
    log: GameLog,
    solver: str = "power",
    tol: float = POWER_TOL,
    max_iters: int = POWER_MAX_ITERS,
) -> GameAnalysis:
    """Validate and rank one game.

    Raises ValidationFailed when the log is broken and RankingError family
    exceptions on numerical trouble (never returns a best-effort result).
    """
    violations = validate_game(log)
    if violations:
        raise ValidationFailed(violations)
    digraph = build_digraph(log)
    transition = to_transition(digraph)
    primitivity = check_primitive(transition)
    if not primitivity.is_primitive:
        raise RankingError("transition matrix is not primitive")
    rank, gap = solve_stationary(transition, solver, tol, max_iters)
    report = compute_ipm(rank, log.teams)
    return GameAnalysis(
        log=log, digraph=digraph, transition=transition, rank=rank,
        report=report, teams=aggregates(report, log.metadata), solver_gap=gap,
    )
