"""Integrated playmaking metric (IPM), team aggregates and sanity bounds.

The raw stationary vector is rescaled so players can be compared across
games: with n players, player rank r_i and goal rank r_g,

    IPM_i = 50 n r_i / sum_j r_j = 50 n r_i / (1 - r_g)

which removes the goal node's share and pins the per-game player average at
exactly 50 (so the IPM sum is 50 n and the lowest IPM in a game can never
exceed 50).  Any positive rescaling of the stationary vector leaves IPMs
unchanged.

Two structural bounds follow from the fixed average and are exposed as
checks:

* starter gap: with k starters summing to R, some starter/bench pair has a
  signed IPM difference IPM_starter - IPM_bench of at most
  n (R - 50 k) / (k (n - k)).  The signed form is what the averaging
  argument actually yields (the bound is negative when starters
  underperform, R < 50 k), and it holds for any designated subset.
* pairwise gap: with n >= 3 players, some pair of players sits within
  25 n / (n - 2) of each other.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .model import GameMetadata, Roster
from .ranking import RankVector

_SCORE_RE = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")


class DegenerateGoalRankError(Exception):
    """Goal rank is 1 to machine precision; no player rank mass to rescale."""


@dataclass(frozen=True)
class PlayerIpm:
    player: str
    name: str
    team: str
    starter: bool
    rank: float
    ipm: float


@dataclass(frozen=True)
class IpmReport:
    """Per-player IPMs for one game.

    ``players`` keeps roster order (team 1 then team 2); ``standings`` is
    sorted by IPM descending with ties broken by team order then roster
    order.  IPMs are stored at full precision; rounding to hundredths is a
    rendering concern.
    """

    n: int
    goal_rank: float
    residual: float
    method: str
    players: tuple[PlayerIpm, ...]
    standings: tuple[PlayerIpm, ...]


@dataclass(frozen=True)
class TeamAggregate:
    team: str
    size: int
    aipm: float
    starter_aipm: float | None  # None when the roster marks no starters
    label: str | None           # "winner" / "loser" when metadata settles it


@dataclass(frozen=True)
class TeamAggregates:
    teams: tuple[TeamAggregate, TeamAggregate]


@dataclass(frozen=True)
class PropositionCheck:
    applicable: bool
    bound: float | None = None
    observed: float | None = None
    margin: float | None = None  # bound - observed; nonnegative when it holds

    @property
    def holds(self) -> bool | None:
        if not self.applicable:
            return None
        return self.margin >= -1e-9


@dataclass(frozen=True)
class BoundsCheck:
    starter_gap: PropositionCheck   # needs 1 <= k <= n-1 designated starters
    pairwise_gap: PropositionCheck  # needs n >= 3


@dataclass(frozen=True)
class CrossGameRow:
    player: str
    ipms: dict[str, float | None]  # game id -> IPM, None where absent
    mean: float


@dataclass(frozen=True)
class CrossGameTable:
    game_ids: tuple[str, ...]
    rows: tuple[CrossGameRow, ...]


def compute_ipm(rank: RankVector, rosters: tuple[Roster, Roster]) -> IpmReport:
    """Rescale a stationary vector into the per-player IPM report."""
    goal_rank = rank.goal_rank
    if goal_rank >= 1.0 - 1e-15:
        raise DegenerateGoalRankError(
            f"goal rank {goal_rank} leaves no player mass to rescale"
        )
    player_ranks = rank.player_ranks
    n = len(player_ranks)
    total = float(player_ranks.sum())  # equals 1 - goal_rank

    players: list[PlayerIpm] = []
    pos = 0
    for roster in rosters:
        for p in roster.players:
            r = float(player_ranks[pos])
            players.append(PlayerIpm(
                player=p.id, name=p.name, team=roster.name, starter=p.starter,
                rank=r, ipm=50.0 * n * r / total,
            ))
            pos += 1
    if pos != n:
        raise ValueError(f"rank vector has {n} player entries, rosters have {pos}")

    order = sorted(range(n), key=lambda i: (-players[i].ipm, i))
    standings = tuple(players[i] for i in order)
    return IpmReport(
        n=n, goal_rank=goal_rank, residual=rank.residual, method=rank.method,
        players=tuple(players), standings=standings,
    )


def _winner_index(metadata: GameMetadata | None) -> int | None:
    """0/1 for the winning team per the final_score string, None otherwise.

    The score is taken from metadata alone, never inferred from events:
    hand transcriptions can be incomplete and only basketball events carry
    point values at all.
    """
    if metadata is None or not metadata.final_score:
        return None
    m = _SCORE_RE.match(metadata.final_score)
    if not m:
        return None
    a, b = int(m.group(1)), int(m.group(2))
    if a == b:
        return None
    return 0 if a > b else 1


def aggregates(report: IpmReport, metadata: GameMetadata | None = None) -> TeamAggregates:
    """Per-team average IPMs (all players and designated starters)."""
    winner = _winner_index(metadata)
    by_team: dict[str, list[PlayerIpm]] = {}
    team_names: list[str] = []
    for p in report.players:
        if p.team not in by_team:
            by_team[p.team] = []
            team_names.append(p.team)
        by_team[p.team].append(p)

    teams = []
    for t, name in enumerate(team_names):
        rows = by_team[name]
        starters = [p.ipm for p in rows if p.starter]
        label = None
        if winner is not None:
            label = "winner" if winner == t else "loser"
        teams.append(TeamAggregate(
            team=name,
            size=len(rows),
            aipm=sum(p.ipm for p in rows) / len(rows),
            starter_aipm=sum(starters) / len(starters) if starters else None,
            label=label,
        ))
    return TeamAggregates(teams=(teams[0], teams[1]))


def check_proposition_bounds(
    report: IpmReport,
    starters: Iterable[str] | None = None,
) -> BoundsCheck:
    """Evaluate the starter-gap and pairwise-gap bounds on a report.

    ``starters`` overrides the roster's starter flags; the starter-gap bound
    is valid for any subset of 1 <= k <= n-1 players.  A check whose
    precondition fails comes back with applicable=False rather than raising,
    since the two bounds have independent preconditions.
    """
    ipm_by_id = {p.player: p.ipm for p in report.players}
    if starters is None:
        starter_set = {p.player for p in report.players if p.starter}
    else:
        starter_set = set(starters)
        unknown = starter_set - ipm_by_id.keys()
        if unknown:
            raise KeyError(f"unknown starter ids: {sorted(unknown)}")
    n = report.n
    k = len(starter_set)

    if 1 <= k <= n - 1:
        starter_ipms = [p.ipm for p in report.players if p.player in starter_set]
        bench_ipms = [p.ipm for p in report.players if p.player not in starter_set]
        r_total = sum(starter_ipms)
        bound = n * (r_total - 50.0 * k) / (k * (n - k))
        observed = min(starter_ipms) - max(bench_ipms)  # min over pairs of s - b
        starter_gap = PropositionCheck(True, bound, observed, bound - observed)
    else:
        starter_gap = PropositionCheck(False)

    if n >= 3:
        bound = 25.0 * n / (n - 2)
        ipms = sorted(p.ipm for p in report.players)
        observed = min(b - a for a, b in zip(ipms, ipms[1:]))
        pairwise_gap = PropositionCheck(True, bound, observed, bound - observed)
    else:
        pairwise_gap = PropositionCheck(False)

    return BoundsCheck(starter_gap=starter_gap, pairwise_gap=pairwise_gap)


def compare_games(reports: Mapping[str, IpmReport]) -> CrossGameTable:
    """Join reports on player id for cross-game comparison.

    Players missing from a game keep a None cell there (never zero); the
    mean is over the games they actually appear in.  Rows are sorted by mean
    IPM descending.
    """
    if not reports:
        raise ValueError("compare_games needs at least one report")
    game_ids = tuple(reports.keys())
    player_order: list[str] = []
    seen: set[str] = set()
    for report in reports.values():
        for p in report.standings:
            if p.player not in seen:
                seen.add(p.player)
                player_order.append(p.player)

    rows = []
    for pid in player_order:
        ipms: dict[str, float | None] = {}
        for gid, report in reports.items():
            hit = next((p for p in report.players if p.player == pid), None)
            ipms[gid] = hit.ipm if hit is not None else None
        present = [v for v in ipms.values() if v is not None]
        rows.append(CrossGameRow(pid, ipms, sum(present) / len(present)))
    rows.sort(key=lambda r: (-r.mean, r.player))
    return CrossGameTable(game_ids=game_ids, rows=tuple(rows))
