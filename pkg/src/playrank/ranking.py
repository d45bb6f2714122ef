"""Possession digraph, its Markov chain, and the stationary rank vector.

Construction
============
Nodes are the n players (team 1 in roster order, then team 2) plus a goal
node at index n.  The initial digraph has one arc in each direction between
every player and the goal plus a goal self-loop, so any two nodes are joined
by a walk of length exactly two.  T^2 is therefore entrywise positive for
every game graph: the chain is primitive and its stationary vector unique.
Events only ever add arcs, which cannot destroy those walks.

The transition matrix is row-stochastic, T[i][j] = arcs(i->j) / outdeg(i),
held exactly as Fractions (every row sums to exactly 1) with a float64
projection for the solvers.  The stationary vector v solves T^t v = v with
sum(v) = 1 and is computed two independent ways: power iteration on T^t and
a dense linear solve (LU with partial pivoting).  Each serves as an oracle
for the other.

Orientation note: dumps of the column-stochastic form are the transpose of
the internal row-stochastic matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .model import GameLog, Roster
from .rules import GOAL, NodeRef, arcs_for_event

POWER_TOL = 1e-12
POWER_MAX_ITERS = 1_000_000


class RankingError(Exception):
    """Base class for graph/solver failures."""


class CorruptedGraphError(RankingError):
    """A digraph row has no outgoing arcs; initialization was bypassed."""


class NonConvergenceError(RankingError):
    """Power iteration hit max_iters with the step change above tolerance."""


class SingularSystemError(RankingError):
    """The direct linear system broke down (non-primitive or corrupt matrix)."""


@dataclass(frozen=True, eq=False)
class PlayDigraph:
    """Directed multigraph as a dense nonnegative integer arc-count matrix.

    ``counts[i, j]`` is the number of arcs i -> j.  ``nodes`` fixes the
    index order: players, then GOAL last.
    """

    nodes: tuple[NodeRef, ...]
    counts: np.ndarray

    @property
    def n_players(self) -> int:
        return len(self.nodes) - 1

    @cached_property
    def _index(self) -> dict[NodeRef, int]:
        return {node: i for i, node in enumerate(self.nodes)}

    def index_of(self, node: NodeRef) -> int:
        return self._index[node]


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    """Row-stochastic matrix of the chain induced by a PlayDigraph.

    ``rational`` rows sum to exactly 1; ``floats`` is the float64 projection
    used by the solvers.  Both are derived from the same integer counts.
    """

    nodes: tuple[NodeRef, ...]
    counts: np.ndarray
    row_sums: np.ndarray

    @cached_property
    def floats(self) -> np.ndarray:
        return self.counts / self.row_sums[:, None]

    @cached_property
    def rational(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(
            tuple(Fraction(int(c), int(s)) for c in row)
            for row, s in zip(self.counts, self.row_sums)
        )

    @property
    def size(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True, eq=False)
class RankVector:
    """Stationary distribution: player ranks plus the goal node's rank."""

    nodes: tuple[NodeRef, ...]
    values: np.ndarray
    residual: float
    method: str  # "power" or "direct"
    iterations: int = 0

    @property
    def player_ranks(self) -> np.ndarray:
        return self.values[:-1]

    @property
    def goal_rank(self) -> float:
        return float(self.values[-1])


class PrimitivityCheck(NamedTuple):
    is_primitive: bool
    witness: int | None  # smallest m with T^m entrywise positive


def init_digraph(rosters: tuple[Roster, Roster]) -> PlayDigraph:
    """Pre-game digraph: player<->goal arcs both ways plus the goal self-loop."""
    nodes: tuple[NodeRef, ...] = tuple(
        p.id for roster in rosters for p in roster.players
    ) + (GOAL,)
    n = len(nodes) - 1
    counts = np.zeros((n + 1, n + 1), dtype=np.int64)
    counts[:n, n] = 1  # player -> goal
    counts[n, :] = 1   # goal -> everyone, incl. itself
    return PlayDigraph(nodes, counts)


def apply_events(g: PlayDigraph, log: GameLog) -> PlayDigraph:
    """Fold every event's arcs into a copy of ``g``.

    Events only add arcs, so the result dominates ``g`` entrywise and the
    final counts do not depend on event order.
    """
    counts = g.counts.copy()
    idx = g._index
    for ev in log.events:
        for src, dst, k in arcs_for_event(log.sport, ev):
            counts[idx[src], idx[dst]] += k
    return PlayDigraph(g.nodes, counts)


def to_transition(g: PlayDigraph) -> TransitionMatrix:
    """Row-normalize arc counts into the chain's transition matrix."""
    row_sums = g.counts.sum(axis=1)
    if (row_sums == 0).any():
        bad = int(np.argmin(row_sums))
        raise CorruptedGraphError(
            f"node {g.nodes[bad]!r} has no outgoing arcs; graph was not initialized"
        )
    return TransitionMatrix(g.nodes, g.counts, row_sums)


def wielandt_bound(size: int) -> int:
    """Exponent bound for primitivity of a ``size`` x ``size`` matrix."""
    return size * size - 2 * size + 2


def check_primitive(t: TransitionMatrix) -> PrimitivityCheck:
    """Test whether some power of T is entrywise positive.

    Walks the boolean adjacency pattern through successive powers up to the
    Wielandt bound and reports the smallest all-positive exponent.  Any
    properly initialized game graph comes back (True, 2).
    """
    pattern = t.counts > 0
    power = pattern.copy()
    for m in range(1, wielandt_bound(t.size) + 1):
        if power.all():
            return PrimitivityCheck(True, m)
        power = (power.astype(np.int64) @ pattern.astype(np.int64)) > 0
    return PrimitivityCheck(False, None)


def stationary_power(
    t: TransitionMatrix,
    tol: float = POWER_TOL,
    max_iters: int = POWER_MAX_ITERS,
) -> RankVector:
    """Stationary vector by power iteration on T^t from the uniform vector.

    Iterates v <- T^t v, renormalizing to sum 1, until the L1 step change
    drops to ``tol``.  Raises NonConvergenceError instead of returning a
    best-effort vector.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_iters < 1:
        raise ValueError("max_iters must be >= 1")
    tt = t.floats.T.copy()
    k = t.size
    v = np.full(k, 1.0 / k)
    for it in range(1, max_iters + 1):
        nxt = tt @ v
        nxt /= nxt.sum()
        step = float(np.abs(nxt - v).sum())
        v = nxt
        if step <= tol:
            residual = float(np.abs(tt @ v - v).max())
            return RankVector(t.nodes, v, residual, "power", it)
    raise NonConvergenceError(
        f"power iteration did not reach tol={tol} in {max_iters} iterations"
    )


def stationary_direct(t: TransitionMatrix) -> RankVector:
    """Stationary vector from the linear system (T^t - I) v = 0, sum(v) = 1.

    The redundant last equation is replaced by the normalization row and the
    system solved densely by LU with partial pivoting.  Independent of the
    power route, so the two can cross-check each other.
    """
    k = t.size
    a = t.floats.T - np.eye(k)
    a[-1, :] = 1.0
    b = np.zeros(k)
    b[-1] = 1.0
    try:
        v = np.linalg.solve(a, b)
    except np.linalg.LinAlgError as exc:
        raise SingularSystemError(f"direct solve failed: {exc}") from exc
    if not np.isfinite(v).all() or v.min() < -1e-9:
        raise SingularSystemError(
            "direct solve produced an invalid stationary vector "
            "(matrix is likely not primitive)"
        )
    v = np.clip(v, 0.0, None)
    v /= v.sum()
    residual = float(np.abs(t.floats.T @ v - v).max())
    return RankVector(t.nodes, v, residual, "direct")
