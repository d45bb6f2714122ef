"""Arc rules: what each event adds to the possession digraph.

The direction convention makes rank flow toward playmakers: a completed pass
credits the passer (arc receiver -> passer), losing the ball credits whoever
took it (arc loser -> winner), and scoring pulls arcs out of the goal node
(arc goal -> scorer, one per point in basketball).  Dead-ball events add
nothing.

Each sport's table below is one entry per event type, kept flat so the three
rule sets can be compared line by line.  Note the offside asymmetry: soccer
credits the player caught offside, hockey credits the passer.  Both are kept
exactly as specified for their sport rather than reconciled.
"""

from __future__ import annotations

from typing import Callable, NamedTuple, Union

from .model import (
    EVENT_NAMES, Event, Sport,
    Pass, Dispossess, Intercept, Touch, UnforcedTurnover, Stoppage,
    ContestedMiss, Score, UncontestedMissRebounded, FoulWithFreeThrows,
    FoulNoFreeThrows, UncontestedMissDead, Save, FoulDead, FoulLeadingToGoal,
    Offside, PenaltyDrawnNoPPG, PenaltyDrawnPPG, Icing,
)


class _Goal:
    """Singleton marker for the goal node."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "GOAL"


GOAL = _Goal()

NodeRef = Union[str, _Goal]


class Arc(NamedTuple):
    src: NodeRef
    dst: NodeRef
    count: int = 1


ArcDelta = tuple[Arc, ...]

_NONE: ArcDelta = ()


def _none(_ev) -> ArcDelta:
    return _NONE


# Rules shared verbatim by all three sports.
_COMMON: dict[type, Callable[..., ArcDelta]] = {
    Pass: lambda e: (Arc(e.receiver, e.passer),),          # credit the passer
    Dispossess: lambda e: (Arc(e.loser, e.winner),),       # credit the taker
    Intercept: lambda e: (Arc(e.passer, e.winner),),       # like a dispossession
    ContestedMiss: lambda e: (Arc(e.shooter, e.defender),),  # credit the defender
    Touch: _none,
    UnforcedTurnover: _none,
    Stoppage: _none,
}

RULES: dict[Sport, dict[type, Callable[..., ArcDelta]]] = {
    Sport.BASKETBALL: {
        **_COMMON,
        Score: lambda e: (Arc(GOAL, e.scorer, e.points),),   # one arc per point
        UncontestedMissRebounded: lambda e: (Arc(e.shooter, e.rebounder),),
        FoulWithFreeThrows: lambda e: (Arc(GOAL, e.fouled, e.made),),  # one per made FT
        FoulNoFreeThrows: lambda e: (Arc(e.fouled, e.fouler),),  # smart foul
    },
    Sport.SOCCER: {
        **_COMMON,
        Score: lambda e: (Arc(GOAL, e.scorer),),
        UncontestedMissDead: _none,
        Save: lambda e: (Arc(e.shooter, e.keeper),),
        FoulDead: _none,
        FoulLeadingToGoal: lambda e: (Arc(e.fouler, e.fouled),),  # smart draw
        Offside: lambda e: (Arc(e.passer, e.offside_player),),   # offside player credited
    },
    Sport.HOCKEY: {
        **_COMMON,
        Score: lambda e: (Arc(GOAL, e.scorer),),
        UncontestedMissDead: _none,
        Save: lambda e: (Arc(e.shooter, e.keeper),),
        PenaltyDrawnNoPPG: lambda e: (Arc(e.drawer, e.penalized),),  # smart penalty
        PenaltyDrawnPPG: lambda e: (Arc(e.penalized, e.drawer),),    # smart draw
        Offside: lambda e: (Arc(e.offside_player, e.passer),),       # passer credited
        Icing: lambda e: (Arc(e.icer, e.toucher),),  # turnover to the toucher
    },
}


def arcs_for_event(sport: Sport, event: Event) -> ArcDelta:
    """Arcs the event adds to the digraph; empty tuple for dead-ball events.

    Raises ValueError for an event type that is not legal in ``sport``
    (defensive; validated logs never hit this).
    """
    rule = RULES[sport].get(type(event))
    if rule is None:
        name = EVENT_NAMES.get(type(event), type(event).__name__)
        raise ValueError(f"{name} is not a {sport.value} event")
    return rule(event)
