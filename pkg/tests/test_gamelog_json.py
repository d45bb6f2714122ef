import json

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from playrank.gamelog_json import SchemaError, parse_gamelog, render_gamelog
from playrank.model import (
    GameLog, GameMetadata, Pass, Roster, RosterPlayer, Score, Sport,
    validate_game,
)
from playrank.synth import generate_random_game

MINIMAL = {
    "schema_version": "1",
    "sport": "soccer",
    "teams": [
        {"name": "X", "players": [{"id": "x1"}]},
        {"name": "Y", "players": [{"id": "y1"}]},
    ],
    "events": [],
}


def _doc(**overrides):
    doc = json.loads(json.dumps(MINIMAL))
    doc.update(overrides)
    return doc


def _expect_error(doc, path_fragment):
    with pytest.raises(SchemaError) as info:
        parse_gamelog(json.dumps(doc))
    assert path_fragment in info.value.path
    return info.value


def test_minimal_document():
    log = parse_gamelog(json.dumps(MINIMAL))
    assert log.sport is Sport.SOCCER
    assert log.events == ()
    assert log.metadata == GameMetadata()
    assert [t.name for t in log.teams] == ["X", "Y"]
    assert log.teams[0].players[0] == RosterPlayer("x1", "x1", False)


def test_event_parsing_and_defaults():
    doc = _doc(sport="basketball", events=[
        {"type": "pass", "passer": "x1", "receiver": "x1"},
        {"type": "score", "scorer": "y1", "points": 3},
    ])
    log = parse_gamelog(json.dumps(doc))
    assert log.events == (Pass("x1", "x1"), Score("y1", 3))


def test_schema_clean_but_invalid_log_parses_then_fails_validation():
    doc = _doc(events=[{"type": "pass", "passer": "x1", "receiver": "y1"}])
    log = parse_gamelog(json.dumps(doc))  # no SchemaError: shape is fine
    reasons = [v.reason for v in validate_game(log)]
    assert reasons == ["pass endpoints on opposite teams"]


def test_invalid_json_reported_at_root():
    with pytest.raises(SchemaError) as info:
        parse_gamelog("{nope")
    assert info.value.path == "$"


def test_unknown_fields_rejected_with_paths():
    _expect_error(_doc(extra=1), "$.extra")
    doc = _doc()
    doc["teams"][0]["players"][0]["height"] = 201
    _expect_error(doc, "$.teams[0].players[0].height")
    doc = _doc(events=[{"type": "stoppage", "why": "rain"}])
    _expect_error(doc, "$.events[0].why")
    doc = _doc(metadata={"venue": "here"})
    _expect_error(doc, "$.metadata.venue")


def test_missing_required_fields():
    doc = _doc()
    del doc["sport"]
    err = _expect_error(doc, "$")
    assert "sport" in err.reason
    doc = _doc(events=[{"type": "pass", "passer": "x1"}])
    err = _expect_error(doc, "$.events[0]")
    assert "receiver" in err.reason


def test_type_errors():
    doc = _doc(events=[{"type": "score", "scorer": "x1", "points": "two"}])
    doc["sport"] = "basketball"
    _expect_error(doc, "$.events[0].points")
    doc = _doc(events=[{"type": "score", "scorer": "x1", "points": True}])
    doc["sport"] = "basketball"
    _expect_error(doc, "$.events[0].points")
    doc = _doc()
    doc["teams"][0]["players"][0]["starter"] = "yes"
    _expect_error(doc, "$.teams[0].players[0].starter")
    doc = _doc()
    doc["teams"][0]["players"][0]["id"] = ""
    _expect_error(doc, "$.teams[0].players[0].id")


def test_version_and_sport_checks():
    _expect_error(_doc(schema_version="2"), "$.schema_version")
    _expect_error(_doc(sport="cricket"), "$.sport")


def test_team_count_must_be_two():
    doc = _doc()
    doc["teams"] = doc["teams"][:1]
    _expect_error(doc, "$.teams")
    doc = _doc()
    doc["teams"][1]["players"] = []
    _expect_error(doc, "$.teams[1].players")


def test_unknown_event_type():
    doc = _doc(events=[{"type": "alley_oop", "player": "x1"}])
    err = _expect_error(doc, "$.events[0].type")
    assert "alley_oop" in err.reason


def test_basketball_score_requires_points():
    doc = _doc(sport="basketball",
               events=[{"type": "score", "scorer": "x1"}])
    err = _expect_error(doc, "$.events[0]")
    assert "points" in err.reason


def test_soccer_score_forbids_points():
    doc = _doc(events=[{"type": "score", "scorer": "x1", "points": 1}])
    _expect_error(doc, "$.events[0].points")
    log = parse_gamelog(json.dumps(_doc(events=[{"type": "score", "scorer": "x1"}])))
    assert log.events == (Score("x1", 1),)


def test_render_rejects_unencodable_soccer_score():
    log = GameLog(Sport.SOCCER, (
        Roster("X", (RosterPlayer("x1"),)), Roster("Y", (RosterPlayer("y1"),))),
        (Score("x1", 3),))
    with pytest.raises(ValueError):
        render_gamelog(log)


def test_demo_json_twin_round_trips(demo_json_path):
    text = demo_json_path.read_text(encoding="utf-8")
    log = parse_gamelog(text)
    assert parse_gamelog(render_gamelog(log)) == log
    assert log.metadata.final_score == "3-2"


def test_roster_order_survives_round_trip():
    players = tuple(RosterPlayer(f"p{i}") for i in (3, 1, 2, 9, 5))
    log = GameLog(Sport.HOCKEY, (Roster("X", players), Roster("Y", (RosterPlayer("q"),))), ())
    back = parse_gamelog(render_gamelog(log))
    assert [p.id for p in back.teams[0].players] == [f"p{i}" for i in (3, 1, 2, 9, 5)]


@settings(max_examples=50, deadline=None)
@given(
    sport=st.sampled_from(list(Sport)),
    n=st.integers(min_value=2, max_value=16),
    m=st.integers(min_value=0, max_value=60),
    seed=st.integers(min_value=0, max_value=2**32 - 1),
)
def test_random_games_round_trip(sport, n, m, seed):
    log = generate_random_game(sport, n, m, seed)
    assert parse_gamelog(render_gamelog(log)) == log


def test_render_includes_metadata_only_when_present():
    log = parse_gamelog(json.dumps(MINIMAL))
    assert "metadata" not in json.loads(render_gamelog(log))
    with_meta = GameLog(log.sport, log.teams, log.events,
                        GameMetadata(date="2024-01-31", final_score="2-2"))
    doc = json.loads(render_gamelog(with_meta))
    assert doc["metadata"] == {"date": "2024-01-31", "final_score": "2-2"}
    assert parse_gamelog(render_gamelog(with_meta)) == with_meta
