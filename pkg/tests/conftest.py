from pathlib import Path

import pytest

from playrank import analyze_game, parse_playscript

REPO_ROOT = Path(__file__).resolve().parent.parent
SAMPLE_DIR = REPO_ROOT / "sample_games"


@pytest.fixture(scope="session")
def demo_playscript_path() -> Path:
    return SAMPLE_DIR / "three_on_three.play"


@pytest.fixture(scope="session")
def demo_json_path() -> Path:
    return SAMPLE_DIR / "three_on_three.json"


@pytest.fixture(scope="session")
def demo_log(demo_playscript_path):
    return parse_playscript(demo_playscript_path.read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def demo_analysis(demo_log):
    return analyze_game(demo_log, solver="both")
