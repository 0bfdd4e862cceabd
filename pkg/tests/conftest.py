import json
from pathlib import Path

import pytest

from localworlds import worlds as wd

ROOT = Path(__file__).resolve().parents[1]
SCENARIOS = ROOT / "scenarios"
FIXTURES = Path(__file__).resolve().parent / "fixtures"

CORPUS = [
    "epr_zz", "epr_zx",
    "ghz_xxx", "ghz_yyx", "ghz_yxy", "ghz_xyy", "ghz_xxy",
    "ghz_xxx_pairwise", "ghz_random", "seq_remeasure", "two_sources",
]


def scenario_path(name: str) -> Path:
    return SCENARIOS / f"{name}.scn.json"


def load_corpus_scenario(name: str, **overrides) -> wd.Scenario:
    data = json.loads(scenario_path(name).read_text())
    data.update(overrides)
    return wd.scenario_from_dict(data)


@pytest.fixture(scope="session")
def corpus_runs():
    """Run every shipped scenario once and cache (scenario, trace, stats)."""
    runs = {}
    for name in CORPUS:
        scenario = load_corpus_scenario(name)
        trace, stats = wd.run_scenario(scenario)
        runs[name] = (scenario, trace, stats)
    return runs
