import json
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def s1_events_path() -> Path:
    return FIXTURES / "s1_events.csv"


@pytest.fixture(scope="session")
def s1_oracle() -> dict:
    return json.loads((FIXTURES / "s1_oracle.json").read_text())


@pytest.fixture(scope="session")
def s1_golden_report() -> str:
    return (FIXTURES / "s1_report.txt").read_text()
