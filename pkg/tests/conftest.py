from pathlib import Path

import pytest
from hypothesis import settings

from tricross import tcd

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

DATA = Path(__file__).resolve().parent.parent / "src" / "tricross" / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def bundled() -> dict:
    return {f.stem: tcd.load(f) for f in sorted(DATA.glob("*.tcd"))}


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, TITLES
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(TITLES):
        if n not in RESULTS:
            terminalreporter.write_line(f"ACCEPTANCE {n} NOT RUN  {TITLES[n]}")
            continue
        ok, notes = RESULTS[n]
        terminalreporter.write_line(f"ACCEPTANCE {n} {'PASS' if ok else 'FAIL'}  {TITLES[n]}" + (f"  [{notes}]" if notes else ""))
