import pytest

from squarewar.solver import SolverConfig, solve_all
from squarewar.verify import verify_script_all

# (criterion, passed, detail) collected by test_acceptance and printed as a
# one-line-per-criterion summary at the end of the run
ACCEPTANCE: list[tuple[str, bool, str]] = []


def record(name: str, ok: bool, detail: str) -> None:
    ACCEPTANCE.append((name, ok, detail))


@pytest.fixture(scope="session")
def paper_run():
    """One paper-mode solve shared by the whole session."""
    return solve_all(SolverConfig())


@pytest.fixture(scope="session")
def paper_report(paper_run):
    return paper_run[0]


@pytest.fixture(scope="session")
def paper_book(paper_run):
    return paper_run[1]


@pytest.fixture(scope="session")
def extended_run():
    return solve_all(SolverConfig(mode="extended"))


@pytest.fixture(scope="session")
def script_report():
    """The exhaustive scripted-line check, shared by the whole session."""
    return verify_script_all()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        flag = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{flag}] {name}: {detail}")
