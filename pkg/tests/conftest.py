"""Shared test plumbing: collects acceptance-criterion outcomes and prints
one PASS/FAIL line per criterion at the end of the run."""

ACCEPTANCE_RESULTS = []


def record_criterion(number: int, description: str, ok: bool,
                     elapsed: float) -> None:
    ACCEPTANCE_RESULTS.append((number, description, ok, elapsed))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.ensure_newline()
    terminalreporter.section("acceptance criteria")
    for number, description, ok, elapsed in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            "CRITERION %2d %s (%6.2fs) %s"
            % (number, status, elapsed, description))
