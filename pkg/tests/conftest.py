"""Shared pytest wiring.

The acceptance tests record one [PASS]/[FAIL] line per criterion; echo
them after the run so they survive output capture.
"""

acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
