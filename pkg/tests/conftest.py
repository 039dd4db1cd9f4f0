"""Shared test plumbing: the acceptance gate verdict block.

test_acceptance.py records one line per criterion here; printing happens
in the terminal summary so the lines survive output capture and land in
tee'd logs.
"""

# criterion number -> "[criterion N] PASS/FAIL: ..." line
GATE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not GATE_LINES:
        return
    terminalreporter.section("acceptance gate")
    for num in sorted(GATE_LINES):
        terminalreporter.write_line(GATE_LINES[num])
