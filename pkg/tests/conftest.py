"""Shared pytest wiring: per-criterion summary lines for the acceptance gate."""

from __future__ import annotations


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion, from real outcomes."""
    lines: list[tuple[str, str]] = []
    for status, label in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py" not in nodeid:
                continue
            if getattr(rep, "when", "call") != "call" and status == "passed":
                continue
            name = nodeid.rsplit("::", 1)[-1]
            lines.append((name, label))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for name, label in sorted(set(lines)):
        terminalreporter.write_line(f"{label}  {name}")
