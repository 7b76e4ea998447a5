import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from acceptance_log import LOG  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if not LOG:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(LOG):
        ok, detail = LOG[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
