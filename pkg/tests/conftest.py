import sys

import hypothesis

# eigensolves and enumeration make per-example deadlines noisy; examples stay
# small instead
hypothesis.settings.register_profile(
    "suite", deadline=None, max_examples=60, derandomize=True
)
hypothesis.settings.load_profile("suite")

sys.path.insert(0, __file__.rsplit("/", 1)[0])

_acceptance_lines: dict[int, str] = {}


def record_criterion(num: int, ok: bool, label: str) -> None:
    _acceptance_lines[num] = f"criterion {num:>2}: {'PASS' if ok else 'FAIL'} — {label}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_acceptance_lines):
        terminalreporter.write_line(_acceptance_lines[num])
