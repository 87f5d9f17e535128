import pytest


@pytest.fixture
def acceptance_log(request):
    def log(criterion: str, ok: bool, detail: str = "") -> None:
        request.config._acceptance_lines.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}  {detail}".rstrip())

    return log


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config._acceptance_lines
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
