import pytest

_ACCEPTANCE = []


class AcceptanceLog:
    def record(self, number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}" + (f" -- {detail}" if detail else "")
        _ACCEPTANCE.append(line)
        print(line)
        return ok


@pytest.fixture(scope="session")
def acceptance():
    return AcceptanceLog()


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
