import _acclog


def pytest_terminal_summary(terminalreporter):
    if _acclog.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acclog.LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
