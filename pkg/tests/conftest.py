import test_acceptance


def pytest_terminal_summary(terminalreporter):
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS.values(), key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
