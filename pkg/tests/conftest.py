from hypothesis import settings

settings.register_profile("ccm", deadline=None, max_examples=40, derandomize=True)
settings.load_profile("ccm")

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
