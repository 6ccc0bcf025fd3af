from hypothesis import settings

# brute-force oracles make individual examples slow; timing is not under test
settings.register_profile("default", deadline=None)
settings.load_profile("default")


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key, label in report.user_properties:
        if key == "criterion":
            _acceptance.append((label, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in sorted(_acceptance):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")
