import io

import pytest

from ngcd.cli import main


class Run:
    def __init__(self, code, out, err):
        self.code, self.out, self.err = code, out, err


@pytest.fixture
def cli(capsys):
    """Run the CLI in-process; returns exit code and captured output."""
    def run(*argv, stdin=""):
        out = io.StringIO()
        code = main(list(argv), stdin=io.StringIO(stdin), stdout=out)
        return Run(code, out.getvalue(), capsys.readouterr().err)
    return run


_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _CRITERIA[mark.args[0]] = (mark.args[1], rep.outcome, getattr(item, "_acceptance_note", ""))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, outcome, note = _CRITERIA[number]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {title}" + (f"  [{note}]" if note else ""))
