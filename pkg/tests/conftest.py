import pytest

from nstopo import NSFamily, parse_script

ALGEBRA_SCRIPT = """\
universe U = a,b,c
nset A1 over U = (0.4,0.4,0.3), (0.1,0.1,0.1), (0.2,0.2,0.2)
nset A2 over U = (0.1,0.2,0.9), (0.9,0.1,0.3), (0.5,0.3,0.4)
nset A3 over U = (0.7,0.3,0.1), (0.8,0.4,0.0), (0.1,0.1,0.9)
nset A4 over U = (0.2,0.2,0.8), (0.6,0.6,0.3), (0.5,0.4,0.5)
family L = { A1, A2 }
family L1 = { A1, A2, A3 }
family L2 = { A3, A4 }
"""

SUBBASIS_SCRIPT = """\
universe U = 1,2,3
nset B1 over U = (0.2,0.4,0.3), (0.6,0.1,0.1), (0.4,0.6,0.3)
nset B2 over U = (0.3,0.2,0.9), (0.6,0.5,0.3), (0.2,0.3,0.8)
family S = { B1, B2 }
family S1 = { B1 }
family S2 = { B2 }
family Empty = {} over U
"""


@pytest.fixture(scope="session")
def algebra():
    return parse_script(ALGEBRA_SCRIPT)


@pytest.fixture(scope="session")
def subbasis_doc():
    return parse_script(SUBBASIS_SCRIPT)


@pytest.fixture
def A1(algebra):
    return algebra.get("A1")


@pytest.fixture
def A2(algebra):
    return algebra.get("A2")


@pytest.fixture
def B1(subbasis_doc):
    return subbasis_doc.get("B1")


@pytest.fixture
def B2(subbasis_doc):
    return subbasis_doc.get("B2")


@pytest.fixture
def S(subbasis_doc) -> NSFamily:
    return subbasis_doc.family("S")


@pytest.fixture
def script_file(tmp_path):
    def write(text, name="session.nst"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


# acceptance criteria report

_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and report.when == "call":
        _CRITERIA.append((marker.args[0], marker.args[1], report.passed, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, title, passed, duration in sorted(_CRITERIA):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {number}: {title} ({duration:.2f}s)")
