import pytest

from cartanqt.cartan import all_types, build

ALL_TYPES = all_types(8)
SMALL_TYPES = [t for t in ALL_TYPES if t.rank <= 3]

# acceptance criterion number -> (passed, description), filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def type_id(t):
    return str(t)


@pytest.fixture(params=ALL_TYPES, ids=type_id)
def cd(request):
    return build(request.param)


@pytest.fixture(params=SMALL_TYPES, ids=type_id)
def small_cd(request):
    return build(request.param)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {text}")
