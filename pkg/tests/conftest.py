import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from immvar.character import table_character  # noqa: E402
from immvar.permgrp import Perm, symmetric_group  # noqa: E402


def s3_standard():
    """The (2,1) character of S_3: 2 at e, 0 on transpositions, -1 on 3-cycles."""
    G = symmetric_group(3)
    return table_character(G, [2 if g.is_identity() else (-1 if g.sign() == 1 else 0) for g in G], label="(2,1)")


# class values of S_4 on cycle types 1111, 211, 22, 31, 4
S4_TABLE = {
    "trivial": (1, 1, 1, 1, 1),
    "sign": (1, -1, 1, 1, -1),
    "standard": (3, 1, -1, 0, -1),
    "standard_sign": (3, -1, -1, 0, 1),
    "two_two": (2, 0, 2, -1, 0),
}


def cycle_type(g: Perm) -> tuple:
    return tuple(sorted((len(c) for c in g.cycles()), reverse=True))


S4_TYPES = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]


def s4_character(name: str):
    G = symmetric_group(4)
    row = dict(zip(S4_TYPES, S4_TABLE[name]))
    return table_character(G, [row[cycle_type(g)] for g in G], label=name)


@pytest.fixture
def chi21():
    return s3_standard()


_ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): one acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    num, title = mark.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[num] = ("PASS" if report.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        status, title = _ACCEPTANCE[num]
        terminalreporter.write_line(f"{status} criterion {num:2d}: {title}")
