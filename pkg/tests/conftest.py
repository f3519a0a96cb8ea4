import pytest
from hypothesis import strategies as st

from hookmonoid import oracle
from hookmonoid.partitions import Partition

_acceptance = []


def partitions_up_to(n):
    for m in range(n + 1):
        yield from oracle.enumerate_partitions(m)


@st.composite
def partitions(draw, max_parts=8, max_part=8):
    parts = draw(st.lists(st.integers(1, max_part), max_size=max_parts))
    return Partition(tuple(sorted(parts, reverse=True)))


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
