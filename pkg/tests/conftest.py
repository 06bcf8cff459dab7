"""Shared fixtures and the acceptance-criteria terminal summary."""

from __future__ import annotations

import re

import pytest

from orlov_kit.nakayama import CYCLIC, LINEAR, Relation, build_algebra


@pytest.fixture(scope="session")
def linear():
    """Factory for hereditary linear algebras, shared across the run."""
    cache = {}

    def get(n: int):
        if n not in cache:
            cache[n] = build_algebra(LINEAR, n, None)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def linear3_ab():
    return build_algebra(LINEAR, 3, Relation(1, 2))


@pytest.fixture(scope="session")
def cyclic_fixture():
    """Cyclic quiver on 4 vertices, relation = the 20-arrow path from vertex 1."""
    return build_algebra(CYCLIC, 4, Relation(1, 20))


def all_linear_algebras(n: int):
    """Every linear Nakayama algebra on n vertices: hereditary plus every
    legal single-path relation (length >= 2, start + length <= n + 1)."""
    yield build_algebra(LINEAR, n, None)
    for length in range(2, n + 1):
        for start in range(1, n - length + 2):
            yield build_algebra(LINEAR, n, Relation(start, length))


# ---------------------------------------------------------------------------
# acceptance summary: one printed pass/fail line per criterion
# ---------------------------------------------------------------------------

_ACCEPTANCE = re.compile(r"test_acceptance\.py::test_c(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes: dict[int, tuple[str, str]] = {}
    for status, flag in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL"), ("skipped", "SKIP")):
        for report in terminalreporter.stats.get(status, []):
            match = _ACCEPTANCE.search(getattr(report, "nodeid", ""))
            if not match:
                continue
            number = int(match.group(1))
            label = match.group(2).replace("_", " ")
            # setup/teardown reports of passing tests must not mask a FAIL
            if number not in outcomes or flag == "FAIL":
                outcomes[number] = (flag, label)
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(outcomes):
        flag, label = outcomes[number]
        terminalreporter.write_line(f"criterion {number:2d} {flag} - {label}")
