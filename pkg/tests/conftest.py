"""Shared corpora and the acceptance report hook.

The exhaustive corpus (every connected simple two-colored graph on up
to five labeled vertices) and the seeded random multigraph pool are
built once per session; the acceptance module leans on both heavily
and the unit modules borrow slices.
"""

from __future__ import annotations

import random

import pytest

from pcgraph import oracle

RANDOM_SEED = 20260816
RANDOM_POOL = 10_000

# one line per acceptance criterion, echoed at the end of the run
CRITERION_LINES: dict[int, str] = {}


def record_criterion(num: int, ok: bool, detail: str) -> None:
    line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    CRITERION_LINES[num] = line
    print(line)


@pytest.fixture(scope="session")
def corpus_small():
    return list(oracle.iter_connected_two_colored(n_max=4))


@pytest.fixture(scope="session")
def corpus_full():
    return list(oracle.iter_connected_two_colored(n_max=5))


@pytest.fixture(scope="session")
def random_corpus():
    rng = random.Random(RANDOM_SEED)
    return [oracle.random_multigraph(rng) for _ in range(RANDOM_POOL)]


def pytest_terminal_summary(terminalreporter):
    if not CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERION_LINES):
        terminalreporter.write_line(CRITERION_LINES[num])
