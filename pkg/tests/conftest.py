import itertools
import time

import pytest

from gjinv import DenseMatrix, from_rows
from gjinv.analysis import cofactor_det, gen_random_integer

PAPER_MATRIX = [[1, 1, 1], [1, 2, 3], [1, 3, 6]]
# exact integer inverse; confirmed against adjugate_inverse in test_analysis
PAPER_INVERSE = [[3, -3, 1], [-3, 5, -2], [1, -2, 1]]

ACCEPTANCE_LINES = []


def sweep_matrices(count=500, magnitude=5):
    """Seeded random integer matrices, n cycling 2..6, |det| >= 1."""
    out = []
    for seed in itertools.count():
        n = 2 + seed % 5
        a = gen_random_integer(n, seed, magnitude)
        d = cofactor_det(a)
        if abs(d) >= 1:
            out.append((seed, a, d))
            if len(out) == count:
                return out


def permutation_matrix(perm) -> DenseMatrix:
    n = len(perm)
    return from_rows([[1.0 if perm[i] == j else 0.0 for j in range(n)] for i in range(n)])


def permutation_sign(perm) -> int:
    sign, seen = 1, set()
    for start in range(len(perm)):
        if start in seen:
            continue
        length, j = 0, start
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@pytest.fixture(scope="session")
def paper_matrix():
    return from_rows(PAPER_MATRIX)


@pytest.fixture(scope="session")
def paper_inverse():
    return from_rows(PAPER_INVERSE)


@pytest.fixture(scope="session")
def sweep():
    return sweep_matrices()


SUITE_BUDGET_S = 30.0
_session = {}


def pytest_sessionstart(session):
    _session["start"] = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    elapsed = _session["elapsed"] = time.perf_counter() - _session["start"]
    # the wall-clock budget is an acceptance criterion; enforce it when acceptance ran
    if elapsed >= SUITE_BUDGET_S and ACCEPTANCE_LINES and exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
        elapsed = _session.get("elapsed", 0.0)
        status = "PASS" if elapsed < SUITE_BUDGET_S else "FAIL"
        terminalreporter.write_line(
            f"[{status}] 7. test session wall-clock {elapsed:.1f} s < {SUITE_BUDGET_S:.0f} s")
