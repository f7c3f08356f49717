import cmath
import math

import numpy as np
import pytest

from powerlimit.iteration import iterate

J = np.full((2, 2), 0.5, dtype=complex)
I2 = np.eye(2, dtype=complex)
QUARTER = np.full((2, 2), 0.25, dtype=complex)
# [[0.5, 0.5i], [0.5i, 0.5]]: columns sum to 1 in modulus, b12*b21 = -0.25
ROT_I = np.array([[0.5, 0.5j], [0.5j, 0.5]])
W = cmath.exp(1j * math.pi / 4)
# idempotent twist of J
TWISTED_J = np.array([[0.5, 0.5 * W], [0.5 / W, 0.5]])

_CRITERIA = []


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # keep JIT compilation out of timed sections
    iterate(J)


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(label, passed, detail)``."""

    def record(label, passed, detail=""):
        _CRITERIA.append((label, bool(passed), detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}  {detail}")
