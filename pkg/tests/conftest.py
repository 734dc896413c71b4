import numpy as np
import pytest

from harmonic_simplex import Simplex, normalize_rows

R2 = np.sqrt(0.5)
R3 = np.sqrt(3.0)

# name -> (passed, detail); filled by test_acceptance, printed at session end
ACCEPTANCE = {}


@pytest.fixture
def t2():
    """Right triangle x >= 0, y >= 0, x + y <= 1."""
    return Simplex([[-1.0, 0.0], [0.0, -1.0], [R2, R2]], [0.0, 0.0, R2])


@pytest.fixture
def e2():
    """Equilateral triangle with vertices (0,0), (1,0), (1/2, sqrt(3)/2)."""
    return Simplex([[0.0, -1.0], [R3 / 2, 0.5], [-R3 / 2, 0.5]], [0.0, R3 / 2, 0.0])


@pytest.fixture
def flipped_t2():
    """T2 with the last normal negated: the open quadrant x, y >= 0."""
    return Simplex([[-1.0, 0.0], [0.0, -1.0], [-R2, -R2]], [0.0, 0.0, R2])


@pytest.fixture
def interval():
    return normalize_rows([[-1.0], [1.0]], [0.0, 1.0])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
