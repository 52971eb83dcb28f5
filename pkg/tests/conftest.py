"""
Shared pytest fixtures for molr unit tests.
Purpose: Small MOLR sets, a brute-force autotopism counter, random
         isotopism strategies, and logging/config isolation for every test.
Created: 2026-10-19
Last Updated: 2026-10-19
"""

import logging
from itertools import permutations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from molr.config import EnumerationSettings
from molr.core import Isotopism, MolrSet, validate_molr

# isolated_home is function-scoped and autouse; it only resets env and handlers
settings.register_profile("molr", suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile("molr")


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    """Point HOME at tmp_path and drop molr log handlers so tests never share state."""
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.delenv("MOLR_BUDGET", raising=False)
    monkeypatch.delenv("MOLR_WORKERS", raising=False)
    monkeypatch.delenv("MOLR_OUTPUT", raising=False)
    logger = logging.getLogger("molr")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    yield


@pytest.fixture
def square3():
    """The two orthogonal Latin squares of order 3."""
    return validate_molr([
        [[0, 1, 2], [1, 2, 0], [2, 0, 1]],
        [[0, 1, 2], [2, 0, 1], [1, 2, 0]],
    ])


@pytest.fixture
def mols4():
    """A 2-MOLS of order 4 (|Aut| = 96)."""
    return validate_molr([
        [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
        [[0, 1, 2, 3], [2, 3, 0, 1], [3, 2, 1, 0], [1, 0, 3, 2]],
    ])


@pytest.fixture
def rect_2x4():
    """A 2×4 2-MOLR whose first rows are not the identity."""
    return validate_molr([
        [[1, 0, 3, 2], [3, 2, 1, 0]],
        [[2, 3, 0, 1], [1, 0, 3, 2]],
    ])


@pytest.fixture
def serial_settings():
    """Single-process settings with the default budget."""
    return EnumerationSettings(workers=1)


def brute_force_aut_order(m: MolrSet) -> int:
    """Count autotopisms by trying every rectangle, row and column permutation."""
    n, k, t = m.n, m.k, m.t
    grids = m.grids
    count = 0
    for rect_perm in permutations(range(t)):
        for row_perm in permutations(range(k)):
            for col_perm in permutations(range(n)):
                if _fixes(grids, rect_perm, row_perm, col_perm, n, k):
                    count += 1
    return count


def _fixes(grids, rect_perm, row_perm, col_perm, n, k) -> bool:
    for q, src in enumerate(grids):
        dst = grids[rect_perm[q]]
        sym = {}
        for i in range(k):
            target = dst[row_perm[i]]
            for j in range(n):
                b = target[col_perm[j]]
                if sym.setdefault(src[i][j], b) != b:
                    return False
    return True


@pytest.fixture
def aut_oracle():
    """Brute-force |Aut(m)|; only usable for tiny sets."""
    return brute_force_aut_order


@st.composite
def isotopisms(draw, t: int, k: int, n: int) -> Isotopism:
    return Isotopism(
        tuple(draw(st.permutations(range(t)))),
        tuple(draw(st.permutations(range(k)))),
        tuple(draw(st.permutations(range(n)))),
        tuple(tuple(draw(st.permutations(range(n)))) for _ in range(t)),
    )
