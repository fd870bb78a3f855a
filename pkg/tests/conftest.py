import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from pilottery.fixtures import mini_fixture, pa_fixture_proofs
from pilottery.pidigits import build_cache

EXTENDED = os.environ.get("PILOTTERY_EXTENDED") == "1"

requires_extended = pytest.mark.skipif(
    not EXTENDED, reason="extended target; set PILOTTERY_EXTENDED=1")


@pytest.fixture(scope="session")
def cache_1k():
    return build_cache(1000, "machin")


@pytest.fixture(scope="session")
def cache_110k():
    # covers placements up to 1e5 at widths up to 6
    return build_cache(110_000, "machin")


@pytest.fixture(scope="session")
def mini():
    return mini_fixture()


@pytest.fixture(scope="session")
def pa_proofs():
    return pa_fixture_proofs()
