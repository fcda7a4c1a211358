import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lorenzknots import build_grid, orbit_combinatorics, parse_word  # noqa: E402

FIG3 = "xxxyyyxyy"
TREFOIL = "xyxyy"


@pytest.fixture(scope="session")
def fig3():
    oc = orbit_combinatorics(parse_word(FIG3))
    return oc, build_grid(oc)


@pytest.fixture(scope="session")
def trefoil():
    oc = orbit_combinatorics(parse_word(TREFOIL))
    return oc, build_grid(oc)
