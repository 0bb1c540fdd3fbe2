import sys
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from bench_creation.reach import SIX_EDGE_TEXT  # noqa: E402
from program_parsing.parser import parse_goal, parse_program  # noqa: E402


@pytest.fixture
def six_edge_text():
    return SIX_EDGE_TEXT


@pytest.fixture
def six_edge_program():
    return parse_program(SIX_EDGE_TEXT)


@pytest.fixture
def goal():
    return parse_goal


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def six_edge_path():
    return ROOT / "misc_files" / "six_edge_reach.plp"
