from hypothesis import strategies as st
import pytest

from combinatorics import AmbientSpace
from config import EngineConfig
from infra.run_log import set_run_dir


A22 = AmbientSpace.type_a(2, 2)
A33 = AmbientSpace.type_a(3, 3)
B2 = AmbientSpace.type_b(2)
B3 = AmbientSpace.type_b(3)
B4 = AmbientSpace.type_b(4)
C3 = AmbientSpace.type_c(3)


@st.composite
def box_partitions(draw, k, m):
    """Partitions inside the k x m rectangle."""
    parts = draw(st.lists(st.integers(min_value=1, max_value=m), max_size=k))
    return tuple(sorted(parts, reverse=True))


@st.composite
def staircase_partitions(draw, n):
    """Strict partitions inside the staircase rho_n."""
    values = draw(st.sets(st.integers(min_value=1, max_value=n)))
    return tuple(sorted(values, reverse=True))


@pytest.fixture
def quiet_config(tmp_path):
    return EngineConfig(log_dir=str(tmp_path / "runs"), write_run_log=False)


@pytest.fixture
def run_dir(tmp_path):
    path = tmp_path / "run"
    path.mkdir()
    set_run_dir(path)
    yield path
    set_run_dir(None)
