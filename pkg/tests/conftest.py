import pytest

from localic import GenSpec, chain_frame, boolean_frame
from localic.generators import gen_frames


@pytest.fixture(scope="session")
def tier1_frames():
    """Downset frames of all posets with at most 4 points."""
    return gen_frames(GenSpec("all-posets-up-to", 4))


@pytest.fixture(scope="session")
def c3():
    return chain_frame(3)


@pytest.fixture(scope="session")
def c4():
    return chain_frame(4)


@pytest.fixture(scope="session")
def b2():
    return boolean_frame(2)
