import pytest

from bfree_toeplitz import eta_window, family_for_window, make_family


@pytest.fixture(scope="session")
def fam357():
    return make_family([3, 5, 7])


@pytest.fixture(scope="session")
def deep_family(fam357):
    # decides eta out to radius 10 * p_3, enough for every scan in the suite
    return family_for_window(fam357, -8400, 8400)


@pytest.fixture(scope="session")
def eta_wide(deep_family):
    return eta_window(deep_family, -8400, 8400)
