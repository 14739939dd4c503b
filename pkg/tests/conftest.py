import json
import pathlib

import pytest

from wktau.tau import free_energy, z_in_family

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"


def load_golden(name):
    with open(GOLDEN_DIR / name) as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def z_T_12():
    return z_in_family(12, "T")


@pytest.fixture(scope="session")
def z_t_12():
    return z_in_family(12, "t")


@pytest.fixture(scope="session")
def f_t_12(z_t_12):
    return free_energy(z_t_12)
